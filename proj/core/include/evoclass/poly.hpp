#ifndef EVOCLASS_POLY_HPP
#define EVOCLASS_POLY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evoclass/field.hpp"

namespace evoclass::poly {

/// Polynomial ring over a finite field with a fixed, named variable set.
class Ring {
 public:
  Ring() = default;
  static Ring make(gf::Field field, std::vector<std::string> var_names);

  const gf::Field& field() const;
  std::uint32_t nvars() const;
  const std::string& var_name(std::uint32_t i) const;
  std::optional<std::uint32_t> var_index(std::string_view name) const;

  bool valid() const { return impl_ != nullptr; }
  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  struct Impl;
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

using Exp = std::uint32_t;

/// Exponent vector; one entry per ring variable.
struct Monomial {
  std::vector<Exp> e;

  static Monomial one(std::uint32_t nvars) { return Monomial{std::vector<Exp>(nvars, 0)}; }
  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  /// Quotient this / other; requires other.divides(*this).
  Monomial divided_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  /// Storage tie-break order (plain exponent lex); no algebraic meaning.
  bool operator<(const Monomial& o) const { return e < o.e; }
};

enum class OrderTag { lex, grevlex };

/// Admissible monomial term order: lex or grevlex over a variable priority
/// list (default priority x1 > x2 > ... > xn).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderTag tag, std::uint32_t nvars);
  MonomialOrder(OrderTag tag, std::vector<std::uint32_t> var_priority);

  OrderTag tag() const { return tag_; }
  std::uint32_t nvars() const { return static_cast<std::uint32_t>(priority_.size()); }
  const std::vector<std::uint32_t>& priority() const { return priority_; }

  /// Negative when a is smaller than b, zero when equal.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const { return tag_ == o.tag_ && priority_ == o.priority_; }

 private:
  OrderTag tag_ = OrderTag::grevlex;
  std::vector<std::uint32_t> priority_;  // priority_[rank] = variable index
};

struct Term {
  Monomial m;
  std::uint16_t c = 0;

  bool operator==(const Term& o) const { return c == o.c && m == o.m; }
  bool operator!=(const Term& o) const { return !(*this == o); }
};

/// Sparse multivariate polynomial; zero coefficients are never stored and
/// each monomial appears at most once.  Terms are kept in a fixed storage
/// order so equality is structural; term orders are applied by operations.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(const Ring& ring);
  static Polynomial constant(const Ring& ring, std::uint16_t c);
  static Polynomial variable(const Ring& ring, std::uint32_t var, Exp e = 1);
  static Polynomial monomial(const Ring& ring, Monomial m, std::uint16_t c);
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::uint64_t total_degree() const;

  /// Leading term with respect to the given order.
  const Term& leading_term(const MonomialOrder& ord) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint16_t c) const;
  Polynomial times_term(const Monomial& m, std::uint16_t c) const;

  std::uint16_t evaluate(std::span<const std::uint16_t> point) const;

  /// Replaces every exponent e >= q by its field-equation residue (repeatedly
  /// e -> e - (q-1)), merging any coinciding terms.  Only sound inside ideals
  /// that contain the field equations.
  Polynomial fold_exponents() const;

  std::string str() const;

  bool operator==(const Polynomial& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  /// Storage-order comparison for deterministic sorting of polynomial sets.
  bool operator<(const Polynomial& o) const;

 private:
  Ring ring_;
  std::vector<Term> terms_;  // storage order: exponent-lex descending
};

/// Remainder of f under full multivariate division by G: no monomial of the
/// result is divisible by any leading monomial of G, and f minus the result
/// lies in the ideal generated by G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

/// lcm(LM f, LM g)/LT(f) * f - lcm(LM f, LM g)/LT(g) * g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace evoclass::poly

#endif
