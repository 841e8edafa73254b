#ifndef EVOCLASS_FIELD_HPP
#define EVOCLASS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evoclass/error.hpp"

namespace evoclass::gf {

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 16;

class Element;

/// Finite field GF(p^k) with exact arithmetic on canonically indexed elements.
///
/// Elements are addressed by an index in [0, q).  The index encodes the
/// coefficient tuple (c0, c1, ..., c_{k-1}) of the residue polynomial
/// (constant term c0) as sum(c_i * p^i), so index order is the canonical
/// element order used by every enumeration and tie-break downstream.
/// For k > 1 the modulus is the first irreducible monic polynomial of
/// degree k, taking coefficient tuples (m0, m1, ..., m_{k-1}) in
/// lexicographic order with the constant term compared first; the choice is
/// deterministic so labels are reproducible across runs and machines.
class Field {
 public:
  Field() = default;  // empty handle; only assignable

  static Field make(std::uint32_t p, std::uint32_t k = 1,
                    std::uint64_t size_cap = kDefaultSizeCap);

  bool valid() const { return impl_ != nullptr; }
  std::uint32_t p() const;
  std::uint32_t k() const;
  std::uint32_t q() const;
  /// Modulus coefficients m0..m_{k-1} (monic x^k term implied); empty for k = 1.
  const std::vector<std::uint16_t>& modulus() const;

  // Index-level arithmetic; the hot paths work on raw indices.
  std::uint16_t add(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t neg(std::uint16_t a) const;
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t inv(std::uint16_t a) const;  // Errc::division_by_zero on 0
  std::uint16_t div(std::uint16_t a, std::uint16_t b) const { return mul(a, inv(b)); }
  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;
  static constexpr std::uint16_t zero() { return 0; }
  static constexpr std::uint16_t one() { return 1; }

  /// Raw q*q operation tables for small fields, laid out as table[a*q + b];
  /// nullptr when the field is too large to tabulate.  Hot search loops use
  /// these directly.
  const std::uint16_t* add_table() const;
  const std::uint16_t* mul_table() const;

  /// Coefficient tuple (c0..c_{k-1}) of the element at `idx`.
  std::vector<std::uint16_t> coeffs(std::uint16_t idx) const;

  Element element(std::uint16_t idx) const;
  /// All q elements in canonical index order; starts 0, 1, ...
  std::vector<Element> elements() const;

  /// Textual encoding: decimal residue for k = 1, "[c0,c1,...]" for k > 1.
  std::string encode(std::uint16_t idx) const;
  std::optional<std::uint16_t> parse(std::string_view text) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A field element bound to its field; checked value-semantics layer over the
/// index API.
class Element {
 public:
  Element() = default;
  Element(Field field, std::uint16_t idx) : field_(std::move(field)), idx_(idx) {}

  const Field& field() const { return field_; }
  std::uint16_t index() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }
  std::vector<std::uint16_t> coeffs() const { return field_.coeffs(idx_); }
  std::string str() const { return field_.encode(idx_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element operator-() const { return Element(field_, field_.neg(idx_)); }
  Element inverse() const { return Element(field_, field_.inv(idx_)); }
  Element pow(std::uint64_t e) const { return Element(field_, field_.pow(idx_, e)); }

  bool operator==(const Element& o) const { return idx_ == o.idx_ && field_ == o.field_; }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const { return idx_ < o.idx_; }

 private:
  Field field_;
  std::uint16_t idx_ = 0;
};

/// Orbit {c * m^exponent : m != 0} as indices in ascending canonical order.
/// exponent must be 2 or 3; c must be nonzero.
std::vector<std::uint16_t> unit_orbit(const Field& field, std::uint16_t c, unsigned exponent);

}  // namespace evoclass::gf

#endif
