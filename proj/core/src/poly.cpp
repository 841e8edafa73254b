#include "evoclass/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace evoclass::poly {

struct Ring::Impl {
  gf::Field field;
  std::vector<std::string> names;
};

Ring Ring::make(gf::Field field, std::vector<std::string> var_names) {
  auto impl = std::make_shared<Impl>();
  impl->field = std::move(field);
  impl->names = std::move(var_names);
  return Ring(std::move(impl));
}

const gf::Field& Ring::field() const { return impl_->field; }
std::uint32_t Ring::nvars() const { return static_cast<std::uint32_t>(impl_->names.size()); }
const std::string& Ring::var_name(std::uint32_t i) const { return impl_->names[i]; }

std::optional<std::uint32_t> Ring::var_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < nvars(); ++i)
    if (impl_->names[i] == name) return i;
  return std::nullopt;
}

bool Ring::operator==(const Ring& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return impl_->field == o.impl_->field && impl_->names == o.impl_->names;
}

std::uint64_t Monomial::degree() const { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < e.size(); ++i) out.e[i] += other.e[i];
  return out;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < e.size(); ++i) out.e[i] -= other.e[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] = std::max(a.e[i], b.e[i]);
  return out;
}

MonomialOrder::MonomialOrder(OrderTag tag, std::uint32_t nvars) : tag_(tag) {
  priority_.resize(nvars);
  std::iota(priority_.begin(), priority_.end(), 0u);
}

MonomialOrder::MonomialOrder(OrderTag tag, std::vector<std::uint32_t> var_priority)
    : tag_(tag), priority_(std::move(var_priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (auto v : priority_) {
    if (v >= priority_.size() || seen[v]) raise(Errc::bad_permutation, "variable priority is not a permutation");
    seen[v] = true;
  }
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (tag_ == OrderTag::lex) {
    for (std::uint32_t v : priority_) {
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
  }
  // grevlex: total degree first, ties broken by the last differing variable
  // in priority order, smaller exponent winning.
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t r = priority_.size(); r-- > 0;) {
    std::uint32_t v = priority_[r];
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
  }
  return 0;
}

namespace {

// Storage order: plain exponent-lex descending.  Keeps term vectors canonical
// without tying the value type to any term order.
bool storage_before(const Monomial& a, const Monomial& b) { return b.e < a.e; }

void canonicalize(std::vector<Term>& terms, const gf::Field& field) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return storage_before(x.m, y.m); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = field.add(out.back().c, t.c);
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::zero(const Ring& ring) {
  Polynomial p;
  p.ring_ = ring;
  return p;
}

Polynomial Polynomial::constant(const Ring& ring, std::uint16_t c) {
  return monomial(ring, Monomial::one(ring.nvars()), c);
}

Polynomial Polynomial::variable(const Ring& ring, std::uint32_t var, Exp e) {
  Monomial m = Monomial::one(ring.nvars());
  if (var >= ring.nvars()) raise(Errc::bad_argument, "variable index out of range");
  m.e[var] = e;
  return monomial(ring, std::move(m), gf::Field::one());
}

Polynomial Polynomial::monomial(const Ring& ring, Monomial m, std::uint16_t c) {
  Polynomial p;
  p.ring_ = ring;
  if (m.e.size() != ring.nvars()) raise(Errc::dimension_mismatch, "monomial arity mismatch");
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  Polynomial p;
  p.ring_ = ring;
  for (const auto& t : terms)
    if (t.m.e.size() != ring.nvars()) raise(Errc::dimension_mismatch, "monomial arity mismatch");
  canonicalize(terms, ring.field());
  p.terms_ = std::move(terms);
  return p;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) raise(Errc::zero_polynomial, "zero polynomial has no leading term");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (ord.greater(t.m, best->m)) best = &t;
  return *best;
}

namespace {
void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) raise(Errc::ring_mismatch, "polynomials from different rings");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::vector<Term> merged = terms_;
  merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(ring_, std::move(merged));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.c = ring_.field().neg(t.c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint16_t c) const {
  if (c == 0) return zero(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.c = ring_.field().mul(t.c, c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint16_t c) const {
  if (c == 0) return zero(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) {
    t.m = t.m.times(m);
    t.c = ring_.field().mul(t.c, c);
  }
  // Multiplying by a fixed monomial preserves the storage order.
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  const gf::Field& f = ring_.field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(Term{a.m.times(b.m), f.mul(a.c, b.c)});
  return from_terms(ring_, std::move(prod));
}

std::uint16_t Polynomial::evaluate(std::span<const std::uint16_t> point) const {
  if (point.size() != ring_.nvars()) raise(Errc::dimension_mismatch, "evaluation point arity mismatch");
  const gf::Field& f = ring_.field();
  std::uint16_t acc = 0;
  for (const auto& t : terms_) {
    std::uint16_t v = t.c;
    for (std::uint32_t i = 0; i < point.size() && v != 0; ++i)
      if (t.m.e[i]) v = f.mul(v, f.pow(point[i], t.m.e[i]));
    acc = f.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::fold_exponents() const {
  const std::uint32_t q = ring_.field().q();
  std::vector<Term> folded = terms_;
  for (auto& t : folded)
    for (auto& e : t.m.e)
      while (e >= q) e -= q - 1;
  return from_terms(ring_, std::move(folded));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    bool has_vars = !t.m.is_one();
    if (t.c != gf::Field::one() || !has_vars) out << ring_.field().encode(t.c);
    bool printed = t.c != gf::Field::one() || !has_vars;
    for (std::uint32_t v = 0; v < ring_.nvars(); ++v) {
      if (!t.m.e[v]) continue;
      if (printed) out << "*";
      printed = true;
      out << ring_.var_name(v);
      if (t.m.e[v] > 1) out << "^" << t.m.e[v];
    }
  }
  return out.str();
}

bool Polynomial::operator<(const Polynomial& o) const {
  for (std::size_t i = 0; i < terms_.size() && i < o.terms_.size(); ++i) {
    if (terms_[i].m != o.terms_[i].m) return storage_before(o.terms_[i].m, terms_[i].m);
    if (terms_[i].c != o.terms_[i].c) return terms_[i].c < o.terms_[i].c;
  }
  return terms_.size() < o.terms_.size();
}

// ---------------------------------------------------------------------------
// Division.

namespace {

struct DescCmp {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->cmp(a, b) > 0; }
};

using WorkPoly = std::map<Monomial, std::uint16_t, DescCmp>;

WorkPoly to_work(const Polynomial& p, const MonomialOrder& ord) {
  WorkPoly w(DescCmp{&ord});
  for (const auto& t : p.terms()) w.emplace(t.m, t.c);
  return w;
}

Polynomial from_work(const Ring& ring, const WorkPoly& w) {
  std::vector<Term> terms;
  terms.reserve(w.size());
  for (const auto& [m, c] : w) terms.push_back(Term{m, c});
  return Polynomial::from_terms(ring, std::move(terms));
}

// work -= (m, c) * g
void subtract_multiple(WorkPoly& work, const Polynomial& g, const Monomial& m, std::uint16_t c,
                       const gf::Field& f) {
  for (const auto& t : g.terms()) {
    Monomial key = t.m.times(m);
    std::uint16_t delta = f.mul(t.c, c);
    auto it = work.find(key);
    if (it == work.end()) {
      if (delta != 0) work.emplace(std::move(key), f.neg(delta));
    } else {
      it->second = f.sub(it->second, delta);
      if (it->second == 0) work.erase(it);
    }
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  for (const auto& g : divisors)
    if (g.ring() != f.ring()) raise(Errc::ring_mismatch, "divisor from a different ring");
  const gf::Field& field = f.ring().field();

  struct Divisor {
    const Polynomial* g;
    const Monomial* lm;
    std::uint16_t lc;
  };
  std::vector<Divisor> ds;
  ds.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) continue;
    const Term& lt = g.leading_term(ord);
    ds.push_back(Divisor{&g, &lt.m, lt.c});
  }

  WorkPoly work = to_work(f, ord);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto lead = work.begin();
    const Monomial& m = lead->first;
    std::uint16_t c = lead->second;
    bool reduced = false;
    for (const auto& d : ds) {
      if (!d.lm->divides(m)) continue;
      Monomial quot = m.divided_by(*d.lm);
      std::uint16_t factor = field.div(c, d.lc);
      subtract_multiple(work, *d.g, quot, factor, field);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(Term{m, c});
      work.erase(work.begin());
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  check_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) raise(Errc::zero_polynomial, "s-polynomial of a zero polynomial");
  const gf::Field& field = f.ring().field();
  const Term& ltf = f.leading_term(ord);
  const Term& ltg = g.leading_term(ord);
  Monomial l = Monomial::lcm(ltf.m, ltg.m);
  Polynomial left = f.times_term(l.divided_by(ltf.m), field.inv(ltf.c));
  Polynomial right = g.times_term(l.divided_by(ltg.m), field.inv(ltg.c));
  return left - right;
}

}  // namespace evoclass::poly
