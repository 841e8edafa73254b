#include "evoclass/field.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace evoclass::gf {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), coefficient 0 first.  Only used while
// selecting and validating the field modulus.
using PPoly = std::vector<std::uint16_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic b.
PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
  ptrim(a);
  while (a.size() >= b.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint32_t v = a[shift + i] + p * p - lead * b[i] % p;
      a[shift + i] = static_cast<std::uint16_t>(v % p);
    }
    ptrim(a);
  }
  return a;
}

bool is_irreducible(const PPoly& m, std::uint32_t p) {
  // m is monic of degree k >= 2.  Trial-divide by every monic polynomial of
  // degree 1..k/2; exhaustive but cheap at supported sizes.
  std::size_t k = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      PPoly div(d + 1, 0);
      div[d] = 1;
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint16_t>(rest % p);
        rest /= p;
      }
      if (pmod(m, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint16_t> modulus;  // m0..m_{k-1}, monic x^k implied; empty for k==1

  // Full operation tables for small fields; hot paths index them directly.
  static constexpr std::uint32_t kTableLimit = 512;
  std::vector<std::uint16_t> add_table;  // q*q
  std::vector<std::uint16_t> mul_table;  // q*q
  std::vector<std::uint16_t> neg_table;  // q
  std::vector<std::uint16_t> inv_table;  // q (inv_table[0] unused)

  bool has_tables() const { return !add_table.empty(); }

  std::vector<std::uint16_t> coeffs(std::uint16_t idx) const {
    std::vector<std::uint16_t> c(k);
    std::uint32_t rest = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = static_cast<std::uint16_t>(rest % p);
      rest /= p;
    }
    return c;
  }

  std::uint16_t from_coeffs(const std::vector<std::uint16_t>& c) const {
    std::uint32_t idx = 0;
    for (std::uint32_t i = k; i-- > 0;) idx = idx * p + c[i];
    return static_cast<std::uint16_t>(idx);
  }

  std::uint16_t add_raw(std::uint16_t a, std::uint16_t b) const {
    if (k == 1) return static_cast<std::uint16_t>((a + b) % p);
    auto ca = coeffs(a), cb = coeffs(b);
    for (std::uint32_t i = 0; i < k; ++i) ca[i] = static_cast<std::uint16_t>((ca[i] + cb[i]) % p);
    return from_coeffs(ca);
  }

  std::uint16_t neg_raw(std::uint16_t a) const {
    if (k == 1) return static_cast<std::uint16_t>((p - a) % p);
    auto c = coeffs(a);
    for (auto& v : c) v = static_cast<std::uint16_t>((p - v) % p);
    return from_coeffs(c);
  }

  std::uint16_t mul_raw(std::uint16_t a, std::uint16_t b) const {
    if (k == 1) return static_cast<std::uint16_t>(std::uint64_t(a) * b % p);
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<std::uint32_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint32_t(ca[i]) * cb[j]) % p;
    // Reduce by the monic modulus: x^k == -(m0 + m1 x + ... + m_{k-1} x^{k-1}).
    for (std::uint32_t d = 2 * k - 2; d >= k && d < prod.size(); --d) {
      std::uint32_t lead = prod[d];
      if (lead) {
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k; ++i)
          prod[d - k + i] = (prod[d - k + i] + std::uint32_t(p) * p - lead * modulus[i] % p) % p;
      }
    }
    std::vector<std::uint16_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = static_cast<std::uint16_t>(prod[i]);
    return from_coeffs(c);
  }

  std::uint16_t pow_raw(std::uint16_t a, std::uint64_t e) const {
    std::uint16_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul_raw(r, base);
      base = mul_raw(base, base);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    if (q > kTableLimit) return;
    add_table.resize(std::size_t(q) * q);
    mul_table.resize(std::size_t(q) * q);
    neg_table.resize(q);
    inv_table.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      neg_table[a] = neg_raw(static_cast<std::uint16_t>(a));
      for (std::uint32_t b = 0; b < q; ++b) {
        add_table[std::size_t(a) * q + b] = add_raw(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b));
        std::uint16_t m = mul_raw(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b));
        mul_table[std::size_t(a) * q + b] = m;
        if (m == 1) inv_table[a] = static_cast<std::uint16_t>(b);
      }
    }
  }
};

Field Field::make(std::uint32_t p, std::uint32_t k, std::uint64_t size_cap) {
  if (!is_prime(p)) raise(Errc::not_prime, "field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) raise(Errc::bad_degree, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > size_cap)
      raise(Errc::size_cap_exceeded,
            "field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds the size cap " +
                std::to_string(size_cap));
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<std::uint32_t>(q);
  if (k > 1) {
    // First irreducible monic polynomial, coefficient tuples (m0,...,m_{k-1})
    // in lexicographic order with m0 compared first.
    std::uint64_t count = q;  // p^k tuples
    for (std::uint64_t t = 0; t < count; ++t) {
      // Tuple index t encodes (m0, ..., m_{k-1}) with m0 in the most
      // significant digit, so m0 varies slowest across the scan.
      PPoly cand(k + 1, 0);
      cand[k] = 1;
      std::uint64_t r2 = t;
      for (std::uint32_t i = k; i-- > 0;) {
        cand[i] = static_cast<std::uint16_t>(r2 % p);
        r2 /= p;
      }
      if (is_irreducible(cand, p)) {
        impl->modulus.assign(cand.begin(), cand.begin() + k);
        break;
      }
    }
  }
  impl->build_tables();
  return Field(std::move(impl));
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::k() const { return impl_->k; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint16_t>& Field::modulus() const { return impl_->modulus; }

std::uint16_t Field::add(std::uint16_t a, std::uint16_t b) const {
  const Impl& f = *impl_;
  return f.has_tables() ? f.add_table[std::size_t(a) * f.q + b] : f.add_raw(a, b);
}

std::uint16_t Field::neg(std::uint16_t a) const {
  const Impl& f = *impl_;
  return f.has_tables() ? f.neg_table[a] : f.neg_raw(a);
}

std::uint16_t Field::sub(std::uint16_t a, std::uint16_t b) const { return add(a, neg(b)); }

std::uint16_t Field::mul(std::uint16_t a, std::uint16_t b) const {
  const Impl& f = *impl_;
  return f.has_tables() ? f.mul_table[std::size_t(a) * f.q + b] : f.mul_raw(a, b);
}

std::uint16_t Field::inv(std::uint16_t a) const {
  if (a == 0) raise(Errc::division_by_zero, "inverse of zero field element");
  const Impl& f = *impl_;
  return f.has_tables() ? f.inv_table[a] : f.pow_raw(a, f.q - 2);
}

std::uint16_t Field::pow(std::uint16_t a, std::uint64_t e) const { return impl_->pow_raw(a, e); }

const std::uint16_t* Field::add_table() const {
  return impl_->has_tables() ? impl_->add_table.data() : nullptr;
}

const std::uint16_t* Field::mul_table() const {
  return impl_->has_tables() ? impl_->mul_table.data() : nullptr;
}

std::vector<std::uint16_t> Field::coeffs(std::uint16_t idx) const { return impl_->coeffs(idx); }

Element Field::element(std::uint16_t idx) const {
  if (idx >= impl_->q) raise(Errc::bad_argument, "element index out of range");
  return Element(*this, idx);
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(impl_->q);
  for (std::uint32_t i = 0; i < impl_->q; ++i) out.emplace_back(*this, static_cast<std::uint16_t>(i));
  return out;
}

std::string Field::encode(std::uint16_t idx) const {
  if (impl_->k == 1) return std::to_string(idx);
  auto c = impl_->coeffs(idx);
  std::string s = "[";
  for (std::uint32_t i = 0; i < impl_->k; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ']';
  return s;
}

std::optional<std::uint16_t> Field::parse(std::string_view text) const {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.empty()) return std::nullopt;
  auto parse_uint = [&](std::string_view s) -> std::optional<std::uint32_t> {
    s = strip(s);
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return std::nullopt;
      v = v * 10 + std::uint32_t(ch - '0');
      if (v > impl_->q * std::uint64_t(impl_->q) + 9) return std::nullopt;
    }
    return static_cast<std::uint32_t>(v);
  };
  if (text.front() == '[') {
    if (impl_->k == 1 || text.back() != ']') return std::nullopt;
    text.remove_prefix(1);
    text.remove_suffix(1);
    std::vector<std::uint16_t> c;
    std::size_t start = 0;
    std::string body(text);
    while (true) {
      std::size_t comma = body.find(',', start);
      std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto v = parse_uint(piece);
      if (!v || *v >= impl_->p) return std::nullopt;
      c.push_back(static_cast<std::uint16_t>(*v));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (c.size() != impl_->k) return std::nullopt;
    return impl_->from_coeffs(c);
  }
  if (impl_->k != 1) return std::nullopt;
  auto v = parse_uint(text);
  if (!v || *v >= impl_->p) return std::nullopt;
  return static_cast<std::uint16_t>(*v);
}

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  return impl_->p == other.impl_->p && impl_->k == other.impl_->k && impl_->modulus == other.impl_->modulus;
}

namespace {
void check_same_field(const Element& a, const Element& b) {
  if (a.field() != b.field()) raise(Errc::field_mismatch, "operands belong to different fields");
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  check_same_field(a, b);
  return Element(a.field(), a.field().add(a.index(), b.index()));
}

Element operator-(const Element& a, const Element& b) {
  check_same_field(a, b);
  return Element(a.field(), a.field().sub(a.index(), b.index()));
}

Element operator*(const Element& a, const Element& b) {
  check_same_field(a, b);
  return Element(a.field(), a.field().mul(a.index(), b.index()));
}

Element operator/(const Element& a, const Element& b) {
  check_same_field(a, b);
  return Element(a.field(), a.field().div(a.index(), b.index()));
}

std::vector<std::uint16_t> unit_orbit(const Field& field, std::uint16_t c, unsigned exponent) {
  if (c == 0) raise(Errc::zero_element, "unit orbit requires a nonzero element");
  if (exponent != 2 && exponent != 3) raise(Errc::bad_argument, "unit orbit exponent must be 2 or 3");
  std::set<std::uint16_t> orbit;
  for (std::uint32_t m = 1; m < field.q(); ++m)
    orbit.insert(field.mul(c, field.pow(static_cast<std::uint16_t>(m), exponent)));
  return std::vector<std::uint16_t>(orbit.begin(), orbit.end());
}

}  // namespace evoclass::gf
