#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "evoclass/groebner.hpp"
#include "evoclass/text.hpp"

using namespace evoclass;
using poly::GroebnerBasis;
using poly::MonomialOrder;
using poly::OrderTag;
using poly::Polynomial;
using poly::Ring;

namespace {

Ring ring_q(std::uint32_t q, std::vector<std::string> vars) {
  return Ring::make(gf::Field::make(q), std::move(vars));
}

Polynomial P(const Ring& r, const char* s) { return text::parse_polynomial(r, s); }

std::vector<Polynomial> with_field_equations(const Ring& r, std::vector<Polynomial> gens) {
  const std::uint32_t q = r.field().q();
  for (std::uint32_t v = 0; v < r.nvars(); ++v)
    gens.push_back(Polynomial::variable(r, v, q) - Polynomial::variable(r, v));
  return gens;
}

// Independent point count: evaluate the generators over the whole affine box.
std::uint64_t count_zeros_by_evaluation(const Ring& r, const std::vector<Polynomial>& gens) {
  const std::uint32_t q = r.field().q();
  std::uint64_t total = 1;
  for (std::uint32_t v = 0; v < r.nvars(); ++v) total *= q;
  std::uint64_t count = 0;
  std::vector<std::uint16_t> pt(r.nvars());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& c : pt) {
      c = static_cast<std::uint16_t>(rest % q);
      rest /= q;
    }
    bool zero = std::all_of(gens.begin(), gens.end(),
                            [&](const Polynomial& g) { return g.evaluate(pt) == 0; });
    if (zero) ++count;
  }
  return count;
}

std::multiset<std::string> basis_strings(const GroebnerBasis& b) {
  std::multiset<std::string> out;
  for (const auto& g : b.members) out.insert(g.str());
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  SUBCASE("common zero ideal collapses") {
    Ring r = ring_q(3, {"x"});
    auto basis = poly::buchberger({P(r, "x^2 - 1"), P(r, "x - 1")}, MonomialOrder(OrderTag::lex, 1));
    REQUIRE(basis.members.size() == 1);
    CHECK(basis.members[0] == P(r, "x - 1"));
    // Independent check: x^2 - 1 is divisible by x - 1.
    std::vector<Polynomial> divisor{P(r, "x - 1")};
    CHECK(poly::normal_form(P(r, "x^2 - 1"), divisor, basis.order).is_zero());
  }
  SUBCASE("single monic generator is its own basis") {
    Ring r = ring_q(5, {"x"});
    auto basis = poly::buchberger({P(r, "x^5 - x")}, MonomialOrder(OrderTag::lex, 1));
    REQUIRE(basis.members.size() == 1);
    CHECK(basis.members[0] == P(r, "x^5 - x"));
  }
  SUBCASE("unit ideal") {
    Ring r = ring_q(3, {"x", "y"});
    auto basis = poly::buchberger({P(r, "2")}, MonomialOrder(OrderTag::grevlex, 2));
    REQUIRE(basis.members.size() == 1);
    CHECK(basis.members[0] == Polynomial::constant(r, 1));
    CHECK(poly::standard_monomial_count(basis) == 0);
  }
  SUBCASE("all-zero input yields the zero ideal basis") {
    Ring r = ring_q(3, {"x"});
    auto basis = poly::buchberger({Polynomial::zero(r)}, MonomialOrder(OrderTag::lex, 1));
    CHECK(basis.members.empty());
    CHECK_FALSE(poly::standard_monomial_count(basis).has_value());
  }
}

TEST_CASE("standard monomial counts") {
  Ring r2 = ring_q(2, {"x", "y"});
  auto basis = poly::buchberger(with_field_equations(r2, {}), MonomialOrder(OrderTag::grevlex, 2));
  CHECK(poly::standard_monomial_count(basis) == 4);  // 1, x, y, xy

  Ring r1 = ring_q(3, {"x"});
  auto one_point = poly::buchberger({P(r1, "x - 1")}, MonomialOrder(OrderTag::lex, 1));
  CHECK(poly::standard_monomial_count(one_point) == 1);

  // Positive-dimensional leading ideal reports infinite.
  Ring rxy = ring_q(3, {"x", "y"});
  auto unbounded = poly::buchberger({P(rxy, "x^2")}, MonomialOrder(OrderTag::lex, 2));
  CHECK_FALSE(poly::standard_monomial_count(unbounded).has_value());
}

TEST_CASE("every generator reduces to zero modulo its basis") {
  Ring r = ring_q(3, {"x", "y", "z"});
  std::vector<Polynomial> gens = with_field_equations(
      r, {P(r, "x*y + 2*z"), P(r, "x^2 + y^2 + z"), P(r, "x + y + z")});
  for (auto tag : {OrderTag::grevlex, OrderTag::lex}) {
    MonomialOrder ord(tag, 3);
    auto basis = poly::buchberger(gens, ord);
    for (const auto& g : gens) CHECK(poly::normal_form(g, basis.members, ord).is_zero());
  }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
  Ring r = ring_q(2, {"a", "b", "c", "d"});
  std::vector<Polynomial> gens = with_field_equations(
      r, {P(r, "a*d - b*c - 1"), P(r, "a*b + c"), P(r, "a + b + c + d")});
  MonomialOrder ord(OrderTag::grevlex, 4);
  auto reference = basis_strings(poly::buchberger(gens, ord));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(basis_strings(poly::buchberger(gens, ord)) == reference);
  }
}

TEST_CASE("counting identity against exhaustive evaluation") {
  std::mt19937 rng(29);
  SUBCASE("up to 4 variables at q <= 7") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      Ring r = ring_q(q, {"x", "y", "z", "w"});
      std::uniform_int_distribution<int> coeff(0, q - 1);
      std::uniform_int_distribution<poly::Exp> ex(0, 2);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Polynomial> structural;
        for (int g = 0; g < 2; ++g) {
          std::vector<poly::Term> terms;
          for (int t = 0; t < 3; ++t) {
            poly::Monomial m = poly::Monomial::one(4);
            for (auto& e : m.e) e = ex(rng);
            terms.push_back(poly::Term{std::move(m), static_cast<std::uint16_t>(coeff(rng))});
          }
          structural.push_back(Polynomial::from_terms(r, std::move(terms)));
        }
        auto gens = with_field_equations(r, structural);
        auto expected = count_zeros_by_evaluation(r, gens);
        for (auto tag : {OrderTag::grevlex, OrderTag::lex}) {
          auto basis = poly::buchberger(gens, MonomialOrder(tag, 4));
          CHECK(poly::standard_monomial_count(basis) == expected);
        }
      }
    }
  }
  SUBCASE("12 variables at q = 2") {
    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i) names.push_back("v" + std::to_string(i));
    Ring r = Ring::make(gf::Field::make(2), names);
    std::uniform_int_distribution<int> var(0, 11), coin(0, 1);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Polynomial> structural;
      for (int g = 0; g < 4; ++g) {
        std::vector<poly::Term> terms;
        for (int t = 0; t < 3; ++t) {
          poly::Monomial m = poly::Monomial::one(12);
          m.e[var(rng)] = 1;
          m.e[var(rng)] = 1;
          terms.push_back(poly::Term{std::move(m), static_cast<std::uint16_t>(coin(rng))});
        }
        structural.push_back(Polynomial::from_terms(r, std::move(terms)));
      }
      auto gens = with_field_equations(r, structural);
      auto expected = count_zeros_by_evaluation(r, gens);
      auto basis = poly::buchberger(gens, MonomialOrder(OrderTag::grevlex, 12));
      CHECK(poly::standard_monomial_count(basis) == expected);
    }
  }
}

TEST_CASE("resource limit guardrail") {
  Ring r = ring_q(7, {"x", "y", "z", "w"});
  auto gens = with_field_equations(
      r, {P(r, "x*y*z + w^2"), P(r, "x^3 + y*w + 1"), P(r, "z^2*w + x + y")});
  poly::BuchbergerLimits limits;
  limits.max_pair_reductions = 2;
  try {
    poly::buchberger(gens, MonomialOrder(OrderTag::grevlex, 4), limits);
    FAIL("limit not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource_limit);
  }
}
