#include <doctest.h>

#include <random>

#include "evoclass/poly.hpp"
#include "evoclass/text.hpp"

using namespace evoclass;
using poly::Monomial;
using poly::MonomialOrder;
using poly::OrderTag;
using poly::Polynomial;
using poly::Ring;

namespace {

Ring ring_q(std::uint32_t p, std::uint32_t k, std::vector<std::string> vars) {
  return Ring::make(gf::Field::make(p, k), std::move(vars));
}

Polynomial P(const Ring& r, const char* s) { return text::parse_polynomial(r, s); }

Monomial random_monomial(std::mt19937& rng, std::uint32_t nvars, poly::Exp max_exp) {
  Monomial m = Monomial::one(nvars);
  std::uniform_int_distribution<poly::Exp> dist(0, max_exp);
  for (auto& e : m.e) e = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("polynomial parsing and printing") {
  Ring r = ring_q(3, 1, {"x", "y"});
  Polynomial f = P(r, "2*x^2*y + x - 1");
  CHECK(f.size() == 3);
  CHECK(f.str() == "2*x^2*y + x + 2");
  CHECK(P(r, "x - x").is_zero());
  CHECK(P(r, "2 + 2") == Polynomial::constant(r, 1));
  CHECK(P(r, "x*x") == P(r, "x^2"));

  try {
    P(r, "x + z");
    FAIL("unknown variable accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
  std::mt19937 rng(5);
  for (auto tag : {OrderTag::lex, OrderTag::grevlex}) {
    MonomialOrder ord(tag, 3);
    Monomial one = Monomial::one(3);
    for (int trial = 0; trial < 200; ++trial) {
      Monomial a = random_monomial(rng, 3, 4);
      Monomial b = random_monomial(rng, 3, 4);
      Monomial c = random_monomial(rng, 3, 4);
      // Total: exactly one of <, =, > holds.
      int ab = ord.cmp(a, b);
      CHECK(ab == -ord.cmp(b, a));
      if (!a.is_one()) CHECK(ord.greater(a, one));
      // Multiplicative: a < b implies ac < bc.
      if (ab < 0) CHECK(ord.less(a.times(c), b.times(c)));
      // Transitive spot check.
      if (ab < 0 && ord.less(b, c)) CHECK(ord.less(a, c));
    }
  }
}

TEST_CASE("grevlex vs lex disagree in the standard way") {
  // x > y^2 under lex, x < y^2 under grevlex (degree first).
  Ring r = ring_q(2, 1, {"x", "y"});
  Monomial x{{1, 0}}, y2{{0, 2}};
  CHECK(MonomialOrder(OrderTag::lex, 2).greater(x, y2));
  CHECK(MonomialOrder(OrderTag::grevlex, 2).less(x, y2));
}

TEST_CASE("normal form examples") {
  SUBCASE("member reduces to zero") {
    Ring r = ring_q(3, 1, {"x"});
    Polynomial f = P(r, "x^2 - x");
    std::vector<Polynomial> g{f};
    CHECK(poly::normal_form(f, g, MonomialOrder(OrderTag::lex, 1)).is_zero());
  }
  SUBCASE("x^2 mod {x-1} over GF(3)") {
    Ring r = ring_q(3, 1, {"x"});
    Polynomial f = P(r, "x^2");
    std::vector<Polynomial> g{P(r, "x - 1")};
    Polynomial nf = poly::normal_form(f, g, MonomialOrder(OrderTag::lex, 1));
    CHECK(nf == Polynomial::constant(r, 1));
    // f - nf vanishes at x = 1, the zero of the divisor.
    std::vector<std::uint16_t> pt{1};
    CHECK((f - nf).evaluate(pt) == 0);
  }
  SUBCASE("empty divisor set") {
    Ring r = ring_q(3, 1, {"x", "y"});
    Polynomial f = P(r, "x*y");
    CHECK(poly::normal_form(f, {}, MonomialOrder(OrderTag::lex, 2)) == f);
  }
  SUBCASE("ring mismatch rejected") {
    Ring r1 = ring_q(3, 1, {"x"});
    Ring r2 = ring_q(5, 1, {"x"});
    std::vector<Polynomial> g{P(r2, "x")};
    try {
      poly::normal_form(P(r1, "x"), g, MonomialOrder(OrderTag::lex, 1));
      FAIL("mismatch accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ring_mismatch);
    }
  }
}

TEST_CASE("normal form is idempotent") {
  Ring r = ring_q(3, 1, {"x", "y", "z"});
  std::mt19937 rng(17);
  MonomialOrder ord(OrderTag::grevlex, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    auto random_poly = [&] {
      std::vector<poly::Term> terms;
      for (int t = 0; t < 4; ++t)
        terms.push_back(poly::Term{random_monomial(rng, 3, 3), static_cast<std::uint16_t>(coin(rng))});
      return Polynomial::from_terms(r, std::move(terms));
    };
    Polynomial f = random_poly();
    std::vector<Polynomial> g{random_poly(), random_poly()};
    g.erase(std::remove_if(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); }), g.end());
    Polynomial once = poly::normal_form(f, g, ord);
    CHECK(poly::normal_form(once, g, ord) == once);
  }
}

TEST_CASE("s-polynomial basics") {
  Ring r = ring_q(2, 1, {"x", "y"});
  MonomialOrder ord(OrderTag::lex, 2);

  Polynomial f = P(r, "x^2 - x");
  CHECK(poly::s_polynomial(f, f, ord).is_zero());

  // The s-polynomial of this pair cancels outright: y(x^2-x) = x(xy-y).
  CHECK(poly::s_polynomial(f, P(r, "x*y - y"), ord).is_zero());

  // Leading terms always cancel, leaving something below the lcm.
  Polynomial g = P(r, "x*y + x");
  Polynomial f2 = P(r, "x^2 + y");
  Polynomial s = poly::s_polynomial(f2, g, ord);
  CHECK_FALSE(s.is_zero());
  const Monomial lcm = Monomial::lcm(Monomial{{2, 0}}, Monomial{{1, 1}});
  CHECK(ord.less(s.leading_term(ord).m, lcm));

  // Coprime leading monomials: s-poly reduces to zero modulo the pair.
  Polynomial a = P(r, "x^2");
  Polynomial b = P(r, "y^2");
  std::vector<Polynomial> pair{a, b};
  CHECK(poly::normal_form(poly::s_polynomial(a, b, ord), pair, ord).is_zero());

  try {
    poly::s_polynomial(Polynomial::zero(r), f, ord);
    FAIL("zero input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_polynomial);
  }
}

TEST_CASE("exponent folding") {
  Ring r = ring_q(3, 1, {"x"});
  CHECK(P(r, "x^3").fold_exponents() == P(r, "x"));
  CHECK(P(r, "x^4").fold_exponents() == P(r, "x^2"));
  CHECK(P(r, "x^5").fold_exponents() == P(r, "x"));  // 5 -> 3 -> 1
  // Folding agrees with evaluation everywhere.
  Polynomial f = P(r, "2*x^7 + x^4 + 1");
  Polynomial folded = f.fold_exponents();
  for (std::uint16_t v = 0; v < 3; ++v) {
    std::vector<std::uint16_t> pt{v};
    CHECK(f.evaluate(pt) == folded.evaluate(pt));
  }
}
