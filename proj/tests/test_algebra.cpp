#include <doctest.h>

#include <random>

#include "evoclass/algebra.hpp"
#include "evoclass/search.hpp"
#include "evoclass/text.hpp"

using namespace evoclass;
using evo::EvolutionAlgebra;
using evo::Vec;

namespace {

EvolutionAlgebra parse(const gf::Field& f, const char* lit) {
  return text::parse_algebra_literal(f, 2, lit);
}

}  // namespace

TEST_CASE("multiply follows the evolution axioms") {
  gf::Field f2 = gf::Field::make(2);
  EvolutionAlgebra e1 = parse(f2, "1,0;0,0");
  Vec b1 = evo::basis_vector(f2, 2, 0);
  Vec b2 = evo::basis_vector(f2, 2, 1);
  CHECK(e1.multiply(b1, b1) == b1);       // e1 e1 = e1
  CHECK(e1.multiply(b1, b2) == Vec{0, 0});  // off-diagonal products vanish
  CHECK(e1.multiply(b2, b2) == Vec{0, 0});

  gf::Field f3 = gf::Field::make(3);
  EvolutionAlgebra e2 = parse(f3, "1,0;1,0");
  Vec u{1, 1};
  CHECK(e2.multiply(u, u) == Vec{2, 0});  // (e1+e2)^2 = e1 + e1
}

TEST_CASE("multiply is bilinear and commutative on random samples") {
  gf::Field f5 = gf::Field::make(5);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> dist(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint16_t> entries(4);
    for (auto& e : entries) e = dist(rng);
    EvolutionAlgebra a(f5, 2, entries);
    Vec u{static_cast<std::uint16_t>(dist(rng)), static_cast<std::uint16_t>(dist(rng))};
    Vec v{static_cast<std::uint16_t>(dist(rng)), static_cast<std::uint16_t>(dist(rng))};
    Vec w{static_cast<std::uint16_t>(dist(rng)), static_cast<std::uint16_t>(dist(rng))};
    std::uint16_t alpha = dist(rng);

    CHECK(a.multiply(u, v) == a.multiply(v, u));

    Vec au_plus_w(2), left(2);
    for (int i = 0; i < 2; ++i) au_plus_w[i] = f5.add(f5.mul(alpha, u[i]), w[i]);
    Vec lhs = a.multiply(au_plus_w, v);
    Vec m1 = a.multiply(u, v), m2 = a.multiply(w, v);
    for (int i = 0; i < 2; ++i) left[i] = f5.add(f5.mul(alpha, m1[i]), m2[i]);
    CHECK(lhs == left);
  }
}

TEST_CASE("derived and annihilator dimensions") {
  gf::Field f2 = gf::Field::make(2);
  CHECK(parse(f2, "1,0;1,0").derived_dim() == 1);   // E2
  CHECK(parse(f2, "1,0;0,1").derived_dim() == 2);   // E5_{0,0}
  CHECK(parse(f2, "0,0;0,0").derived_dim() == 0);

  CHECK(parse(f2, "1,0;0,0").annihilator_dim() == 1);  // E1
  CHECK(parse(f2, "1,0;1,0").annihilator_dim() == 0);  // E2
  CHECK(parse(f2, "0,0;0,0").annihilator_dim() == 2);
}

TEST_CASE("annihilator matches the definitional quantifier") {
  gf::Field f3 = gf::Field::make(3);
  evo::AlgebraEnumeration algebras(f3, 2);
  for (std::uint64_t idx = 0; idx < algebras.size(); ++idx) {
    EvolutionAlgebra a = algebras.at(idx);
    auto zeros = a.zero_rows();
    for (std::uint32_t i = 0; i < 2; ++i) {
      bool row_zero = std::find(zeros.begin(), zeros.end(), i) != zeros.end();
      Vec ei = evo::basis_vector(f3, 2, i);
      bool annihilates = true;
      for (std::uint16_t u0 = 0; u0 < 3 && annihilates; ++u0)
        for (std::uint16_t u1 = 0; u1 < 3 && annihilates; ++u1)
          if (a.multiply(ei, Vec{u0, u1}) != Vec{0, 0}) annihilates = false;
      CHECK(annihilates == row_zero);
    }
  }
}

TEST_CASE("derived dimension equals the span of all products") {
  gf::Field f3 = gf::Field::make(3);
  evo::AlgebraEnumeration algebras(f3, 2);
  for (std::uint64_t idx = 0; idx < algebras.size(); ++idx) {
    EvolutionAlgebra a = algebras.at(idx);
    // Span of e_i e_j over all basis pairs, computed independently.
    std::vector<std::vector<std::uint16_t>> products;
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j)
        products.push_back(a.multiply(evo::basis_vector(f3, 2, i), evo::basis_vector(f3, 2, j)));
    CHECK(linalg::rref(f3, products).size() == a.derived_dim());
  }
}

TEST_CASE("enumeration counts and order") {
  gf::Field f2 = gf::Field::make(2);
  evo::AlgebraEnumeration e2(f2, 2);
  CHECK(e2.size() == 16);
  CHECK(e2.at(0).is_abelian());
  CHECK(e2.at(0).index() == 0);
  CHECK(e2.at(9).index() == 9);

  gf::Field f3 = gf::Field::make(3);
  CHECK(evo::AlgebraEnumeration(f3, 2).size() == 81);

  gf::Field f4 = gf::Field::make(2, 2);
  CHECK(evo::AlgebraEnumeration(f4, 2).size() == 256);

  try {
    evo::AlgebraEnumeration(f3, 2, 27);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::enumeration_cap_exceeded);
  }
}

TEST_CASE("monomial transport produces verified isomorphisms") {
  gf::Field f3 = gf::Field::make(3);
  EvolutionAlgebra e1 = parse(f3, "1,0;0,0");

  SUBCASE("identity transport") {
    EvolutionAlgebra same = evo::transport_monomial(e1, {0, 1}, {1, 1});
    CHECK(same == e1);
  }

  SUBCASE("scaling") {
    EvolutionAlgebra scaled = evo::transport_monomial(e1, {0, 1}, {2, 1});
    // Row 1 entry becomes scale_1 * t_11 / scale_1^2 = 1/2 = 2 mod 3.
    CHECK(scaled == parse(f3, "2,0;0,0"));
    linalg::Mat fmap(f3, 2, {2, 0, 0, 1});
    CHECK(search::verify_isotopism(e1, scaled, {fmap, fmap, fmap}));
  }

  SUBCASE("swap relabels E1 into E4 shape") {
    EvolutionAlgebra swapped = evo::transport_monomial(e1, {1, 0}, {1, 1});
    CHECK(swapped == parse(f3, "0,0;0,1"));
    linalg::Mat fmap(f3, 2, {0, 1, 1, 0});
    CHECK(search::verify_isotopism(e1, swapped, {fmap, fmap, fmap}));
  }

  SUBCASE("random transports verify") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::uint32_t> entry(0, 2), unit(1, 2), flip(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint16_t> entries(4);
      for (auto& e : entries) e = entry(rng);
      EvolutionAlgebra a(f3, 2, entries);
      bool swap = flip(rng);
      std::vector<std::uint32_t> sigma = swap ? std::vector<std::uint32_t>{1, 0} : std::vector<std::uint32_t>{0, 1};
      std::vector<std::uint16_t> scale{static_cast<std::uint16_t>(unit(rng)), static_cast<std::uint16_t>(unit(rng))};
      EvolutionAlgebra b = evo::transport_monomial(a, sigma, scale);
      linalg::Mat fmap(f3, 2);
      for (std::uint32_t i = 0; i < 2; ++i) fmap.set(i, sigma[i], scale[i]);
      CHECK(search::verify_isotopism(a, b, {fmap, fmap, fmap}));
    }
  }

  SUBCASE("errors") {
    try {
      evo::transport_monomial(e1, {0, 1}, {0, 1});
      FAIL("zero scale accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::zero_scale);
    }
    try {
      evo::transport_monomial(e1, {0, 0}, {1, 1});
      FAIL("non-permutation accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::bad_permutation);
    }
  }
}

TEST_CASE("algebra literals round-trip") {
  gf::Field f4 = gf::Field::make(2, 2);
  EvolutionAlgebra a(f4, 2, {0, 1, 2, 3});
  std::string lit = text::algebra_literal(a);
  CHECK(lit == "[0,0],[1,0];[0,1],[1,1]");
  CHECK(text::parse_algebra_literal(f4, 2, lit) == a);

  gf::Field f5 = gf::Field::make(5);
  CHECK(text::algebra_literal(parse(f5, "1,0;4,0")) == "1,0;4,0");

  try {
    text::parse_algebra_literal(f5, 2, "1,0;4");
    FAIL("short row accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}
