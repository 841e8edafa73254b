#include "evoclass/ideals.hpp"

#include <algorithm>
#include <numeric>

#include "evoclass/search.hpp"

namespace evoclass::ideals {

namespace {

using poly::Monomial;
using poly::Polynomial;
using poly::Ring;
using poly::Term;

void check_pair(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b) {
  if (a.field() != b.field()) raise(Errc::field_mismatch, "algebras over different fields");
  if (a.dim() != b.dim()) raise(Errc::dimension_mismatch, "algebras of different dimension");
}

std::string entry_name(char block, std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  if (n <= 9)
    return std::string(1, block) + std::to_string(i + 1) + std::to_string(j + 1);
  return std::string(1, block) + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// Variable layout: matrix blocks first (row-major within each block), then
// one auxiliary variable per block under the Rabinowitsch encoding.
struct Layout {
  std::uint32_t n = 0;
  std::uint32_t blocks = 0;
  bool aux = false;

  std::uint32_t var(std::uint32_t block, std::uint32_t i, std::uint32_t j) const {
    return block * n * n + i * n + j;
  }
  std::uint32_t aux_var(std::uint32_t block) const { return blocks * n * n + block; }
  std::uint32_t total() const { return blocks * n * n + (aux ? blocks : 0); }
};

Monomial var_monomial(const Ring& ring, std::initializer_list<std::uint32_t> vars) {
  Monomial m = Monomial::one(ring.nvars());
  for (auto v : vars) ++m.e[v];
  return m;
}

// Determinant of the block's variable matrix via the Leibniz expansion.
Polynomial det_polynomial(const Ring& ring, const Layout& layout, std::uint32_t block) {
  const std::uint32_t n = layout.n;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  const gf::Field& f = ring.field();
  std::vector<Term> terms;
  // Walk all permutations; track sign by counting inversions.
  do {
    std::uint32_t inversions = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Monomial m = Monomial::one(ring.nvars());
    for (std::uint32_t i = 0; i < n; ++i) ++m.e[layout.var(block, i, perm[i])];
    std::uint16_t c = inversions % 2 == 0 ? gf::Field::one() : f.neg(gf::Field::one());
    terms.push_back(Term{std::move(m), c});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(ring, std::move(terms));
}

// det(M)^(q-1) - 1, with exponents folded by the field equations after every
// multiplication to keep the expansion sparse.
Polynomial det_unit_power(const Ring& ring, const Layout& layout, std::uint32_t block) {
  const std::uint32_t q = ring.field().q();
  Polynomial det = det_polynomial(ring, layout, block);
  Polynomial acc = Polynomial::constant(ring, gf::Field::one());
  Polynomial base = det;
  std::uint32_t e = q - 1;
  while (e) {
    if (e & 1) acc = (acc * base).fold_exponents();
    e >>= 1;
    if (e) base = (base * base).fold_exponents();
  }
  return acc - Polynomial::constant(ring, gf::Field::one());
}

void append_det_constraints(std::vector<Polynomial>& gens, const Ring& ring, const Layout& layout,
                            DetEncoding encoding) {
  for (std::uint32_t b = 0; b < layout.blocks; ++b) {
    if (encoding == DetEncoding::power) {
      gens.push_back(det_unit_power(ring, layout, b));
    } else {
      Polynomial u = Polynomial::variable(ring, layout.aux_var(b));
      gens.push_back(u * det_polynomial(ring, layout, b) - Polynomial::constant(ring, gf::Field::one()));
    }
  }
}

void append_field_equations(std::vector<Polynomial>& gens, const Ring& ring) {
  const std::uint32_t q = ring.field().q();
  for (std::uint32_t v = 0; v < ring.nvars(); ++v)
    gens.push_back(Polynomial::variable(ring, v, q) - Polynomial::variable(ring, v));
}

Ring make_ring(const gf::Field& field, const Layout& layout, const char* blocks) {
  std::vector<std::string> names;
  names.reserve(layout.total());
  for (std::uint32_t b = 0; b < layout.blocks; ++b)
    for (std::uint32_t i = 0; i < layout.n; ++i)
      for (std::uint32_t j = 0; j < layout.n; ++j) names.push_back(entry_name(blocks[b], layout.n, i, j));
  if (layout.aux)
    for (std::uint32_t b = 0; b < layout.blocks; ++b) names.push_back(std::string("u_") + blocks[b]);
  return Ring::make(field, std::move(names));
}

}  // namespace

IdealSpec isom_ideal(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b, DetEncoding encoding) {
  check_pair(a, b);
  const std::uint32_t n = a.dim();
  const gf::Field& f = a.field();
  Layout layout{n, 1, encoding == DetEncoding::rabinowitsch};
  Ring ring = make_ring(f, layout, "f");

  std::vector<Polynomial> structural;
  // Off-diagonal products must vanish: sum_k f_ik f_jk t'_kl for i < j.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t l = 0; l < n; ++l) {
        std::vector<Term> terms;
        for (std::uint32_t k = 0; k < n; ++k)
          if (b.at(k, l) != 0)
            terms.push_back(Term{var_monomial(ring, {layout.var(0, i, k), layout.var(0, j, k)}), b.at(k, l)});
        structural.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
  // Squares must match transported rows: sum_k f_ik^2 t'_kl - sum_k f_kl t_ik.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t l = 0; l < n; ++l) {
      std::vector<Term> terms;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (b.at(k, l) != 0)
          terms.push_back(Term{var_monomial(ring, {layout.var(0, i, k), layout.var(0, i, k)}), b.at(k, l)});
        if (a.at(i, k) != 0)
          terms.push_back(Term{var_monomial(ring, {layout.var(0, k, l)}), f.neg(a.at(i, k))});
      }
      structural.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }

  std::vector<Polynomial> gens = structural;
  append_det_constraints(gens, ring, layout, encoding);
  append_field_equations(gens, ring);
  return IdealSpec{ring, std::move(gens), std::move(structural), a, b, Relation::isomorphism, encoding, 1};
}

IdealSpec isot_ideal(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b, DetEncoding encoding) {
  check_pair(a, b);
  const std::uint32_t n = a.dim();
  const gf::Field& f = a.field();
  Layout layout{n, 3, encoding == DetEncoding::rabinowitsch};
  Ring ring = make_ring(f, layout, "fgh");
  const std::uint32_t F = 0, G = 1, H = 2;

  std::vector<Polynomial> structural;
  // sum_k f_ik g_jk t'_kl for all ordered pairs i != j.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::uint32_t l = 0; l < n; ++l) {
        std::vector<Term> terms;
        for (std::uint32_t k = 0; k < n; ++k)
          if (b.at(k, l) != 0)
            terms.push_back(Term{var_monomial(ring, {layout.var(F, i, k), layout.var(G, j, k)}), b.at(k, l)});
        structural.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
    }
  // sum_k f_ik g_ik t'_kl - sum_k h_kl t_ik.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t l = 0; l < n; ++l) {
      std::vector<Term> terms;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (b.at(k, l) != 0)
          terms.push_back(Term{var_monomial(ring, {layout.var(F, i, k), layout.var(G, i, k)}), b.at(k, l)});
        if (a.at(i, k) != 0)
          terms.push_back(Term{var_monomial(ring, {layout.var(H, k, l)}), f.neg(a.at(i, k))});
      }
      structural.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }

  std::vector<Polynomial> gens = structural;
  append_det_constraints(gens, ring, layout, encoding);
  append_field_equations(gens, ring);
  return IdealSpec{ring, std::move(gens), std::move(structural), a, b, Relation::isotopism, encoding, 3};
}

namespace {

std::uint64_t count_exhaustive(const IdealSpec& ideal, const CountOptions& options) {
  const gf::Field& f = ideal.left.field();
  const std::uint32_t n = ideal.left.dim();
  std::uint64_t assignments = 1;
  for (std::uint32_t i = 0; i < ideal.matrix_count * n * n; ++i) {
    if (assignments > options.exhaustion_cap / f.q())
      raise(Errc::exhaustion_cap_exceeded, "exhaustive point count exceeds the exhaustion cap " +
                                               std::to_string(options.exhaustion_cap));
    assignments *= f.q();
  }

  auto gl = search::gl_enumerate(f, n, options.exhaustion_cap);
  std::vector<std::uint16_t> point(ideal.ring.nvars(), 0);
  auto place = [&](std::uint32_t block, const linalg::Mat& m) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) point[block * n * n + i * n + j] = m.at(i, j);
  };
  auto vanishes = [&]() {
    for (const auto& g : ideal.structural)
      if (g.evaluate(point) != 0) return false;
    return true;
  };

  std::uint64_t count = 0;
  if (ideal.matrix_count == 1) {
    for (const auto& fm : *gl) {
      place(0, fm);
      if (vanishes()) ++count;
    }
    return count;
  }
  for (const auto& fm : *gl) {
    place(0, fm);
    for (const auto& gm : *gl) {
      place(1, gm);
      for (const auto& hm : *gl) {
        place(2, hm);
        if (vanishes()) ++count;
      }
    }
  }
  return count;
}

}  // namespace

std::uint64_t count_points(const IdealSpec& ideal, const CountOptions& options) {
  if (options.method == CountMethod::exhaustive) return count_exhaustive(ideal, options);
  poly::MonomialOrder ord(options.order, ideal.ring.nvars());
  poly::GroebnerBasis basis = poly::buchberger(ideal.generators, ord, options.limits);
  auto count = poly::standard_monomial_count(basis);
  if (!count)
    raise(Errc::bad_argument, "ideal is not zero-dimensional; field equations missing");
  return *count;
}

}  // namespace evoclass::ideals
