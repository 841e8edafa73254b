#include "evoclass/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace evoclass::search {

namespace {

std::uint64_t matrix_space_size(const gf::Field& field, std::uint32_t n, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) {
    if (count > cap / field.q())
      raise(Errc::exhaustion_cap_exceeded,
            "q^(n^2) matrix scan exceeds the exhaustion cap " + std::to_string(cap));
    count *= field.q();
  }
  return count;
}

struct GlKey {
  std::uint32_t q;
  std::vector<std::uint16_t> modulus;
  std::uint32_t n;
  bool operator<(const GlKey& o) const {
    if (q != o.q) return q < o.q;
    if (modulus != o.modulus) return modulus < o.modulus;
    return n < o.n;
  }
};

void check_pair(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b) {
  if (a.field() != b.field()) raise(Errc::field_mismatch, "algebras over different fields");
  if (a.dim() != b.dim()) raise(Errc::dimension_mismatch, "algebras of different dimension");
}

void check_relation_cap(Relation relation, std::uint32_t q, const Caps& caps) {
  std::uint32_t cap = 0;
  const char* hint = "";
  switch (relation) {
    case Relation::isomorphism:
      cap = caps.isomorphism_q;
      hint = "; the invariant-label method or groebner counting stay feasible";
      break;
    case Relation::strong_isotopism:
      cap = caps.strong_isotopism_q;
      hint = "; the invariant method stays feasible";
      break;
    case Relation::isotopism:
      cap = caps.isotopism_q;
      hint = "; the invariant method or groebner counting stay feasible";
      break;
  }
  if (q > cap)
    raise(Errc::witness_cap_exceeded, "field order " + std::to_string(q) +
                                          " exceeds the witness search cap " + std::to_string(cap) +
                                          " for " + relation_name(relation) + hint);
}

// Flat views for the inner loops: raw field tables plus row-major entries.
struct Ops {
  const std::uint16_t* add;
  const std::uint16_t* mul;
  std::uint32_t q;

  std::uint16_t a(std::uint16_t x, std::uint16_t y) const { return add[std::size_t(x) * q + y]; }
  std::uint16_t m(std::uint16_t x, std::uint16_t y) const { return mul[std::size_t(x) * q + y]; }
};

Ops ops_for(const gf::Field& f) {
  const std::uint16_t* add = f.add_table();
  const std::uint16_t* mul = f.mul_table();
  if (!add || !mul)
    raise(Errc::witness_cap_exceeded, "field order " + std::to_string(f.q()) + " too large for witness search");
  return Ops{add, mul, f.q()};
}

// True iff x -> x F is an isomorphism from the algebra with structure matrix
// ta onto the one with tb (both n x n, row-major).
bool is_isomorphism(const Ops& o, std::uint32_t n, const std::uint16_t* ta, const std::uint16_t* tb,
                    const std::uint16_t* fm) {
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j)
      for (std::uint32_t l = 0; l < n; ++l) {
        std::uint16_t w = 0;
        for (std::uint32_t k = 0; k < n; ++k)
          w = o.a(w, o.m(o.m(fm[i * n + k], fm[j * n + k]), tb[k * n + l]));
        std::uint16_t rhs = 0;
        if (i == j)
          for (std::uint32_t k = 0; k < n; ++k) rhs = o.a(rhs, o.m(ta[i * n + k], fm[k * n + l]));
        if (w != rhs) return false;
      }
  return true;
}

// Off-diagonal isotopism conditions: (F_i . G_j-wise product) T_b = 0 for all i != j.
bool offdiag_vanishes(const Ops& o, std::uint32_t n, const std::uint16_t* tb, const std::uint16_t* fm,
                      const std::uint16_t* gm) {
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::uint32_t l = 0; l < n; ++l) {
        std::uint16_t w = 0;
        for (std::uint32_t k = 0; k < n; ++k)
          w = o.a(w, o.m(o.m(fm[i * n + k], gm[j * n + k]), tb[k * n + l]));
        if (w != 0) return false;
      }
    }
  return true;
}

// Required image rows: p[i][l] = sum_k F_ik G_ik T'_kl, the value h(e_i e_i)
// must take for (F, G, .) to extend to an isotopism.
void required_products(const Ops& o, std::uint32_t n, const std::uint16_t* tb, const std::uint16_t* fm,
                       const std::uint16_t* gm, std::uint16_t* p) {
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t l = 0; l < n; ++l) {
      std::uint16_t w = 0;
      for (std::uint32_t k = 0; k < n; ++k)
        w = o.a(w, o.m(o.m(fm[i * n + k], gm[i * n + k]), tb[k * n + l]));
      p[i * n + l] = w;
    }
}

// Smallest invertible H (by enumeration index) with T H = P, or nullopt.
std::optional<linalg::Mat> minimal_invertible_h(const evo::EvolutionAlgebra& a, const linalg::Mat& p,
                                                const std::vector<linalg::Mat>& gl) {
  const gf::Field& f = a.field();
  const std::uint32_t n = a.dim();
  auto sol = linalg::solve_matrix_equation(a.structure_matrix(), p);
  if (!sol) return std::nullopt;
  const std::uint32_t nullity = static_cast<std::uint32_t>(sol->null_basis.size());
  if (nullity == 0) {
    if (linalg::invertible(sol->particular)) return sol->particular;
    return std::nullopt;
  }
  if (nullity == n) return gl.front();  // T = 0 and P = 0: every matrix solves
  // Enumerate the affine solution space: column j of H gets an arbitrary
  // null-space combination added.
  std::uint64_t combos = 1;
  for (std::uint32_t i = 0; i < nullity * n; ++i) combos *= f.q();
  std::optional<linalg::Mat> best;
  std::uint64_t best_index = 0;
  std::vector<std::uint16_t> coef(std::size_t(nullity) * n, 0);
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t rest = c;
    for (auto& v : coef) {
      v = static_cast<std::uint16_t>(rest % f.q());
      rest /= f.q();
    }
    linalg::Mat h = sol->particular;
    for (std::uint32_t b = 0; b < nullity; ++b)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::uint16_t w = coef[std::size_t(b) * n + j];
        if (w == 0) continue;
        for (std::uint32_t i = 0; i < n; ++i)
          h.set(i, j, f.add(h.at(i, j), f.mul(w, sol->null_basis[b][i])));
      }
    if (!linalg::invertible(h)) continue;
    std::uint64_t idx = h.index();
    if (!best || idx < best_index) {
      best = h;
      best_index = idx;
    }
  }
  return best;
}

}  // namespace

std::shared_ptr<const std::vector<linalg::Mat>> gl_enumerate(const gf::Field& field, std::uint32_t n,
                                                             std::uint64_t cap) {
  static std::mutex mu;
  static std::map<GlKey, std::shared_ptr<const std::vector<linalg::Mat>>> cache;

  std::uint64_t total = matrix_space_size(field, n, cap);
  GlKey key{field.q(), field.modulus(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto list = std::make_shared<std::vector<linalg::Mat>>();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    linalg::Mat m = linalg::Mat::from_index(field, n, idx);
    if (linalg::invertible(m)) list->push_back(std::move(m));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::move(key), std::move(list));
  return it->second;
}

bool verify_isotopism(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b, const MapTriple& t) {
  check_pair(a, b);
  const std::uint32_t n = a.dim();
  if (t.f.n() != n || t.g.n() != n || t.h.n() != n)
    raise(Errc::dimension_mismatch, "map component dimension mismatch");
  if (!linalg::invertible(t.f) || !linalg::invertible(t.g) || !linalg::invertible(t.h))
    raise(Errc::non_invertible, "map component with zero determinant");
  for (std::uint32_t i = 0; i < n; ++i) {
    evo::Vec fi(n), gi(n);
    for (std::uint32_t l = 0; l < n; ++l) fi[l] = t.f.at(i, l);
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t l = 0; l < n; ++l) gi[l] = t.g.at(j, l);
      evo::Vec lhs = b.multiply(fi, gi);
      evo::Vec rhs(n, 0);
      if (i == j) rhs = linalg::apply(a.row(i), t.h);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<MapTriple> find_witness(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b,
                                      Relation relation, const Caps& caps) {
  check_pair(a, b);
  check_relation_cap(relation, a.field().q(), caps);
  const gf::Field& field = a.field();
  const std::uint32_t n = a.dim();
  Ops o = ops_for(field);
  auto gl = gl_enumerate(field, n, caps.exhaustion);
  const std::uint16_t* ta = a.entries().data();
  const std::uint16_t* tb = b.entries().data();

  if (relation == Relation::isomorphism) {
    for (const auto& fm : *gl)
      if (is_isomorphism(o, n, ta, tb, fm.entries().data())) return MapTriple{fm, fm, fm};
    return std::nullopt;
  }

  std::vector<std::uint16_t> p(std::size_t(n) * n);
  if (relation == Relation::strong_isotopism) {
    for (const auto& fm : *gl) {
      const std::uint16_t* fe = fm.entries().data();
      if (!offdiag_vanishes(o, n, tb, fe, fe)) continue;
      required_products(o, n, tb, fe, fe, p.data());
      auto h = minimal_invertible_h(a, linalg::Mat(field, n, p), *gl);
      if (h) return MapTriple{fm, fm, *h};
    }
    return std::nullopt;
  }

  for (const auto& fm : *gl) {
    const std::uint16_t* fe = fm.entries().data();
    for (const auto& gm : *gl) {
      const std::uint16_t* ge = gm.entries().data();
      if (!offdiag_vanishes(o, n, tb, fe, ge)) continue;
      required_products(o, n, tb, fe, ge, p.data());
      auto h = minimal_invertible_h(a, linalg::Mat(field, n, p), *gl);
      if (h) return MapTriple{fm, gm, *h};
    }
  }
  return std::nullopt;
}

std::optional<MapTriple> find_witness_blind(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b,
                                            Relation relation, const Caps& caps) {
  check_pair(a, b);
  check_relation_cap(relation, a.field().q(), caps);
  auto gl = gl_enumerate(a.field(), a.dim(), caps.exhaustion);
  switch (relation) {
    case Relation::isomorphism:
      for (const auto& fm : *gl) {
        MapTriple t{fm, fm, fm};
        if (verify_isotopism(a, b, t)) return t;
      }
      return std::nullopt;
    case Relation::strong_isotopism:
      for (const auto& fm : *gl)
        for (const auto& hm : *gl) {
          MapTriple t{fm, fm, hm};
          if (verify_isotopism(a, b, t)) return t;
        }
      return std::nullopt;
    case Relation::isotopism:
      for (const auto& fm : *gl)
        for (const auto& gm : *gl)
          for (const auto& hm : *gl) {
            MapTriple t{fm, gm, hm};
            if (verify_isotopism(a, b, t)) return t;
          }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace evoclass::search
