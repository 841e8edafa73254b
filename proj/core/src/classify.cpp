#include "evoclass/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "evoclass/parallel.hpp"

namespace evoclass::classify {

std::string isot_class_name(IsotClass c) {
  switch (c) {
    case IsotClass::abelian: return "ABELIAN";
    case IsotClass::e1: return "E1";
    case IsotClass::e2: return "E2";
    case IsotClass::e5: return "E5";
  }
  return "?";
}

IsotClass isotopism_class_2d(const evo::EvolutionAlgebra& a) {
  if (a.dim() != 2) raise(Errc::dimension_not_two, "isotopism classifier requires dimension 2");
  std::uint32_t ann = a.annihilator_dim();
  std::uint32_t der = a.derived_dim();
  if (ann == 2) return IsotClass::abelian;
  if (ann == 1) return IsotClass::e1;
  return der == 1 ? IsotClass::e2 : IsotClass::e5;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::abelian: return "ABELIAN";
    case Family::ann1_diag: return "ANN1_DIAG";
    case Family::ann1_nil: return "ANN1_NIL";
    case Family::r1_sqclass: return "R1_SQCLASS";
    case Family::r1_exceptional: return "R1_EXCEPTIONAL";
    case Family::r2_a: return "R2_A";
    case Family::r2_b: return "R2_B";
    case Family::r2_c: return "R2_C";
  }
  return "?";
}

std::string ClassLabel::str(const gf::Field& field) const {
  std::string s = family_name(family);
  if (!params.empty()) {
    s += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += field.encode(params[i]);
    }
    s += ')';
  }
  return s;
}

namespace {

std::uint16_t sq(const gf::Field& f, std::uint16_t x) { return f.mul(x, x); }
std::uint16_t cube(const gf::Field& f, std::uint16_t x) { return f.mul(f.mul(x, x), x); }

// Canonical square-class representative: smallest element of {c m^2, m != 0}.
std::uint16_t square_class_min(const gf::Field& f, std::uint16_t c) {
  return gf::unit_orbit(f, c, 2).front();
}

// Classes of nonzero c for the rank-two family with normal form (e2, c e1):
// generated by c ~ c m^3 together with c ~ c^2 m^3.  Cached per field.
const std::vector<std::uint16_t>& r2b_axis_class_min(const gf::Field& f) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint16_t>>, std::vector<std::uint16_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(f.q(), f.modulus());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const std::uint32_t q = f.q();
  std::vector<std::uint16_t> parent(q);
  for (std::uint32_t u = 1; u < q; ++u) parent[u] = static_cast<std::uint16_t>(u);
  std::function<std::uint16_t(std::uint16_t)> find = [&](std::uint16_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint16_t x, std::uint16_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (std::uint32_t u = 1; u < q; ++u)
    for (std::uint32_t m = 1; m < q; ++m) {
      std::uint16_t cubed = cube(f, static_cast<std::uint16_t>(m));
      unite(static_cast<std::uint16_t>(u), f.mul(static_cast<std::uint16_t>(u), cubed));
      unite(static_cast<std::uint16_t>(u), f.mul(sq(f, static_cast<std::uint16_t>(u)), cubed));
    }
  std::vector<std::uint16_t> mins(q, 0);
  for (std::uint32_t u = 1; u < q; ++u) mins[u] = find(static_cast<std::uint16_t>(u));
  auto [pos, inserted] = cache.emplace(std::move(key), std::move(mins));
  return pos->second;
}

ClassLabel r2b_label(const gf::Field& f, std::uint16_t c, std::uint16_t d) {
  if (d == 0) return ClassLabel{Family::r2_b, {r2b_axis_class_min(f)[c], 0}};
  // Minimal pair over the orbit (c / m^3, d / m^2).
  std::uint16_t best_c = c, best_d = d;
  for (std::uint32_t m = 1; m < f.q(); ++m) {
    std::uint16_t mc = f.div(c, cube(f, static_cast<std::uint16_t>(m)));
    std::uint16_t md = f.div(d, sq(f, static_cast<std::uint16_t>(m)));
    if (mc < best_c || (mc == best_c && md < best_d)) {
      best_c = mc;
      best_d = md;
    }
  }
  return ClassLabel{Family::r2_b, {best_c, best_d}};
}

ClassLabel r2c_label(const gf::Field& f, std::uint16_t c, std::uint16_t d) {
  // The only other normal form in the class is the involution image
  // (c^2/d^3, c/d^2); keep the smaller pair.
  std::uint16_t oc = f.div(sq(f, c), cube(f, d));
  std::uint16_t od = f.div(c, sq(f, d));
  if (oc < c || (oc == c && od < d)) return ClassLabel{Family::r2_c, {oc, od}};
  return ClassLabel{Family::r2_c, {c, d}};
}

}  // namespace

ClassLabel isomorphism_label_2d(const evo::EvolutionAlgebra& alg) {
  if (alg.dim() != 2) raise(Errc::dimension_not_two, "isomorphism classifier requires dimension 2");
  const gf::Field& f = alg.field();
  const std::uint32_t der = alg.derived_dim();
  if (der == 0) return ClassLabel{Family::abelian, {}};

  auto zero_rows = alg.zero_rows();
  if (zero_rows.size() == 1) {
    std::uint32_t r = zero_rows[0] == 0 ? 1 : 0;
    return ClassLabel{alg.at(r, r) != 0 ? Family::ann1_diag : Family::ann1_nil, {}};
  }

  const std::uint16_t a = alg.at(0, 0), b = alg.at(0, 1);
  const std::uint16_t c = alg.at(1, 0), d = alg.at(1, 1);

  if (der == 1) {
    // Both rows nonzero and proportional: row 2 = lambda * row 1.
    std::uint16_t lambda = a != 0 ? f.div(c, a) : f.div(d, b);
    std::uint16_t param;
    if (a != 0 && b != 0) {
      // Scale to head e1+e2; row ratio becomes lambda * (b/a)^2.
      std::uint16_t lp = f.mul(lambda, sq(f, f.div(b, a)));
      if (lp == f.neg(gf::Field::one())) return ClassLabel{Family::r1_exceptional, {}};
      param = f.mul(lp, sq(f, f.add(lp, gf::Field::one())));
    } else if (a != 0) {
      param = f.mul(a, c);  // head e1: (e1, a c e1)
    } else {
      param = f.mul(lambda, sq(f, b));  // head e2 then swap onto e1
    }
    return ClassLabel{Family::r1_sqclass, {square_class_min(f, param)}};
  }

  // Rank two.  Normalize the first row to head e1, e2 or e1+e2 and dispatch.
  if (b == 0) return ClassLabel{Family::r2_a, {f.div(f.mul(a, c), sq(f, d))}};
  if (a == 0) return r2b_label(f, f.mul(c, sq(f, b)), f.mul(d, b));
  std::uint16_t nc = f.div(f.mul(c, sq(f, b)), cube(f, a));
  std::uint16_t nd = f.div(f.mul(d, b), sq(f, a));
  if (nc == 0) return ClassLabel{Family::r2_a, {nd}};       // (e1+e2, d e2) ~ (e1, d e1 + e2)
  if (nd == 0) return r2b_label(f, f.inv(nc), f.inv(nc));   // (e1+e2, c e1) ~ (e2, 1/c (e1+e2))
  return r2c_label(f, nc, nd);
}

NormalForm strong_isotopy_normal_form(const evo::EvolutionAlgebra& input) {
  const gf::Field& field = input.field();
  const std::uint32_t n = input.dim();
  linalg::Mat t = input.structure_matrix();
  linalg::Mat fmat = linalg::Mat::identity(field, n);
  linalg::Mat hmat = linalg::Mat::identity(field, n);

  auto apply_h = [&](const linalg::Mat& step) {
    t = linalg::mul(t, step);
    hmat = linalg::mul(hmat, step);
  };

  for (std::uint32_t pos = 0; pos < n; ++pos) {
    if (t.at(pos, pos) == 0) {
      // Bring some nonzero entry of the trailing block to the diagonal by a
      // component permutation (rows) and a basis relabeling (columns).
      std::uint32_t ri = n, cj = n;
      for (std::uint32_t i = pos; i < n && ri == n; ++i)
        for (std::uint32_t j = pos; j < n; ++j)
          if (t.at(i, j) != 0) {
            ri = i;
            cj = j;
            break;
          }
      if (ri == n) break;  // trailing block vanished: shape reached
      if (ri != pos || cj != pos) {
        linalg::Mat rowp = linalg::Mat::identity(field, n);
        if (ri != pos) {
          rowp.set(pos, pos, 0);
          rowp.set(ri, ri, 0);
          rowp.set(pos, ri, gf::Field::one());
          rowp.set(ri, pos, gf::Field::one());
        }
        linalg::Mat colp = linalg::Mat::identity(field, n);
        if (cj != pos) {
          colp.set(pos, pos, 0);
          colp.set(cj, cj, 0);
          colp.set(pos, cj, gf::Field::one());
          colp.set(cj, pos, gf::Field::one());
        }
        t = linalg::mul(linalg::mul(rowp, t), colp);
        fmat = linalg::mul(fmat, rowp);
        hmat = linalg::mul(hmat, colp);
      }
    }
    // Clear the off-diagonal entries of the row, which now has a nonzero
    // diagonal; other rows pick up multiples of this row's tail.
    bool tail = false;
    for (std::uint32_t j = 0; j < n && !tail; ++j) tail = j != pos && t.at(pos, j) != 0;
    if (tail) {
      linalg::Mat step = linalg::Mat::identity(field, n);
      std::uint16_t inv = field.inv(t.at(pos, pos));
      for (std::uint32_t j = 0; j < n; ++j)
        if (j != pos) step.set(pos, j, field.neg(field.mul(inv, t.at(pos, j))));
      apply_h(step);
    }
  }

  evo::EvolutionAlgebra normal(field, n, t.entries());
  search::MapTriple witness{fmat, fmat, hmat};
  if (!search::verify_isotopism(input, normal, witness))
    raise(Errc::bad_argument, "internal: normal-form witness failed verification");
  return NormalForm{std::move(normal), std::move(witness)};
}

bool Partition::same_blocks(const Partition& o) const {
  if (classes.size() != o.classes.size()) return false;
  auto key = [](const Partition& p) {
    std::vector<std::vector<std::uint64_t>> blocks;
    blocks.reserve(p.classes.size());
    for (const auto& c : p.classes) blocks.push_back(c.member_indices);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  };
  return key(*this) == key(o);
}

Partition algorithm1(std::vector<evo::EvolutionAlgebra> input, const Oracle& related, unsigned threads) {
  if (input.empty()) raise(Errc::bad_argument, "empty algebra set");
  const gf::Field field = input.front().field();
  const std::uint32_t n = input.front().dim();
  for (const auto& a : input) {
    if (a.field() != field) raise(Errc::field_mismatch, "mixed fields in classification input");
    if (a.dim() != n) raise(Errc::dimension_mismatch, "mixed dimensions in classification input");
  }
  std::sort(input.begin(), input.end(),
            [](const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b) { return a.index() < b.index(); });
  input.erase(std::unique(input.begin(), input.end()), input.end());

  Partition out{field, n, {}};
  std::vector<bool> removed(input.size(), false);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (removed[i]) continue;
    const evo::EvolutionAlgebra& rep = input[i];
    removed[i] = true;
    PartitionClass cls{rep.index(), {rep.index()}};

    candidates.clear();
    for (std::size_t j = i + 1; j < input.size(); ++j)
      if (!removed[j]) candidates.push_back(j);

    std::vector<char> hit(candidates.size(), 0);
    std::mutex err_mu;
    std::size_t err_pos = candidates.size();
    std::exception_ptr err;
    parallel_for(candidates.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t c = lo; c < hi; ++c) {
        try {
          hit[c] = related(rep, input[candidates[c]]) ? 1 : 0;
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (c < err_pos) {
            err_pos = c;
            err = std::current_exception();
          }
        }
      }
    });
    if (err) {
      try {
        std::rethrow_exception(err);
      } catch (const Error& e) {
        raise(e.code(), std::string(e.what()) + " (while relating algebra #" + std::to_string(rep.index()) +
                            " to #" + std::to_string(input[candidates[err_pos]].index()) + ")");
      }
    }
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (hit[c]) {
        removed[candidates[c]] = true;
        cls.member_indices.push_back(input[candidates[c]].index());
      }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

Oracle bruteforce_oracle(Relation relation, search::Caps caps) {
  return [relation, caps](const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b) {
    return search::find_witness(a, b, relation, caps).has_value();
  };
}

Oracle groebner_oracle(Relation relation, poly::OrderTag order) {
  if (relation == Relation::strong_isotopism)
    raise(Errc::bad_argument, "no ideal formulation for strong isotopism; use bruteforce or invariant");
  return [relation, order](const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b) {
    ideals::IdealSpec ideal = relation == Relation::isomorphism ? ideals::isom_ideal(a, b)
                                                                : ideals::isot_ideal(a, b);
    ideals::CountOptions opts;
    opts.method = ideals::CountMethod::groebner;
    opts.order = order;
    return ideals::count_points(ideal, opts) > 0;
  };
}

Oracle invariant_oracle(Relation relation) {
  if (relation == Relation::isomorphism)
    return [](const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b) {
      return isomorphism_label_2d(a) == isomorphism_label_2d(b);
    };
  // The four signature classes classify both isotopism and strong isotopism.
  return [](const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b) {
    return isotopism_class_2d(a) == isotopism_class_2d(b);
  };
}

Oracle make_oracle(Relation relation, Method method, search::Caps caps, poly::OrderTag order) {
  switch (method) {
    case Method::bruteforce: return bruteforce_oracle(relation, caps);
    case Method::groebner: return groebner_oracle(relation, order);
    case Method::invariant: return invariant_oracle(relation);
  }
  raise(Errc::bad_argument, "unknown method");
}

Partition classify_all(const gf::Field& field, std::uint32_t n, Relation relation, Method method,
                       unsigned threads, search::Caps caps, poly::OrderTag order,
                       std::uint64_t enumeration_cap) {
  evo::AlgebraEnumeration enumeration(field, n, enumeration_cap);
  std::vector<evo::EvolutionAlgebra> all;
  all.reserve(enumeration.size());
  for (std::uint64_t i = 0; i < enumeration.size(); ++i) all.push_back(enumeration.at(i));
  return algorithm1(std::move(all), make_oracle(relation, method, caps, order), threads);
}

std::uint64_t class_count(const gf::Field& field, Relation relation, Method method, unsigned threads) {
  return classify_all(field, 2, relation, method, threads).classes.size();
}

}  // namespace evoclass::classify
