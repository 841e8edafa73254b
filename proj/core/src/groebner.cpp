#include "evoclass/groebner.hpp"

#include <algorithm>
#include <map>

namespace evoclass::poly {

namespace {

struct SPair {
  std::uint32_t i, j;
};

struct Updater {
  const MonomialOrder& ord;
  std::vector<Polynomial>& basis;
  std::vector<Monomial>& lms;
  std::vector<SPair>& pairs;

  // Gebauer-Moeller update: installs f, pruning pairs by the coprime and
  // chain criteria.
  void add(Polynomial f) {
    const std::uint32_t m = static_cast<std::uint32_t>(basis.size());
    const Monomial& fm = f.leading_term(ord).m;

    auto chain_drop = [&](const SPair& p) {
      Monomial gam = Monomial::lcm(lms[p.i], lms[p.j]);
      return fm.divides(gam) && gam != Monomial::lcm(lms[p.i], fm) && gam != Monomial::lcm(lms[p.j], fm);
    };
    pairs.erase(std::remove_if(pairs.begin(), pairs.end(), chain_drop), pairs.end());

    std::map<Monomial, std::vector<std::uint32_t>> by_lcm;
    for (std::uint32_t i = 0; i < m; ++i) by_lcm[Monomial::lcm(lms[i], fm)].push_back(i);
    std::vector<Monomial> kept;
    std::vector<SPair> fresh;
    for (const auto& [gam, members] : by_lcm) {  // divisors precede multiples
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Monomial& k) { return k.divides(gam); });
      if (redundant) continue;
      kept.push_back(gam);
      bool coprime = std::any_of(members.begin(), members.end(), [&](std::uint32_t i) {
        return Monomial::lcm(lms[i], fm) == lms[i].times(fm);
      });
      if (!coprime) fresh.push_back(SPair{members.front(), m});
    }
    std::sort(fresh.begin(), fresh.end(), [](const SPair& a, const SPair& b) { return a.i < b.i; });
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    lms.push_back(fm);
    basis.push_back(std::move(f));
  }
};

Polynomial monic(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  return p.scaled(p.ring().field().inv(p.leading_term(ord).c));
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators, const MonomialOrder& ord,
                         const BuchbergerLimits& limits) {
  if (generators.empty()) raise(Errc::bad_argument, "buchberger requires at least one generator");
  Ring ring = generators.front().ring();
  for (const auto& g : generators)
    if (g.ring() != ring) raise(Errc::ring_mismatch, "generators from different rings");

  std::vector<Polynomial> basis;
  std::vector<Monomial> lms;
  std::vector<SPair> pairs;
  Updater updater{ord, basis, lms, pairs};
  for (auto& g : generators)
    if (!g.is_zero()) updater.add(monic(g, ord));

  std::uint64_t steps = 0;
  while (!pairs.empty()) {
    // Normal selection: smallest lcm degree, ties by the term order then
    // by pair indices, so runs are reproducible.
    auto best = pairs.begin();
    Monomial best_lcm = Monomial::lcm(lms[best->i], lms[best->j]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = Monomial::lcm(lms[it->i], lms[it->j]);
      std::uint64_t dl = l.degree(), db = best_lcm.degree();
      bool better = dl < db;
      if (dl == db) {
        int c = ord.cmp(l, best_lcm);
        better = c < 0 || (c == 0 && (it->i < best->i || (it->i == best->i && it->j < best->j)));
      }
      if (better) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    SPair p = *best;
    pairs.erase(best);
    if (++steps > limits.max_pair_reductions)
      raise(Errc::resource_limit, "buchberger exceeded the pair reduction limit of " +
                                      std::to_string(limits.max_pair_reductions));
    Polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j], ord), basis, ord);
    if (!r.is_zero()) updater.add(monic(r, ord));
  }

  // Minimal basis: leading monomials that are not multiples of another's.
  std::vector<std::uint32_t> order_idx(basis.size());
  for (std::uint32_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(),
            [&](std::uint32_t a, std::uint32_t b) { return ord.less(lms[a], lms[b]); });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lms;
  for (std::uint32_t idx : order_idx) {
    bool covered = std::any_of(minimal_lms.begin(), minimal_lms.end(),
                               [&](const Monomial& m) { return m.divides(lms[idx]); });
    if (!covered) {
      minimal.push_back(basis[idx]);
      minimal_lms.push_back(lms[idx]);
    }
  }

  // Interreduce to the unique reduced basis; leading monomials are pairwise
  // non-divisible so only tails change.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Polynomial f = std::move(minimal[i]);
      minimal[i] = Polynomial::zero(ring);  // zero divisors are skipped
      Polynomial reduced = monic(normal_form(f, minimal, ord), ord);
      if (reduced != f) changed = true;
      minimal[i] = std::move(reduced);
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term(ord).m, b.leading_term(ord).m);
  });
  return GroebnerBasis{ring, ord, std::move(minimal)};
}

namespace {

// Counts exponent vectors inside the box (bounded by the pure-power leading
// monomials) that no leading monomial divides.  Recursion keeps the set of
// leading monomials whose processed coordinates are already dominated; equal
// threshold intervals are counted in bulk.
std::uint64_t count_standard(const std::vector<Monomial>& lms, const std::vector<Exp>& box,
                             std::uint32_t var, std::vector<const Monomial*> active) {
  const std::uint32_t nvars = static_cast<std::uint32_t>(box.size());
  if (active.empty()) {
    std::uint64_t prod = 1;
    for (std::uint32_t v = var; v < nvars; ++v) prod *= box[v];
    return prod;
  }
  if (var == nvars) return 0;  // some leading monomial fully divides

  std::vector<Exp> thresholds;
  thresholds.reserve(active.size() + 1);
  thresholds.push_back(0);
  for (const Monomial* m : active)
    if (m->e[var] > 0 && m->e[var] < box[var]) thresholds.push_back(m->e[var]);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::uint64_t total = 0;
  for (std::size_t t = 0; t < thresholds.size(); ++t) {
    Exp lo = thresholds[t];
    Exp hi = t + 1 < thresholds.size() ? thresholds[t + 1] : box[var];
    if (lo >= hi) continue;
    std::vector<const Monomial*> next;
    next.reserve(active.size());
    for (const Monomial* m : active)
      if (m->e[var] <= lo) next.push_back(m);
    total += std::uint64_t(hi - lo) * count_standard(lms, box, var + 1, std::move(next));
  }
  return total;
}

}  // namespace

std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis& basis) {
  const std::uint32_t nvars = basis.ring.nvars();
  std::vector<Monomial> lms;
  lms.reserve(basis.members.size());
  for (const auto& g : basis.members) {
    const Monomial& lm = g.leading_term(basis.order).m;
    if (lm.is_one()) return 0;  // unit ideal
    lms.push_back(lm);
  }
  std::vector<Exp> box(nvars, 0);
  for (std::uint32_t v = 0; v < nvars; ++v) {
    bool bounded = false;
    for (const auto& lm : lms) {
      if (lm.e[v] == 0 || lm.degree() != lm.e[v]) continue;  // pure power in v
      if (!bounded || lm.e[v] < box[v]) box[v] = lm.e[v];
      bounded = true;
    }
    if (!bounded) return std::nullopt;
  }
  std::vector<const Monomial*> active;
  active.reserve(lms.size());
  for (const auto& lm : lms) active.push_back(&lm);
  return count_standard(lms, box, 0, std::move(active));
}

}  // namespace evoclass::poly
