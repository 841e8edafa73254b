#ifndef EVOCLASS_GROEBNER_HPP
#define EVOCLASS_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "evoclass/poly.hpp"

namespace evoclass::poly {

struct BuchbergerLimits {
  /// Guardrail on processed S-pairs; Errc::resource_limit when exceeded.
  std::uint64_t max_pair_reductions = 500000;
};

/// Reduced Groebner basis: members are monic, no monomial of a member is
/// divisible by the leading monomial of another member, and every S-pair
/// reduces to zero.  Unique for a given ideal and order; members are sorted
/// ascending by leading monomial.
struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  std::vector<Polynomial> members;
};

/// Buchberger's algorithm with the coprime-leading-monomial and chain
/// criteria, normal (smallest-lcm-first) pair selection, and a final
/// interreduction to the unique reduced basis.
GroebnerBasis buchberger(std::vector<Polynomial> generators, const MonomialOrder& ord,
                         const BuchbergerLimits& limits = {});

/// Number of monomials divisible by no leading monomial of the basis, or
/// nullopt when some variable has no pure-power bound (infinitely many).
/// For zero-dimensional radical ideals this equals the number of points of
/// the algebraic set.
std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis& basis);

}  // namespace evoclass::poly

#endif
