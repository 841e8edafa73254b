#ifndef EVOCLASS_SEARCH_HPP
#define EVOCLASS_SEARCH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "evoclass/algebra.hpp"
#include "evoclass/linalg.hpp"
#include "evoclass/relation.hpp"

namespace evoclass::search {

/// Candidate isotopism (f, g, h) as matrices acting on coordinate rows.
/// f = g encodes a strong isotopism, f = g = h an isomorphism.
struct MapTriple {
  linalg::Mat f, g, h;
};

struct Caps {
  std::uint64_t exhaustion = std::uint64_t{1} << 24;  // q^(n^2) bound for matrix streams
  std::uint32_t isomorphism_q = 64;
  std::uint32_t strong_isotopism_q = 7;
  std::uint32_t isotopism_q = 3;
};

/// All invertible n x n matrices in enumeration (row-major index) order.
/// The list is cached per field and dimension; treat it as immutable.
std::shared_ptr<const std::vector<linalg::Mat>> gl_enumerate(const gf::Field& field, std::uint32_t n,
                                                             std::uint64_t cap = Caps{}.exhaustion);

/// Checks f(e_i) g(e_j) = h(e_i e_j) on every basis pair, which suffices by
/// bilinearity.  All three components must be invertible.
bool verify_isotopism(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b, const MapTriple& t);

/// First witness in enumeration order, or nullopt after exhausting the
/// search space.  For isomorphism only F is searched (G = H = F); for strong
/// isotopism pairs (F, H); for isotopism triples (F, G, H).  H is recovered
/// by linear solving rather than blind enumeration, which returns the same
/// witness as the blind scan.
std::optional<MapTriple> find_witness(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b,
                                      Relation relation, const Caps& caps = {});

/// Reference implementation enumerating full matrix tuples; used to validate
/// the solver-backed search.
std::optional<MapTriple> find_witness_blind(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b,
                                            Relation relation, const Caps& caps = {});

}  // namespace evoclass::search

#endif
