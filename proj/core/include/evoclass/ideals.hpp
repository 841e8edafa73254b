#ifndef EVOCLASS_IDEALS_HPP
#define EVOCLASS_IDEALS_HPP

#include <cstdint>
#include <vector>

#include "evoclass/algebra.hpp"
#include "evoclass/groebner.hpp"
#include "evoclass/relation.hpp"

namespace evoclass::ideals {

/// How the invertibility of a matrix of variables is encoded in the ideal:
/// the literal det(M)^(q-1) - 1 constraint, or the Rabinowitsch variant with
/// an auxiliary variable u and generators u*det(M) - 1, u^q - u.  The
/// auxiliary variable is determined by the matrix entries, so both encodings
/// define algebraic sets of the same size.
enum class DetEncoding { power, rabinowitsch };

enum class CountMethod { groebner, exhaustive };

/// Polynomial ideal whose zeros are exactly the isomorphisms (or isotopism
/// triples) between two evolution algebras.  Field equations x^q - x are
/// always included, making the ideal zero-dimensional and radical so the
/// standard-monomial count equals the number of points.
struct IdealSpec {
  poly::Ring ring;
  std::vector<poly::Polynomial> generators;  // full list: structural + det + field equations
  std::vector<poly::Polynomial> structural;  // entry-matching generators only
  evo::EvolutionAlgebra left, right;
  Relation relation;  // isomorphism or isotopism
  DetEncoding encoding;
  std::uint32_t matrix_count;  // 1 for isomorphism, 3 for isotopism
};

IdealSpec isom_ideal(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b,
                     DetEncoding encoding = DetEncoding::power);
IdealSpec isot_ideal(const evo::EvolutionAlgebra& a, const evo::EvolutionAlgebra& b,
                     DetEncoding encoding = DetEncoding::power);

struct CountOptions {
  CountMethod method = CountMethod::groebner;
  poly::OrderTag order = poly::OrderTag::grevlex;
  std::uint64_t exhaustion_cap = std::uint64_t{1} << 24;
  poly::BuchbergerLimits limits{};
};

/// Number of points of the algebraic set.  The groebner method counts
/// standard monomials of the reduced basis; the exhaustive method walks all
/// invertible matrix assignments and evaluates the structural generators.
std::uint64_t count_points(const IdealSpec& ideal, const CountOptions& options = {});

}  // namespace evoclass::ideals

#endif
