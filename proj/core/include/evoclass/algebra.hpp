#ifndef EVOCLASS_ALGEBRA_HPP
#define EVOCLASS_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evoclass/field.hpp"
#include "evoclass/linalg.hpp"

namespace evoclass::evo {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

using Vec = std::vector<std::uint16_t>;

/// Evolution algebra of dimension n over GF(q): distinct basis vectors
/// multiply to zero and the square of the i-th basis vector is row i of the
/// structure matrix.
class EvolutionAlgebra {
 public:
  EvolutionAlgebra(gf::Field field, std::uint32_t n, std::vector<std::uint16_t> rows_rowmajor);

  const gf::Field& field() const { return field_; }
  std::uint32_t dim() const { return n_; }
  std::uint16_t at(std::uint32_t i, std::uint32_t j) const { return t_[std::size_t(i) * n_ + j]; }
  const std::vector<std::uint16_t>& entries() const { return t_; }
  Vec row(std::uint32_t i) const { return Vec(t_.begin() + std::size_t(i) * n_, t_.begin() + std::size_t(i + 1) * n_); }
  linalg::Mat structure_matrix() const { return linalg::Mat(field_, n_, t_); }

  bool is_abelian() const;
  std::uint32_t derived_dim() const;      // rank of the structure matrix
  std::uint32_t annihilator_dim() const;  // number of zero rows
  std::vector<std::uint32_t> zero_rows() const;

  /// Product of two coordinate vectors; bilinear and commutative.
  Vec multiply(const Vec& u, const Vec& v) const;

  /// Position in the enumeration of all q^(n^2) structure matrices (row-major
  /// entries, first entry most significant).
  std::uint64_t index() const;

  bool operator==(const EvolutionAlgebra& o) const { return n_ == o.n_ && t_ == o.t_ && field_ == o.field_; }
  bool operator!=(const EvolutionAlgebra& o) const { return !(*this == o); }

 private:
  gf::Field field_;
  std::uint32_t n_ = 0;
  std::vector<std::uint16_t> t_;
};

/// Restartable enumeration of all q^(n^2) evolution algebras in index order;
/// item 0 is the abelian algebra.  Safe to shard across workers by index
/// range.
class AlgebraEnumeration {
 public:
  AlgebraEnumeration(gf::Field field, std::uint32_t n,
                     std::uint64_t cap = kDefaultEnumerationCap);
  std::uint64_t size() const { return count_; }
  EvolutionAlgebra at(std::uint64_t index) const;

 private:
  gf::Field field_;
  std::uint32_t n_;
  std::uint64_t count_;
};

/// The algebra carrying the structure matrix at the given enumeration index.
EvolutionAlgebra algebra_at(const gf::Field& field, std::uint32_t n, std::uint64_t index);

/// New algebra A' such that the monomial map e_i -> scale_i * e'_{sigma(i)}
/// is an isomorphism from A onto A'.  sigma is a permutation of {0..n-1};
/// all scale factors must be nonzero.
EvolutionAlgebra transport_monomial(const EvolutionAlgebra& a, const std::vector<std::uint32_t>& sigma,
                                    const std::vector<std::uint16_t>& scale);

/// Basis vector e_i as a coordinate vector.
Vec basis_vector(const gf::Field& field, std::uint32_t n, std::uint32_t i);

}  // namespace evoclass::evo

#endif
