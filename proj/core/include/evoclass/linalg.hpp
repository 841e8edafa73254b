#ifndef EVOCLASS_LINALG_HPP
#define EVOCLASS_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "evoclass/field.hpp"

namespace evoclass::linalg {

/// Square matrix over a finite field, entries stored row-major as element
/// indices.  Vectors are coordinate rows; a linear map acts as v -> v * M,
/// with row i of M holding the image of the i-th basis vector.
class Mat {
 public:
  Mat() = default;
  Mat(gf::Field field, std::uint32_t n)
      : field_(std::move(field)), n_(n), a_(std::size_t(n) * n, 0) {}
  Mat(gf::Field field, std::uint32_t n, std::vector<std::uint16_t> entries);

  static Mat identity(const gf::Field& field, std::uint32_t n);

  const gf::Field& field() const { return field_; }
  std::uint32_t n() const { return n_; }
  std::uint16_t at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * n_ + j]; }
  void set(std::uint32_t i, std::uint32_t j, std::uint16_t v) { a_[std::size_t(i) * n_ + j] = v; }
  const std::vector<std::uint16_t>& entries() const { return a_; }

  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_ && field_ == o.field_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  /// Position in the row-major enumeration of all n x n matrices; the first
  /// entry is the most significant digit, so index order is the canonical
  /// tie-break order.
  std::uint64_t index() const;
  static Mat from_index(const gf::Field& field, std::uint32_t n, std::uint64_t index);

 private:
  gf::Field field_;
  std::uint32_t n_ = 0;
  std::vector<std::uint16_t> a_;
};

Mat mul(const Mat& a, const Mat& b);
/// Row vector times matrix.
std::vector<std::uint16_t> apply(const std::vector<std::uint16_t>& v, const Mat& m);

std::uint16_t det(const Mat& m);
std::uint32_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
bool invertible(const Mat& m);

/// Reduced row echelon form of an arbitrary (rows x cols) coefficient grid.
std::vector<std::vector<std::uint16_t>> rref(const gf::Field& field,
                                             std::vector<std::vector<std::uint16_t>> rows);

/// True when the two row sets span the same subspace.
bool same_row_space(const gf::Field& field, const std::vector<std::vector<std::uint16_t>>& a,
                    const std::vector<std::vector<std::uint16_t>>& b);

/// Solutions X of T * X = P (all square, same n): a particular solution plus
/// a basis of the kernel of T (as row-space vectors v with v~ ... ), or
/// nullopt when inconsistent.  The full solution set is
/// { particular + K : columns of K lie in the null space of T }.
struct LinearSolutions {
  Mat particular;
  std::vector<std::vector<std::uint16_t>> null_basis;  // column vectors of length n
};
std::optional<LinearSolutions> solve_matrix_equation(const Mat& t, const Mat& p);

}  // namespace evoclass::linalg

#endif
