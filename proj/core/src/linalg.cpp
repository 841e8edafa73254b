#include "evoclass/linalg.hpp"

#include <algorithm>

namespace evoclass::linalg {

Mat::Mat(gf::Field field, std::uint32_t n, std::vector<std::uint16_t> entries)
    : field_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (a_.size() != std::size_t(n) * n) raise(Errc::dimension_mismatch, "matrix entry count mismatch");
}

Mat Mat::identity(const gf::Field& field, std::uint32_t n) {
  Mat m(field, n);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, gf::Field::one());
  return m;
}

std::uint64_t Mat::index() const {
  std::uint64_t idx = 0;
  for (std::uint16_t v : a_) idx = idx * field_.q() + v;
  return idx;
}

Mat Mat::from_index(const gf::Field& field, std::uint32_t n, std::uint64_t index) {
  std::vector<std::uint16_t> e(std::size_t(n) * n);
  for (std::size_t pos = e.size(); pos-- > 0;) {
    e[pos] = static_cast<std::uint16_t>(index % field.q());
    index /= field.q();
  }
  return Mat(field, n, std::move(e));
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) raise(Errc::field_mismatch, "matrix product across fields");
  if (a.n() != b.n()) raise(Errc::dimension_mismatch, "matrix product dimension mismatch");
  const gf::Field& f = a.field();
  Mat c(f, a.n());
  for (std::uint32_t i = 0; i < a.n(); ++i)
    for (std::uint32_t j = 0; j < a.n(); ++j) {
      std::uint16_t s = 0;
      for (std::uint32_t k = 0; k < a.n(); ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
      c.set(i, j, s);
    }
  return c;
}

std::vector<std::uint16_t> apply(const std::vector<std::uint16_t>& v, const Mat& m) {
  if (v.size() != m.n()) raise(Errc::dimension_mismatch, "vector/matrix dimension mismatch");
  const gf::Field& f = m.field();
  std::vector<std::uint16_t> out(m.n(), 0);
  for (std::uint32_t j = 0; j < m.n(); ++j) {
    std::uint16_t s = 0;
    for (std::uint32_t i = 0; i < m.n(); ++i) s = f.add(s, f.mul(v[i], m.at(i, j)));
    out[j] = s;
  }
  return out;
}

namespace {

// Gaussian elimination on a copy; returns (rank, det) where det is only
// meaningful for square input.
std::pair<std::uint32_t, std::uint16_t> eliminate(const gf::Field& f,
                                                  std::vector<std::vector<std::uint16_t>>& rows) {
  std::uint32_t rank = 0;
  std::uint16_t det = gf::Field::one();
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(rows[pivot], rows[rank]);
      det = f.neg(det);
    }
    det = f.mul(det, rows[rank][col]);
    std::uint16_t inv = f.inv(rows[rank][col]);
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] = f.mul(rows[rank][j], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint16_t factor = rows[r][col];
      for (std::size_t j = col; j < cols; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return {rank, det};
}

std::vector<std::vector<std::uint16_t>> to_rows(const Mat& m) {
  std::vector<std::vector<std::uint16_t>> rows(m.n(), std::vector<std::uint16_t>(m.n()));
  for (std::uint32_t i = 0; i < m.n(); ++i)
    for (std::uint32_t j = 0; j < m.n(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

}  // namespace

std::uint16_t det(const Mat& m) {
  auto rows = to_rows(m);
  auto [rank, d] = eliminate(m.field(), rows);
  return rank == m.n() ? d : 0;
}

std::uint32_t rank(const Mat& m) {
  auto rows = to_rows(m);
  return eliminate(m.field(), rows).first;
}

bool invertible(const Mat& m) { return rank(m) == m.n(); }

std::optional<Mat> inverse(const Mat& m) {
  const gf::Field& f = m.field();
  std::uint32_t n = m.n();
  std::vector<std::vector<std::uint16_t>> aug(n, std::vector<std::uint16_t>(2 * n, 0));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) aug[i][j] = m.at(i, j);
    aug[i][n + i] = gf::Field::one();
  }
  if (eliminate(f, aug).first != n) return std::nullopt;
  Mat out(f, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) out.set(i, j, aug[i][n + j]);
  return out;
}

std::vector<std::vector<std::uint16_t>> rref(const gf::Field& field,
                                             std::vector<std::vector<std::uint16_t>> rows) {
  auto [rank, det] = eliminate(field, rows);
  (void)det;
  rows.resize(rank);
  return rows;
}

bool same_row_space(const gf::Field& field, const std::vector<std::vector<std::uint16_t>>& a,
                    const std::vector<std::vector<std::uint16_t>>& b) {
  return rref(field, a) == rref(field, b);
}

std::optional<LinearSolutions> solve_matrix_equation(const Mat& t, const Mat& p) {
  if (t.field() != p.field()) raise(Errc::field_mismatch, "solve across fields");
  if (t.n() != p.n()) raise(Errc::dimension_mismatch, "solve dimension mismatch");
  const gf::Field& f = t.field();
  std::uint32_t n = t.n();
  // Column j of X solves T x = p_j; row-reduce [T | P] once.
  std::vector<std::vector<std::uint16_t>> aug(n, std::vector<std::uint16_t>(2 * n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      aug[i][j] = t.at(i, j);
      aug[i][n + j] = p.at(i, j);
    }
  // Eliminate only over the T columns.
  std::uint32_t rank = 0;
  std::vector<std::uint32_t> pivot_col;
  for (std::uint32_t col = 0; col < n && rank < n; ++col) {
    std::uint32_t pivot = n;
    for (std::uint32_t r = rank; r < n; ++r)
      if (aug[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) continue;
    std::swap(aug[pivot], aug[rank]);
    std::uint16_t inv = f.inv(aug[rank][col]);
    for (std::uint32_t j = 0; j < 2 * n; ++j) aug[rank][j] = f.mul(aug[rank][j], inv);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      std::uint16_t factor = aug[r][col];
      for (std::uint32_t j = 0; j < 2 * n; ++j) aug[r][j] = f.sub(aug[r][j], f.mul(factor, aug[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Inconsistent if a zero T-row has a nonzero P part.
  for (std::uint32_t r = rank; r < n; ++r)
    for (std::uint32_t j = 0; j < n; ++j)
      if (aug[r][n + j] != 0) return std::nullopt;

  LinearSolutions sol{Mat(f, n), {}};
  for (std::uint32_t r = 0; r < rank; ++r)
    for (std::uint32_t j = 0; j < n; ++j) sol.particular.set(pivot_col[r], j, aug[r][n + j]);
  // Null-space basis: one vector per free column.
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::uint32_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint16_t> v(n, 0);
    v[free] = gf::Field::one();
    for (std::uint32_t r = 0; r < rank; ++r) v[pivot_col[r]] = f.neg(aug[r][free]);
    sol.null_basis.push_back(std::move(v));
  }
  return sol;
}

}  // namespace evoclass::linalg
