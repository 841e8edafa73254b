#include "evoclass/algebra.hpp"

#include <algorithm>

namespace evoclass::evo {

EvolutionAlgebra::EvolutionAlgebra(gf::Field field, std::uint32_t n, std::vector<std::uint16_t> rows_rowmajor)
    : field_(std::move(field)), n_(n), t_(std::move(rows_rowmajor)) {
  if (n_ == 0) raise(Errc::bad_argument, "algebra dimension must be positive");
  if (t_.size() != std::size_t(n_) * n_) raise(Errc::dimension_mismatch, "structure matrix must be n x n");
  for (std::uint16_t v : t_)
    if (v >= field_.q()) raise(Errc::bad_argument, "structure constant out of field range");
}

bool EvolutionAlgebra::is_abelian() const {
  return std::all_of(t_.begin(), t_.end(), [](std::uint16_t v) { return v == 0; });
}

std::uint32_t EvolutionAlgebra::derived_dim() const { return linalg::rank(structure_matrix()); }

std::vector<std::uint32_t> EvolutionAlgebra::zero_rows() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    bool zero = true;
    for (std::uint32_t j = 0; j < n_; ++j)
      if (at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) out.push_back(i);
  }
  return out;
}

std::uint32_t EvolutionAlgebra::annihilator_dim() const {
  return static_cast<std::uint32_t>(zero_rows().size());
}

Vec EvolutionAlgebra::multiply(const Vec& u, const Vec& v) const {
  if (u.size() != n_ || v.size() != n_) raise(Errc::dimension_mismatch, "vector length must equal the algebra dimension");
  Vec out(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint16_t c = field_.mul(u[i], v[i]);
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) out[j] = field_.add(out[j], field_.mul(c, at(i, j)));
  }
  return out;
}

std::uint64_t EvolutionAlgebra::index() const {
  std::uint64_t idx = 0;
  for (std::uint16_t v : t_) idx = idx * field_.q() + v;
  return idx;
}

AlgebraEnumeration::AlgebraEnumeration(gf::Field field, std::uint32_t n, std::uint64_t cap)
    : field_(std::move(field)), n_(n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) {
    if (count > cap / field_.q())
      raise(Errc::enumeration_cap_exceeded,
            "q^(n^2) exceeds the enumeration cap " + std::to_string(cap));
    count *= field_.q();
  }
  count_ = count;
}

EvolutionAlgebra AlgebraEnumeration::at(std::uint64_t index) const {
  if (index >= count_) raise(Errc::bad_argument, "enumeration index out of range");
  return algebra_at(field_, n_, index);
}

EvolutionAlgebra algebra_at(const gf::Field& field, std::uint32_t n, std::uint64_t index) {
  std::vector<std::uint16_t> t(std::size_t(n) * n);
  for (std::size_t pos = t.size(); pos-- > 0;) {
    t[pos] = static_cast<std::uint16_t>(index % field.q());
    index /= field.q();
  }
  return EvolutionAlgebra(field, n, std::move(t));
}

EvolutionAlgebra transport_monomial(const EvolutionAlgebra& a, const std::vector<std::uint32_t>& sigma,
                                    const std::vector<std::uint16_t>& scale) {
  const std::uint32_t n = a.dim();
  const gf::Field& f = a.field();
  if (sigma.size() != n || scale.size() != n) raise(Errc::dimension_mismatch, "permutation/scale length mismatch");
  std::vector<bool> seen(n, false);
  for (std::uint32_t v : sigma) {
    if (v >= n || seen[v]) raise(Errc::bad_permutation, "sigma is not a permutation");
    seen[v] = true;
  }
  for (std::uint16_t s : scale)
    if (s == 0) raise(Errc::zero_scale, "monomial transport requires nonzero scale factors");

  // Row sigma(i), column sigma(j) of the image holds scale_j * t_ij / scale_i^2.
  std::vector<std::uint16_t> out(std::size_t(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint16_t inv_sq = f.inv(f.mul(scale[i], scale[i]));
    for (std::uint32_t j = 0; j < n; ++j)
      out[std::size_t(sigma[i]) * n + sigma[j]] = f.mul(f.mul(scale[j], a.at(i, j)), inv_sq);
  }
  return EvolutionAlgebra(f, n, std::move(out));
}

Vec basis_vector(const gf::Field& field, std::uint32_t n, std::uint32_t i) {
  (void)field;
  Vec v(n, 0);
  v[i] = gf::Field::one();
  return v;
}

}  // namespace evoclass::evo
