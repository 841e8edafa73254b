#ifndef EVOCLASS_TEXT_HPP
#define EVOCLASS_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "evoclass/algebra.hpp"
#include "evoclass/linalg.hpp"
#include "evoclass/poly.hpp"

namespace evoclass::text {

/// Inline algebra literal: rows separated by ';', entries by ',', entries in
/// the field element encoding ("1,0;1,0"; bracketed coefficient lists for
/// extension fields).
std::string algebra_literal(const evo::EvolutionAlgebra& a);
evo::EvolutionAlgebra parse_algebra_literal(const gf::Field& field, std::uint32_t n, std::string_view text);

std::string matrix_literal(const linalg::Mat& m);

/// Polynomial in the CLI debug grammar: terms joined by '+'/'-', each term a
/// '*'-product of coefficients and var^exp factors, e.g. "2*x^2*y - x + 1".
poly::Polynomial parse_polynomial(const poly::Ring& ring, std::string_view text);

/// Splits on the separator at bracket depth zero (commas inside "[...]"
/// element encodings do not split).
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace evoclass::text

#endif
