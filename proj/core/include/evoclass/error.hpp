#ifndef EVOCLASS_ERROR_HPP
#define EVOCLASS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace evoclass {

/// Error codes for every failure mode the library reports. Each precondition
/// violation maps to exactly one code so callers (and tests) can dispatch on it.
enum class Errc {
  not_prime,            // field characteristic is not prime
  bad_degree,           // extension degree < 1
  size_cap_exceeded,    // p^k above the field size cap
  enumeration_cap_exceeded,  // q^(n^2) above the enumeration cap
  exhaustion_cap_exceeded,   // exhaustive point count / matrix scan too large
  witness_cap_exceeded, // field order above the cap for the requested relation
  division_by_zero,     // multiplicative inverse of zero
  zero_element,         // nonzero field element required
  zero_polynomial,      // nonzero polynomial required
  zero_scale,           // monomial transport requires nonzero scale factors
  field_mismatch,       // operands belong to different fields
  dimension_mismatch,   // vector/algebra dimensions disagree
  ring_mismatch,        // polynomials from different rings
  bad_permutation,      // not a permutation of {0..n-1}
  non_invertible,       // map component with zero determinant
  dimension_not_two,    // closed-form classifier needs n = 2
  bad_argument,         // other argument contract violations
  parse_error,          // malformed textual input
  resource_limit,       // configurable iteration guardrail hit
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

/// True for codes the CLI reports with exit status 2 (resource/cap), as
/// opposed to usage errors (exit 1).
inline bool is_resource_error(Errc c) {
  switch (c) {
    case Errc::size_cap_exceeded:
    case Errc::enumeration_cap_exceeded:
    case Errc::exhaustion_cap_exceeded:
    case Errc::witness_cap_exceeded:
    case Errc::resource_limit:
      return true;
    default:
      return false;
  }
}

}  // namespace evoclass

#endif
