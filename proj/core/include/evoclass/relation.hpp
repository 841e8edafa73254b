#ifndef EVOCLASS_RELATION_HPP
#define EVOCLASS_RELATION_HPP

#include <optional>
#include <string>
#include <string_view>

namespace evoclass {

/// The three equivalence relations on evolution algebras, coarsening left to
/// right: isomorphic algebras are strongly isotopic, strongly isotopic ones
/// are isotopic.
enum class Relation { isomorphism, strong_isotopism, isotopism };

inline std::string relation_name(Relation r) {
  switch (r) {
    case Relation::isomorphism: return "isomorphism";
    case Relation::strong_isotopism: return "strong-isotopism";
    case Relation::isotopism: return "isotopism";
  }
  return "?";
}

inline std::optional<Relation> parse_relation(std::string_view s) {
  if (s == "isomorphism") return Relation::isomorphism;
  if (s == "strong-isotopism" || s == "strong_isotopism") return Relation::strong_isotopism;
  if (s == "isotopism") return Relation::isotopism;
  return std::nullopt;
}

}  // namespace evoclass

#endif
