#ifndef EVOCLASS_CLASSIFY_HPP
#define EVOCLASS_CLASSIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evoclass/algebra.hpp"
#include "evoclass/ideals.hpp"
#include "evoclass/relation.hpp"
#include "evoclass/search.hpp"

namespace evoclass::classify {

enum class Method { bruteforce, groebner, invariant };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::groebner: return "groebner";
    case Method::invariant: return "invariant";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  if (s == "bruteforce") return Method::bruteforce;
  if (s == "groebner") return Method::groebner;
  if (s == "invariant") return Method::invariant;
  return std::nullopt;
}

/// The four isotopism classes of two-dimensional evolution algebras,
/// determined by the pair (annihilator dimension, derived dimension).
enum class IsotClass { abelian, e1, e2, e5 };

std::string isot_class_name(IsotClass c);
IsotClass isotopism_class_2d(const evo::EvolutionAlgebra& a);

/// Complete isomorphism invariant for two-dimensional algebras.  Families:
///   ABELIAN          zero algebra
///   ANN1_DIAG        one nonzero row with nonzero diagonal entry (E1 type)
///   ANN1_NIL         one nonzero row, zero diagonal entry (E4 type)
///   R1_SQCLASS       rank one, both rows nonzero; parameter = canonical
///                    square-class representative of the row ratio
///   R1_EXCEPTIONAL   the class of (e1+e2, -(e1+e2))
///   R2_A             rank two, normal form (e1, c e1 + d e2), d != 0;
///                    parameter c/d^2
///   R2_B             rank two, normal form (e2, c e1 + d e2), c != 0;
///                    parameters = minimal orbit pair
///   R2_C             rank two, normal form (e1+e2, c e1 + d e2), c,d != 0,
///                    c != d; parameters = minimal of the involution orbit
enum class Family : std::uint8_t {
  abelian,
  ann1_diag,
  ann1_nil,
  r1_sqclass,
  r1_exceptional,
  r2_a,
  r2_b,
  r2_c,
};

std::string family_name(Family f);

struct ClassLabel {
  Family family = Family::abelian;
  std::vector<std::uint16_t> params;  // canonical element indices, family-dependent arity

  bool operator==(const ClassLabel& o) const { return family == o.family && params == o.params; }
  bool operator!=(const ClassLabel& o) const { return !(*this == o); }
  bool operator<(const ClassLabel& o) const {
    if (family != o.family) return family < o.family;
    return params < o.params;
  }
  std::string str(const gf::Field& field) const;
};

ClassLabel isomorphism_label_2d(const evo::EvolutionAlgebra& a);

/// Strong-isotopy normal form: a structure matrix where every row with a
/// nonzero diagonal entry is diagonal-only, and below the first zero
/// diagonal the trailing square block vanishes.  The returned witness is a
/// verified strong isotopism from the input onto the normal form.
struct NormalForm {
  evo::EvolutionAlgebra algebra;
  search::MapTriple witness;
};
NormalForm strong_isotopy_normal_form(const evo::EvolutionAlgebra& a);

using Oracle = std::function<bool(const evo::EvolutionAlgebra&, const evo::EvolutionAlgebra&)>;

struct PartitionClass {
  std::uint64_t representative_index = 0;
  std::vector<std::uint64_t> member_indices;  // ascending; includes the representative
};

struct Partition {
  gf::Field field;
  std::uint32_t n = 0;
  std::vector<PartitionClass> classes;

  std::size_t class_count() const { return classes.size(); }
  /// Class positions keyed by member index; for partition comparisons.
  bool same_blocks(const Partition& o) const;
};

/// Greedy class extraction: repeatedly pop the enumeration-first remaining
/// algebra as a representative and remove everything the oracle relates to
/// it.  Input duplicates are collapsed first.  Oracle failures propagate
/// with the offending pair identified.
Partition algorithm1(std::vector<evo::EvolutionAlgebra> input, const Oracle& related, unsigned threads = 0);

Oracle bruteforce_oracle(Relation relation, search::Caps caps = {});
Oracle groebner_oracle(Relation relation, poly::OrderTag order = poly::OrderTag::grevlex);
Oracle invariant_oracle(Relation relation);
Oracle make_oracle(Relation relation, Method method, search::Caps caps = {},
                   poly::OrderTag order = poly::OrderTag::grevlex);

/// Partition of every algebra of the given field and dimension.
Partition classify_all(const gf::Field& field, std::uint32_t n, Relation relation, Method method,
                       unsigned threads = 0, search::Caps caps = {},
                       poly::OrderTag order = poly::OrderTag::grevlex,
                       std::uint64_t enumeration_cap = evo::kDefaultEnumerationCap);

std::uint64_t class_count(const gf::Field& field, Relation relation, Method method, unsigned threads = 0);

}  // namespace evoclass::classify

#endif
