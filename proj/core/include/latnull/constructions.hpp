#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "latnull/op_table.hpp"

namespace latnull {

// The six explicit idempotent-nullnorm constructions. Each differs from the
// common skeleton only on the off-diagonal I_a x I_a cells:
//   V1: (x∨a)∧(y∨a)        requires (p∧a)∨(q∧a) = a
//   V2: (x∧a)∨(y∧a)        requires (p∨a)∧(q∨a) = a
//   V3: p                  requires p∨a ≤ q∨a and q∧a ≤ p∧a
//   V4: q                  requires p∧a ≤ q∧a and q∨a ≤ p∨a
//   V5: x∨y                requires p ∦ q and p∨a = q∨a
//   V6: x∧y                requires p ∦ q and p∧a = q∧a
// Roles are canonical: p is the incomparable element with the smaller id.
enum class Variant { V1, V2, V3, V4, V5, V6 };

constexpr const char* to_string(Variant v) {
  switch (v) {
    case Variant::V1: return "V1";
    case Variant::V2: return "V2";
    case Variant::V3: return "V3";
    case Variant::V4: return "V4";
    case Variant::V5: return "V5";
    case Variant::V6: return "V6";
  }
  return "V?";
}

// Accepts "V3"/"v3".
std::optional<Variant> variant_from_string(std::string_view text);

// The table portion forced on every idempotent nullnorm with zero a:
// join below a, meet above a, constant a on the mixed blocks, the four
// projection formulas against I_a, and x on the I_a diagonal. Only the
// off-diagonal I_a x I_a cells stay undetermined.
PartialOpTable build_skeleton(const Lattice& lattice, const ZeroPoint& zero);

// Materializes one variant. Throws WrongIaSize unless exactly two elements
// are incomparable with a, and PreconditionFailed (with the evaluated terms)
// when the variant's condition does not hold.
OpTable construct_variant(const Lattice& lattice, const ZeroPoint& zero,
                          Variant variant);

// The variants whose preconditions hold, in tag order. Throws WrongIaSize.
std::vector<Variant> applicable_variants(const Lattice& lattice,
                                         const ZeroPoint& zero);

}  // namespace latnull
