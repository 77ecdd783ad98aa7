#pragma once

#include <array>
#include <string>
#include <vector>

#include "latnull/op_table.hpp"

namespace latnull {

enum class Axiom {
  Commutative,
  Associative,
  Monotone,
  ZeroElement,
  Idempotent,
};

constexpr const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Commutative: return "commutative";
    case Axiom::Associative: return "associative";
    case Axiom::Monotone: return "monotone";
    case Axiom::ZeroElement: return "zero element";
    case Axiom::Idempotent: return "idempotent";
  }
  return "axiom";
}

// Result of one exhaustive axiom check. On failure, `witness` holds the
// labels of the first violating tuple in label order and `detail` the fully
// evaluated identity, e.g. "V(1,V(p,q)) = w ≠ r = V(V(1,p),q)".
struct AxiomReport {
  Axiom axiom;
  bool passed = true;
  std::vector<std::string> witness;
  std::string detail;
};

AxiomReport check_commutative(const OpTable& table);
AxiomReport check_associative(const OpTable& table);
AxiomReport check_monotone(const OpTable& table);
// Checks V(x,0)=x for x <= a, V(x,1)=x for x >= a, and the consequence
// V(x,a)=a for every x.
AxiomReport check_zero_element(const OpTable& table, const ZeroPoint& zero);
AxiomReport check_idempotent(const OpTable& table);

struct NullnormCheck {
  bool passed = false;
  // In order: commutative, associative, monotone, zero element, idempotent.
  std::array<AxiomReport, 5> reports;
};

// Runs all five checks unconditionally (no short-circuiting) so callers can
// print a complete diagnosis in one pass.
NullnormCheck is_idempotent_nullnorm(const OpTable& table,
                                     const ZeroPoint& zero);

}  // namespace latnull
