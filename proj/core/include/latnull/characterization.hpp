#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "latnull/op_table.hpp"

namespace latnull {

struct ConditionEval {
  bool holds = false;
  std::string detail;  // evaluated terms, e.g. "(p∧a)∨(q∧a) = 0 ≠ a"
};

// Outcome of the four-condition existence test for a lattice with exactly
// two elements p, q incomparable with the zero element:
//   (i)   (p∧a)∨(q∧a) = a
//   (ii)  (p∨a)∧(q∨a) = a
//   (iii) p∨a ≤ q∨a and q∧a ≤ p∧a
//   (iv)  p∧a ≤ q∧a and q∨a ≤ p∨a
// An idempotent nullnorm with zero a exists iff at least one holds.
struct ExistenceVerdict {
  bool exists = false;
  std::array<ConditionEval, 4> conditions;
  std::string p_label;
  std::string q_label;
};

// Throws WrongIaSize unless |I_a| == 2 (the test is only valid there).
ExistenceVerdict decide_existence(const Lattice& lattice,
                                  const ZeroPoint& zero);

enum class UniquenessKind {
  UniqueV3,    // strict/weak pattern: p∨a<q∨a, q∧a≤p∧a (or ≤ / <)
  UniqueV4,    // dual pattern
  ExactlyTwo,  // p∨a=q∨a and p∧a=q∧a: precisely V3 and V4
  Other,       // no certificate; the oracle may still count solutions
};

constexpr const char* to_string(UniquenessKind k) {
  switch (k) {
    case UniquenessKind::UniqueV3: return "unique_v3";
    case UniquenessKind::UniqueV4: return "unique_v4";
    case UniquenessKind::ExactlyTwo: return "exactly_two";
    case UniquenessKind::Other: return "other";
  }
  return "?";
}

struct UniquenessClass {
  UniquenessKind kind = UniquenessKind::Other;
  // Populated only when a certificate applies, never from enumeration, so
  // the two paths stay independent for cross-validation.
  std::optional<int> certified_count;
};

// Throws WrongIaSize unless |I_a| == 2.
UniquenessClass classify_uniqueness(const Lattice& lattice,
                                    const ZeroPoint& zero);

enum class SearchSpace {
  // Candidates for each open cell: {(x∧a)∨(y∧a), (x∨a)∧(y∨a)} ∪ I_a.
  LemmaRestricted,
  // Candidates: every element. Exists to validate the restriction itself.
  Full,
};

// Brute-force ground truth: completes the skeleton symmetrically over all
// candidate assignments and keeps the tables that pass all five axiom
// checks. Results are sorted by their flattened cell tuple, so parallel and
// serial runs return bit-identical lists.
// Budget guard: |I_a| <= 4 in LemmaRestricted mode, |I_a| <= 2 in Full mode;
// beyond that throws SearchSpaceTooLarge with the candidate-count bound.
std::vector<OpTable> enumerate_idempotent_nullnorms(
    const Lattice& lattice, const ZeroPoint& zero,
    SearchSpace space = SearchSpace::LemmaRestricted, int workers = 1);

// For every enumerated idempotent nullnorm and every pair x, y in I_a with
// (x∧a)∨(y∧a) < a and (x∨a)∧(y∨a) > a, V(x,y) must land in I_a.
// Vacuously true when fewer than two elements are incomparable with a.
bool check_ia_lemma(const Lattice& lattice, const ZeroPoint& zero);

// With I_a = {p, q} and p, q comparable: p∧a = q∧a or p∨a = q∨a must hold.
// Throws NotApplicable when |I_a| != 2 or p ∥ q.
bool check_comparable_corollary(const Lattice& lattice, const ZeroPoint& zero);

// With p, q in I_a comparable and p∧a = q∧a, p∨a = q∨a:
//   (p∧a)∨(q∧a)∨(p∧q) = p∧q  and  (p∨a)∧(q∨a)∧(p∨q) = p∨q.
// Throws NotApplicable naming the first unmet hypothesis.
bool check_pro_special(const Lattice& lattice, const ZeroPoint& zero,
                       ElementId p, ElementId q);

}  // namespace latnull
