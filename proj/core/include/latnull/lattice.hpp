#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latnull/error.hpp"

namespace latnull {

// Elements are dense integer ids in [0, n), assigned in declaration order.
// All user-facing output goes through labels, never raw ids.
using ElementId = int;

// Hasse-diagram input: labels plus the covering pairs (lower, upper).
// The cover set must be transitively reduced; implied pairs are rejected.
struct CoverSpec {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  std::string bottom;
  std::string top;
};

class ZeroPoint;

// Finite bounded lattice: the full order relation as bitset rows plus fully
// materialized meet/join tables. Immutable after construction; queries are
// pure reads and safe to share across threads.
class Lattice {
 public:
  // Validates everything: acyclicity, Hasse minimality of the cover set,
  // declared bounds, and existence of all meets and joins.
  // Throws CycleError, RedundantCover, DuplicateElement, UnknownLabel,
  // BadBounds, or NotALattice (with the first offending pair in id order).
  static Lattice build_from_covers(const CoverSpec& spec);

  int size() const { return n_; }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  const std::string& label(ElementId x) const { return names_[x]; }
  std::optional<ElementId> find(std::string_view label) const;
  // Throws UnknownLabel.
  ElementId id_of(std::string_view label) const;

  bool leq(ElementId x, ElementId y) const {
    return (up_[static_cast<std::size_t>(x) * words_ + (y >> 6)] >>
            (y & 63)) & 1u;
  }
  bool lt(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const {
    return leq(x, y) || leq(y, x);
  }
  bool incomparable(ElementId x, ElementId y) const {
    return !comparable(x, y);
  }

  ElementId meet(ElementId x, ElementId y) const { return meet_[idx(x, y)]; }
  ElementId join(ElementId x, ElementId y) const { return join_[idx(x, y)]; }

  // I_a: every x with neither x <= a nor a <= x, ascending by id.
  std::vector<ElementId> incomparables(const ZeroPoint& a) const;

  // [lo, hi]; throws NotComparable when lo is not below hi.
  std::vector<ElementId> interval(ElementId lo, ElementId hi) const;

  // x ∧ (y ∨ z) == (x ∧ y) ∨ (x ∧ z) for all triples.
  bool is_distributive() const;

  // The cover relation (transitive reduction), sorted by (lower, upper) id.
  const std::vector<std::pair<ElementId, ElementId>>& cover_pairs() const {
    return covers_;
  }

  // Element ids ordered by label. Axiom checkers scan in this order so that
  // reported witnesses do not depend on how a file happens to number elements.
  const std::vector<ElementId>& by_label() const { return by_label_; }

 private:
  Lattice() = default;

  std::size_t idx(ElementId x, ElementId y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }

  int n_ = 0;
  int words_ = 0;  // 64-bit words per bitset row
  ElementId bottom_ = 0;
  ElementId top_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint64_t> up_;    // up_[x] bit y: x <= y
  std::vector<std::uint64_t> down_;  // down_[x] bit y: y <= x
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::vector<std::pair<ElementId, ElementId>> covers_;
  std::vector<ElementId> by_label_;
};

// A designated zero element: any element other than bottom and top.
class ZeroPoint {
 public:
  // Throws BadZero when a is the bottom or the top (or out of range).
  ZeroPoint(const Lattice& lattice, ElementId a);
  // Resolves the label first; throws UnknownLabel or BadZero.
  ZeroPoint(const Lattice& lattice, std::string_view label);

  ElementId id() const { return a_; }

 private:
  ElementId a_;
};

}  // namespace latnull
