#pragma once

#include <optional>
#include <vector>

#include "latnull/lattice.hpp"

namespace latnull {

// Total binary operation V: L x L -> L stored as an n-by-n table of ids.
// Holds a pointer to the lattice it is defined on; the lattice must outlive
// the table.
class OpTable {
 public:
  // All cells initialized to bottom.
  explicit OpTable(const Lattice& lattice);
  OpTable(const Lattice& lattice, std::vector<ElementId> cells);

  const Lattice& lattice() const { return *lattice_; }
  int size() const { return n_; }

  ElementId at(ElementId x, ElementId y) const {
    return cells_[static_cast<std::size_t>(x) * n_ + y];
  }
  void set(ElementId x, ElementId y, ElementId value);

  const std::vector<ElementId>& cells() const { return cells_; }

  // Equal when defined on the same lattice object with identical cells.
  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.lattice_ == b.lattice_ && a.cells_ == b.cells_;
  }

 private:
  const Lattice* lattice_;
  int n_;
  std::vector<ElementId> cells_;
};

// Operation table in which cells may still be undetermined. The skeleton
// construction leaves exactly the off-diagonal I_a x I_a cells open.
class PartialOpTable {
 public:
  static constexpr ElementId kUndetermined = -1;

  explicit PartialOpTable(const Lattice& lattice);

  const Lattice& lattice() const { return *lattice_; }
  int size() const { return n_; }

  bool determined(ElementId x, ElementId y) const {
    return raw(x, y) != kUndetermined;
  }
  std::optional<ElementId> get(ElementId x, ElementId y) const {
    ElementId v = raw(x, y);
    if (v == kUndetermined) return std::nullopt;
    return v;
  }
  ElementId raw(ElementId x, ElementId y) const {
    return cells_[static_cast<std::size_t>(x) * n_ + y];
  }
  void set(ElementId x, ElementId y, ElementId value);

  // Undetermined positions in row-major order (both (x,y) and (y,x) appear).
  std::vector<std::pair<ElementId, ElementId>> undetermined_cells() const;

  // Throws std::logic_error when any cell is still undetermined.
  OpTable complete() const;

 private:
  const Lattice* lattice_;
  int n_;
  std::vector<ElementId> cells_;
};

// The lattice operations themselves as tables; handy as known-good (or
// known-bad) inputs for the axiom checkers.
OpTable meet_table(const Lattice& lattice);
OpTable join_table(const Lattice& lattice);

}  // namespace latnull
