#include "latnull/op_table.hpp"

#include <stdexcept>

namespace latnull {

namespace {

void check_element(const Lattice& lattice, ElementId v, const char* what) {
  if (v < 0 || v >= lattice.size()) {
    throw std::invalid_argument(std::string(what) + " id " +
                                std::to_string(v) + " out of range");
  }
}

}  // namespace

OpTable::OpTable(const Lattice& lattice)
    : lattice_(&lattice),
      n_(lattice.size()),
      cells_(static_cast<std::size_t>(n_) * n_, lattice.bottom()) {}

OpTable::OpTable(const Lattice& lattice, std::vector<ElementId> cells)
    : lattice_(&lattice), n_(lattice.size()), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("cell vector has wrong size");
  }
  for (ElementId v : cells_) check_element(lattice, v, "cell value");
}

void OpTable::set(ElementId x, ElementId y, ElementId value) {
  check_element(*lattice_, x, "row");
  check_element(*lattice_, y, "column");
  check_element(*lattice_, value, "cell value");
  cells_[static_cast<std::size_t>(x) * n_ + y] = value;
}

PartialOpTable::PartialOpTable(const Lattice& lattice)
    : lattice_(&lattice),
      n_(lattice.size()),
      cells_(static_cast<std::size_t>(n_) * n_, kUndetermined) {}

void PartialOpTable::set(ElementId x, ElementId y, ElementId value) {
  check_element(*lattice_, x, "row");
  check_element(*lattice_, y, "column");
  check_element(*lattice_, value, "cell value");
  cells_[static_cast<std::size_t>(x) * n_ + y] = value;
}

std::vector<std::pair<ElementId, ElementId>>
PartialOpTable::undetermined_cells() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (!determined(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

OpTable PartialOpTable::complete() const {
  for (ElementId v : cells_) {
    if (v == kUndetermined) {
      throw std::logic_error("table still has undetermined cells");
    }
  }
  return OpTable(*lattice_, cells_);
}

OpTable meet_table(const Lattice& lattice) {
  OpTable t(lattice);
  for (int x = 0; x < lattice.size(); ++x) {
    for (int y = 0; y < lattice.size(); ++y) t.set(x, y, lattice.meet(x, y));
  }
  return t;
}

OpTable join_table(const Lattice& lattice) {
  OpTable t(lattice);
  for (int x = 0; x < lattice.size(); ++x) {
    for (int y = 0; y < lattice.size(); ++y) t.set(x, y, lattice.join(x, y));
  }
  return t;
}

}  // namespace latnull
