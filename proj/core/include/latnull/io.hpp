#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "latnull/op_table.hpp"

namespace latnull {

// One parsed .lat file: a named cover specification plus the optional
// designated zero element.
struct LatticeDocument {
  std::string name;
  CoverSpec spec;
  std::optional<std::string> zero;
};

// Parses the plain-text lattice format:
//   lattice NAME
//   elements L1 L2 ...
//   bottom L / top L / zero L
//   cover LOWER UPPER
// '#' starts a comment; blank lines are ignored. Labels are [A-Za-z0-9_]+.
// Throws ParseError (with line number), DuplicateElement, UnknownLabel, or
// BadZero (zero names the bottom or the top).
LatticeDocument parse_lattice_file(std::string_view text);

// Reads and parses; throws ParseError when the file cannot be read.
LatticeDocument read_lattice_file(const std::string& path);

// Canonical emission: directives in fixed order, covers exactly as stored.
// parse_lattice_file(emit_lattice_file(doc)) reproduces doc.
std::string emit_lattice_file(const LatticeDocument& doc);

// Document with elements in id order and covers from the transitive
// reduction, sorted by (lower, upper).
LatticeDocument document_from_lattice(const Lattice& lattice,
                                      std::string name,
                                      std::optional<std::string> zero = {});

// DOT digraph of the Hasse diagram, edges pointing upward (lower -> upper),
// nodes and edges in id order. Byte-deterministic.
std::string emit_dot(const Lattice& lattice, std::string_view name = "lattice");

// CSV with a header row/column of labels; rows and columns in id order.
std::string emit_op_table_csv(const OpTable& table);
// Same, with "?" for undetermined cells (no element label may be "?").
std::string emit_op_table_csv(const PartialOpTable& table);

// Inverse of emit_op_table_csv for total tables. Header and row labels may
// appear in any order but must cover the lattice exactly.
OpTable parse_op_table_csv(std::string_view text, const Lattice& lattice);

}  // namespace latnull
