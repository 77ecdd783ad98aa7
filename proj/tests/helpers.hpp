#pragma once

#include <string>
#include <utility>

#include "latnull/io.hpp"
#include "latnull/lattice.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(LATNULL_FIXTURE_DIR) + "/" + name;
}

struct Fixture {
  latnull::LatticeDocument doc;
  latnull::Lattice lattice;
};

inline Fixture load(const std::string& name) {
  auto doc = latnull::read_lattice_file(fixture_path(name));
  auto lattice = latnull::Lattice::build_from_covers(doc.spec);
  return Fixture{std::move(doc), std::move(lattice)};
}

inline latnull::ZeroPoint zero_of(const Fixture& f) {
  return latnull::ZeroPoint(f.lattice, *f.doc.zero);
}

}  // namespace testutil
