#pragma once

#include <cstdint>

#include "latnull/lattice.hpp"

namespace latnull {

// Seed-deterministic random bounded lattice with exactly n elements
// (labels "0", "e1", ..., "e(n-2)", "1"). Rejection-samples random ranked
// DAGs until the transitive closure is a lattice; throws GenerationExhausted
// after 10000 failed attempts. Requires n >= 2.
Lattice random_bounded_lattice(std::uint64_t seed, int n);

}  // namespace latnull
