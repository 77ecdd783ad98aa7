#include "latnull/random_lattice.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace latnull {

namespace {

constexpr int kAttemptBudget = 10000;

// Unbiased and engine-deterministic; std::uniform_int_distribution is not
// specified bit-exactly across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

struct Dag {
  int n;
  std::vector<std::vector<char>> reach;  // reflexive-transitive closure

  explicit Dag(int size) : n(size), reach(size, std::vector<char>(size, 0)) {
    for (int i = 0; i < n; ++i) reach[i][i] = 1;
  }
};

}  // namespace

Lattice random_bounded_lattice(std::uint64_t seed, int n) {
  if (n < 2) {
    throw std::invalid_argument("a bounded lattice needs at least 2 elements");
  }

  CoverSpec spec;
  spec.names.reserve(n);
  spec.names.push_back("0");
  for (int i = 1; i + 1 < n; ++i) spec.names.push_back("e" + std::to_string(i));
  spec.names.push_back("1");
  spec.bottom = "0";
  spec.top = "1";

  const int bottom = 0;
  const int top = n - 1;
  const int m = n - 2;  // interior elements, ids 1..n-2

  if (m == 0) {
    spec.covers.emplace_back("0", "1");
    return Lattice::build_from_covers(spec);
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    // Rank the interior elements, then give each non-minimal one 1-3 covers
    // drawn from strictly lower ranks.
    const int rank_count = 1 + static_cast<int>(uniform_below(rng, m));
    std::vector<int> rank(m);
    for (int i = 0; i < m; ++i) {
      rank[i] = 1 + static_cast<int>(uniform_below(rng, rank_count));
    }
    {  // compact ranks so every level is populated
      std::vector<int> used = rank;
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      for (int& r : rank) {
        r = 1 + static_cast<int>(std::lower_bound(used.begin(), used.end(), r) -
                                 used.begin());
      }
    }

    std::vector<std::pair<int, int>> edges;  // element ids (lower, upper)
    std::vector<char> has_upper(m, 0);
    for (int i = 0; i < m; ++i) {
      if (rank[i] == 1) {
        edges.emplace_back(bottom, i + 1);
        continue;
      }
      std::vector<int> lower;
      for (int j = 0; j < m; ++j) {
        if (rank[j] < rank[i]) lower.push_back(j);
      }
      std::size_t want = 1 + uniform_below(rng, 3);
      want = std::min(want, lower.size());
      for (std::size_t k = 0; k < want; ++k) {
        const std::size_t pos = k + uniform_below(rng, lower.size() - k);
        std::swap(lower[k], lower[pos]);
        edges.emplace_back(lower[k] + 1, i + 1);
        has_upper[lower[k]] = 1;
      }
    }
    for (int i = 0; i < m; ++i) {
      if (!has_upper[i]) edges.emplace_back(i + 1, top);
    }

    Dag dag(n);
    for (const auto& [lo, hi] : edges) dag.reach[lo][hi] = 1;
    for (int k = 0; k < n; ++k) {
      for (int x = 0; x < n; ++x) {
        if (!dag.reach[x][k]) continue;
        for (int y = 0; y < n; ++y) {
          if (dag.reach[k][y]) dag.reach[x][y] = 1;
        }
      }
    }

    // transitive reduction -> candidate cover set
    CoverSpec candidate = spec;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y || !dag.reach[x][y]) continue;
        bool direct = true;
        for (int z = 0; z < n && direct; ++z) {
          if (z != x && z != y && dag.reach[x][z] && dag.reach[z][y]) {
            direct = false;
          }
        }
        if (direct) {
          candidate.covers.emplace_back(spec.names[x], spec.names[y]);
        }
      }
    }

    try {
      return Lattice::build_from_covers(candidate);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotALattice) throw;
    }
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no bounded lattice with " + std::to_string(n) +
                  " elements found for seed " + std::to_string(seed) +
                  " within " + std::to_string(kAttemptBudget) + " attempts");
}

}  // namespace latnull
