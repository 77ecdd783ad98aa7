#include <benchmark/benchmark.h>

#include <string>

#include "latnull/axioms.hpp"
#include "latnull/characterization.hpp"
#include "latnull/lattice.hpp"
#include "latnull/random_lattice.hpp"

namespace {

using namespace latnull;

// k-by-k grid (product of two chains): always a lattice, size k*k.
CoverSpec grid_spec(int k) {
  CoverSpec spec;
  auto name = [&](int i, int j) {
    return "n" + std::to_string(i) + "_" + std::to_string(j);
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) spec.names.push_back(name(i, j));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i + 1 < k) spec.covers.emplace_back(name(i, j), name(i + 1, j));
      if (j + 1 < k) spec.covers.emplace_back(name(i, j), name(i, j + 1));
    }
  }
  spec.bottom = name(0, 0);
  spec.top = name(k - 1, k - 1);
  return spec;
}

// diamond with one zero candidate and k elements incomparable with it
CoverSpec diamond_spec(int k) {
  CoverSpec spec;
  spec.names = {"0", "a"};
  for (int i = 1; i <= k; ++i) spec.names.push_back("x" + std::to_string(i));
  spec.names.push_back("1");
  spec.bottom = "0";
  spec.top = "1";
  spec.covers.emplace_back("0", "a");
  spec.covers.emplace_back("a", "1");
  for (int i = 1; i <= k; ++i) {
    spec.covers.emplace_back("0", "x" + std::to_string(i));
    spec.covers.emplace_back("x" + std::to_string(i), "1");
  }
  return spec;
}

void BM_BuildFromCovers(benchmark::State& state) {
  const CoverSpec spec = grid_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Lattice L = Lattice::build_from_covers(spec);
    benchmark::DoNotOptimize(L.size());
  }
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_BuildFromCovers)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Complexity();

void BM_CheckAssociative(benchmark::State& state) {
  const Lattice L =
      Lattice::build_from_covers(grid_spec(static_cast<int>(state.range(0))));
  const OpTable table = meet_table(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_associative(table).passed);
  }
  state.SetComplexityN(L.size());
}
BENCHMARK(BM_CheckAssociative)->Arg(4)->Arg(6)->Arg(8)->Complexity();

void BM_CheckMonotone(benchmark::State& state) {
  const Lattice L =
      Lattice::build_from_covers(grid_spec(static_cast<int>(state.range(0))));
  const OpTable table = join_table(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_monotone(table).passed);
  }
}
BENCHMARK(BM_CheckMonotone)->Arg(4)->Arg(6)->Arg(8);

void BM_EnumerateDiamond(benchmark::State& state) {
  const Lattice L = Lattice::build_from_covers(
      diamond_spec(static_cast<int>(state.range(0))));
  const ZeroPoint zero(L, "a");
  for (auto _ : state) {
    auto tables = enumerate_idempotent_nullnorms(L, zero);
    benchmark::DoNotOptimize(tables.size());
  }
}
BENCHMARK(BM_EnumerateDiamond)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateDiamondParallel(benchmark::State& state) {
  const Lattice L = Lattice::build_from_covers(diamond_spec(4));
  const ZeroPoint zero(L, "a");
  for (auto _ : state) {
    auto tables = enumerate_idempotent_nullnorms(
        L, zero, SearchSpace::LemmaRestricted,
        static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(tables.size());
  }
}
BENCHMARK(BM_EnumerateDiamondParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_RandomLattice(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    Lattice L = random_bounded_lattice(seed++, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(L.size());
  }
}
BENCHMARK(BM_RandomLattice)->Arg(6)->Arg(8)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
