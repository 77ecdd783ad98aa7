#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "latnull/axioms.hpp"
#include "latnull/constructions.hpp"

using namespace latnull;
using testutil::load;
using testutil::zero_of;

TEST_CASE("skeleton cells follow the forced formulas") {
  auto m3 = load("m3.lat");
  const Lattice& L = m3.lattice;
  ZeroPoint zero = zero_of(m3);
  auto sk = build_skeleton(L, zero);

  const ElementId b = L.id_of("0"), p = L.id_of("p"), q = L.id_of("q"),
                  a = L.id_of("a"), t = L.id_of("1");
  CHECK(sk.get(b, p) == b);  // 0 ∨ (p∧a) = 0
  CHECK(sk.get(t, p) == t);  // 1 ∧ (p∨a) = 1
  CHECK(sk.get(p, p) == p);
  CHECK(sk.get(b, t) == a);
  CHECK(sk.get(a, p) == a);
  CHECK_FALSE(sk.determined(p, q));
  CHECK_FALSE(sk.determined(q, p));
  CHECK(sk.undetermined_cells().size() == 2);
}

TEST_CASE("skeleton on OBSTRUCT9 projects below a") {
  auto ob = load("obstruct9.lat");
  const Lattice& L = ob.lattice;
  auto sk = build_skeleton(L, zero_of(ob));
  // z ∈ [0,a), p ∈ I_a: z ∨ (p∧a) = z ∨ x = z
  CHECK(sk.get(L.id_of("z"), L.id_of("p")) == L.id_of("z"));
}

TEST_CASE("empty I_a leaves nothing undetermined") {
  auto chain = load("chain3.lat");
  auto sk = build_skeleton(chain.lattice, zero_of(chain));
  CHECK(sk.undetermined_cells().empty());
  CHECK_NOTHROW(sk.complete());
}

TEST_CASE("cells are undetermined only off-diagonal inside I_a") {
  for (const char* name : {"m3.lat", "grid23.lat", "obstruct9.lat",
                           "kite7.lat", "ladder7.lat", "ladder8.lat"}) {
    CAPTURE(name);
    auto f = load(name);
    const Lattice& L = f.lattice;
    ZeroPoint zero = zero_of(f);
    auto sk = build_skeleton(L, zero);
    for (const auto& [x, y] : sk.undetermined_cells()) {
      CHECK(x != y);
      CHECK(L.incomparable(x, zero.id()));
      CHECK(L.incomparable(y, zero.id()));
    }
  }
}

TEST_CASE("V1 on KITE7") {
  auto kite = load("kite7.lat");
  const Lattice& L = kite.lattice;
  ZeroPoint zero = zero_of(kite);
  auto v1 = construct_variant(L, zero, Variant::V1);
  // (p∨a)∧(q∨a) = 1∧1 = 1
  CHECK(v1.at(L.id_of("p"), L.id_of("q")) == L.top());
  CHECK(is_idempotent_nullnorm(v1, zero).passed);
  CHECK(applicable_variants(L, zero) == std::vector<Variant>{Variant::V1});
}

TEST_CASE("V2 on the dual of KITE7") {
  auto dual = load("dualkite7.lat");
  const Lattice& L = dual.lattice;
  ZeroPoint zero = zero_of(dual);
  auto v2 = construct_variant(L, zero, Variant::V2);
  // (p∧a)∨(q∧a) = 0∨0 = 0
  CHECK(v2.at(L.id_of("p"), L.id_of("q")) == L.bottom());
  CHECK(is_idempotent_nullnorm(v2, zero).passed);
  CHECK(applicable_variants(L, zero) == std::vector<Variant>{Variant::V2});
}

TEST_CASE("V3 on GRID23") {
  auto grid = load("grid23.lat");
  const Lattice& L = grid.lattice;
  ZeroPoint zero = zero_of(grid);
  auto v3 = construct_variant(L, zero, Variant::V3);
  CHECK(L.label(v3.at(L.id_of("p"), L.id_of("q"))) == "p");
  CHECK(L.label(v3.at(L.id_of("q"), L.id_of("p"))) == "p");
  CHECK(is_idempotent_nullnorm(v3, zero).passed);
}

TEST_CASE("V3 and V4 on M3") {
  auto m3 = load("m3.lat");
  const Lattice& L = m3.lattice;
  ZeroPoint zero = zero_of(m3);
  auto v3 = construct_variant(L, zero, Variant::V3);
  auto v4 = construct_variant(L, zero, Variant::V4);
  CHECK(L.label(v3.at(L.id_of("p"), L.id_of("q"))) == "p");
  CHECK(L.label(v4.at(L.id_of("p"), L.id_of("q"))) == "q");
  CHECK(is_idempotent_nullnorm(v3, zero).passed);
  CHECK(is_idempotent_nullnorm(v4, zero).passed);
  CHECK(applicable_variants(L, zero) ==
        std::vector<Variant>{Variant::V3, Variant::V4});
}

TEST_CASE("V5 and V6 on LADDER7 coincide with V4 and V3") {
  auto l7 = load("ladder7.lat");
  const Lattice& L = l7.lattice;
  ZeroPoint zero = zero_of(l7);
  auto v3 = construct_variant(L, zero, Variant::V3);
  auto v4 = construct_variant(L, zero, Variant::V4);
  auto v5 = construct_variant(L, zero, Variant::V5);
  auto v6 = construct_variant(L, zero, Variant::V6);
  // p < q here, so the joins collapse onto q and the meets onto p
  CHECK(L.label(v5.at(L.id_of("p"), L.id_of("q"))) == "q");
  CHECK(v5 == v4);
  CHECK(v6 == v3);
  CHECK(is_idempotent_nullnorm(v5, zero).passed);
  CHECK(is_idempotent_nullnorm(v6, zero).passed);
  CHECK(applicable_variants(L, zero) ==
        std::vector<Variant>{Variant::V3, Variant::V4, Variant::V5,
                             Variant::V6});
}

TEST_CASE("V5 is rejected on LADDER8, V6 still works") {
  auto l8 = load("ladder8.lat");
  const Lattice& L = l8.lattice;
  ZeroPoint zero = zero_of(l8);
  try {
    construct_variant(L, zero, Variant::V5);
    FAIL("V5 must not apply on LADDER8");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
    CHECK(std::string(e.what()).find("p∨a = r ≠ w = q∨a") !=
          std::string::npos);
  }
  auto v6 = construct_variant(L, zero, Variant::V6);
  auto v3 = construct_variant(L, zero, Variant::V3);
  CHECK(v6 == v3);
  CHECK(is_idempotent_nullnorm(v6, zero).passed);
  CHECK(applicable_variants(L, zero) ==
        std::vector<Variant>{Variant::V3, Variant::V6});
}

TEST_CASE("no variant applies on OBSTRUCT9") {
  auto ob = load("obstruct9.lat");
  CHECK(applicable_variants(ob.lattice, zero_of(ob)).empty());
}

TEST_CASE("constructions refuse the wrong I_a size") {
  auto chain = load("chain3.lat");
  ZeroPoint zero = zero_of(chain);
  try {
    construct_variant(chain.lattice, zero, Variant::V3);
    FAIL("expected WrongIaSize");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongIaSize);
    CHECK(std::string(e.what()).find("found 0") != std::string::npos);
  }
  CHECK_THROWS_AS(applicable_variants(chain.lattice, zero), Error);
}

TEST_CASE("construct_variant is deterministic") {
  auto grid = load("grid23.lat");
  ZeroPoint zero = zero_of(grid);
  CHECK(construct_variant(grid.lattice, zero, Variant::V3) ==
        construct_variant(grid.lattice, zero, Variant::V3));
}

TEST_CASE("variant names parse case-insensitively") {
  CHECK(variant_from_string("v3") == Variant::V3);
  CHECK(variant_from_string("V6") == Variant::V6);
  CHECK_FALSE(variant_from_string("v7").has_value());
  CHECK_FALSE(variant_from_string("x3").has_value());
}
