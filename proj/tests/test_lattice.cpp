#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "latnull/lattice.hpp"

using namespace latnull;
using testutil::load;

namespace {

CoverSpec spec_of(std::vector<std::string> names,
                  std::vector<std::pair<std::string, std::string>> covers,
                  std::string bottom, std::string top) {
  CoverSpec spec;
  spec.names = std::move(names);
  spec.covers = std::move(covers);
  spec.bottom = std::move(bottom);
  spec.top = std::move(top);
  return spec;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("M3 builds and answers order queries") {
  auto m3 = load("m3.lat");
  const Lattice& L = m3.lattice;
  CHECK(L.size() == 5);
  const ElementId p = L.id_of("p"), a = L.id_of("a"), q = L.id_of("q");
  CHECK(L.leq(L.bottom(), p));
  CHECK_FALSE(L.leq(p, q));
  CHECK_FALSE(L.leq(q, p));
  CHECK(L.incomparable(p, q));
  CHECK(L.meet(p, q) == L.bottom());
  CHECK(L.join(p, q) == L.top());
  CHECK(L.label(L.bottom()) == "0");
  CHECK(L.label(L.top()) == "1");

  ZeroPoint zero(L, a);
  auto inc = L.incomparables(zero);
  REQUIRE(inc.size() == 2);
  CHECK(L.label(inc[0]) == "p");
  CHECK(L.label(inc[1]) == "q");
}

TEST_CASE("chains are totally ordered and have empty I_a") {
  auto chain = load("chain3.lat");
  const Lattice& L = chain.lattice;
  const ElementId a = L.id_of("a");
  CHECK(L.leq(a, L.top()));
  for (int x = 0; x < L.size(); ++x) {
    for (int y = 0; y < L.size(); ++y) CHECK(L.comparable(x, y));
  }
  CHECK(L.incomparables(ZeroPoint(L, a)).empty());
}

TEST_CASE("the classic non-lattice poset is rejected with a witness") {
  try {
    load("nonlat6.lat");
    FAIL("NONLAT6 must not build");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
    // first failing pair in id order is (x, y); its minimal upper bounds z
    // and w have no least element
    std::string msg = e.what();
    CHECK(msg.find("'x' and 'y'") != std::string::npos);
    CHECK(msg.find("no least element") != std::string::npos);
    CHECK(msg.find("{z, w, 1}") != std::string::npos);
  }
}

TEST_CASE("cover-spec validation errors") {
  SUBCASE("cycle") {
    auto spec = spec_of({"0", "a", "b", "1"},
                        {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}}, "0",
                        "1");
    CHECK(kind_of([&] { Lattice::build_from_covers(spec); }) ==
          ErrorKind::CycleError);
  }
  SUBCASE("self-cover") {
    auto spec =
        spec_of({"0", "a", "1"}, {{"0", "a"}, {"a", "a"}, {"a", "1"}}, "0", "1");
    CHECK(kind_of([&] { Lattice::build_from_covers(spec); }) ==
          ErrorKind::CycleError);
  }
  SUBCASE("transitively implied cover") {
    auto spec = spec_of({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"0", "1"}},
                        "0", "1");
    CHECK(kind_of([&] { Lattice::build_from_covers(spec); }) ==
          ErrorKind::RedundantCover);
  }
  SUBCASE("duplicate cover") {
    auto spec = spec_of({"0", "a", "1"}, {{"0", "a"}, {"0", "a"}, {"a", "1"}},
                        "0", "1");
    CHECK(kind_of([&] { Lattice::build_from_covers(spec); }) ==
          ErrorKind::RedundantCover);
  }
  SUBCASE("wrong bounds") {
    auto spec = spec_of({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, "a", "1");
    CHECK(kind_of([&] { Lattice::build_from_covers(spec); }) ==
          ErrorKind::BadBounds);
  }
  SUBCASE("duplicate label") {
    auto spec = spec_of({"0", "a", "a", "1"}, {{"0", "a"}, {"a", "1"}}, "0",
                        "1");
    CHECK(kind_of([&] { Lattice::build_from_covers(spec); }) ==
          ErrorKind::DuplicateElement);
  }
  SUBCASE("unknown label") {
    auto spec = spec_of({"0", "a", "1"}, {{"0", "zz"}, {"a", "1"}}, "0", "1");
    CHECK(kind_of([&] { Lattice::build_from_covers(spec); }) ==
          ErrorKind::UnknownLabel);
  }
}

TEST_CASE("GRID23 meets, joins, intervals, distributivity") {
  auto grid = load("grid23.lat");
  const Lattice& L = grid.lattice;
  const ElementId q = L.id_of("q"), r = L.id_of("r"), a = L.id_of("a");
  CHECK(L.label(L.meet(q, r)) == "p");
  CHECK(L.label(L.join(q, r)) == "1");
  CHECK(L.is_distributive());

  auto iv = L.interval(a, L.top());
  std::vector<std::string> labels;
  for (ElementId x : iv) labels.push_back(L.label(x));
  CHECK(labels == std::vector<std::string>{"a", "r", "1"});
}

TEST_CASE("M3 is not distributive, chains are") {
  CHECK_FALSE(load("m3.lat").lattice.is_distributive());
  CHECK(load("chain3.lat").lattice.is_distributive());
}

TEST_CASE("interval endpoints must be comparable") {
  auto m3 = load("m3.lat");
  const Lattice& L = m3.lattice;
  auto iv = L.interval(L.bottom(), L.id_of("a"));
  CHECK(iv.size() == 2);
  CHECK(L.interval(L.bottom(), L.top()).size() == 5);
  CHECK(kind_of([&] { L.interval(L.id_of("p"), L.id_of("q")); }) ==
        ErrorKind::NotComparable);
}

TEST_CASE("meet and join satisfy the bound laws on every fixture") {
  for (const char* name : {"m3.lat", "grid23.lat", "obstruct9.lat",
                           "kite7.lat", "dualkite7.lat", "ladder7.lat",
                           "ladder8.lat", "chain3.lat"}) {
    CAPTURE(name);
    const Lattice L = load(name).lattice;
    for (int x = 0; x < L.size(); ++x) {
      CHECK(L.meet(x, x) == x);
      CHECK(L.join(x, x) == x);
      for (int y = 0; y < L.size(); ++y) {
        const ElementId m = L.meet(x, y), j = L.join(x, y);
        CHECK(m == L.meet(y, x));
        CHECK(j == L.join(y, x));
        CHECK(L.leq(m, x));
        CHECK(L.leq(m, y));
        CHECK(L.leq(x, j));
        CHECK(L.leq(y, j));
        // absorption
        CHECK(L.meet(x, L.join(x, y)) == x);
        CHECK(L.join(x, L.meet(x, y)) == x);
        for (int z = 0; z < L.size(); ++z) {
          if (L.leq(z, x) && L.leq(z, y)) CHECK(L.leq(z, m));
          if (L.leq(x, z) && L.leq(y, z)) CHECK(L.leq(j, z));
        }
      }
    }
  }
}

TEST_CASE("the cover relation reproduces the input covers") {
  for (const char* name :
       {"m3.lat", "grid23.lat", "obstruct9.lat", "ladder8.lat"}) {
    CAPTURE(name);
    auto f = load(name);
    const Lattice& L = f.lattice;
    std::set<std::pair<std::string, std::string>> given(
        f.doc.spec.covers.begin(), f.doc.spec.covers.end());
    std::set<std::pair<std::string, std::string>> recovered;
    for (const auto& [lo, hi] : L.cover_pairs()) {
      recovered.emplace(L.label(lo), L.label(hi));
    }
    CHECK(given == recovered);
  }
}

TEST_CASE("incomparables exclude the bounds and the zero itself") {
  for (const char* name : {"m3.lat", "grid23.lat", "obstruct9.lat",
                           "kite7.lat", "ladder7.lat", "ladder8.lat"}) {
    CAPTURE(name);
    auto f = load(name);
    const Lattice& L = f.lattice;
    for (int x = 0; x < L.size(); ++x) {
      if (x == L.bottom() || x == L.top()) continue;
      ZeroPoint zero(L, x);
      for (ElementId y : L.incomparables(zero)) {
        CHECK(y != L.bottom());
        CHECK(y != L.top());
        CHECK(y != x);
      }
    }
  }
}

TEST_CASE("zero point rejects the bounds") {
  auto m3 = load("m3.lat");
  const Lattice& L = m3.lattice;
  CHECK(kind_of([&] { ZeroPoint(L, L.bottom()); }) == ErrorKind::BadZero);
  CHECK(kind_of([&] { ZeroPoint(L, L.top()); }) == ErrorKind::BadZero);
  CHECK(kind_of([&] { ZeroPoint(L, "nope"); }) == ErrorKind::UnknownLabel);
  CHECK(ZeroPoint(L, "a").id() == L.id_of("a"));
}
