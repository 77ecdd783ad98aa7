#include "latnull/lattice.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace latnull {

namespace {

std::string quoted(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '\'';
  out += s;
  out += '\'';
  return out;
}

// "{z, w, 1}" for the elements whose bits are set, in id order.
std::string bit_set_to_string(const std::vector<std::string>& names,
                              const std::uint64_t* row, int n) {
  std::string out = "{";
  bool first = true;
  for (int y = 0; y < n; ++y) {
    if (!((row[y >> 6] >> (y & 63)) & 1u)) continue;
    if (!first) out += ", ";
    out += names[y];
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

Lattice Lattice::build_from_covers(const CoverSpec& spec) {
  const int n = static_cast<int>(spec.names.size());
  if (n == 0) {
    throw Error(ErrorKind::NotALattice, "element list is empty");
  }

  std::unordered_map<std::string_view, ElementId> index;
  index.reserve(spec.names.size());
  for (int i = 0; i < n; ++i) {
    const std::string& name = spec.names[i];
    if (name.empty()) {
      throw Error(ErrorKind::DuplicateElement, "empty element label");
    }
    if (!index.emplace(name, i).second) {
      throw Error(ErrorKind::DuplicateElement,
                  "element " + quoted(name) + " declared more than once");
    }
  }
  auto resolve = [&](const std::string& label,
                     const char* context) -> ElementId {
    auto it = index.find(label);
    if (it == index.end()) {
      throw Error(ErrorKind::UnknownLabel, "unknown label " + quoted(label) +
                                               " in " + context);
    }
    return it->second;
  };

  Lattice L;
  L.n_ = n;
  L.words_ = (n + 63) / 64;
  L.names_ = spec.names;
  L.bottom_ = resolve(spec.bottom, "bottom declaration");
  L.top_ = resolve(spec.top, "top declaration");

  std::vector<std::pair<ElementId, ElementId>> covers;
  covers.reserve(spec.covers.size());
  for (const auto& [lo, hi] : spec.covers) {
    ElementId x = resolve(lo, "cover");
    ElementId y = resolve(hi, "cover");
    if (x == y) {
      throw Error(ErrorKind::CycleError, "self-cover at " + quoted(lo));
    }
    covers.emplace_back(x, y);
  }
  {
    auto sorted = covers;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorKind::RedundantCover,
                  "duplicate cover " + quoted(L.names_[dup->first]) + " " +
                      quoted(L.names_[dup->second]));
    }
  }

  // Kahn's algorithm; anything left over sits on a cycle.
  {
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<ElementId>> succ(n);
    for (const auto& [x, y] : covers) {
      succ[x].push_back(y);
      ++indegree[y];
    }
    std::queue<ElementId> ready;
    for (int i = 0; i < n; ++i) {
      if (indegree[i] == 0) ready.push(i);
    }
    int processed = 0;
    while (!ready.empty()) {
      ElementId x = ready.front();
      ready.pop();
      ++processed;
      for (ElementId y : succ[x]) {
        if (--indegree[y] == 0) ready.push(y);
      }
    }
    if (processed < n) {
      for (int i = 0; i < n; ++i) {
        if (indegree[i] > 0) {
          throw Error(ErrorKind::CycleError,
                      "cover graph has a cycle through " + quoted(L.names_[i]));
        }
      }
    }
  }

  // Reflexive-transitive closure, bit-parallel Warshall on the up rows.
  const int words = L.words_;
  L.up_.assign(static_cast<std::size_t>(n) * words, 0);
  auto up_row = [&](ElementId x) { return &L.up_[static_cast<std::size_t>(x) * words]; };
  for (int x = 0; x < n; ++x) {
    up_row(x)[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  for (const auto& [x, y] : covers) {
    up_row(x)[y >> 6] |= std::uint64_t{1} << (y & 63);
  }
  for (int k = 0; k < n; ++k) {
    const std::uint64_t* src = up_row(k);
    for (int x = 0; x < n; ++x) {
      if ((up_row(x)[k >> 6] >> (k & 63)) & 1u) {
        std::uint64_t* dst = up_row(x);
        for (int w = 0; w < words; ++w) dst[w] |= src[w];
      }
    }
  }

  L.down_.assign(static_cast<std::size_t>(n) * words, 0);
  auto down_row = [&](ElementId x) { return &L.down_[static_cast<std::size_t>(x) * words]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (L.leq(x, y)) down_row(y)[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }

  // A declared cover pair must not be implied by the rest of the order.
  for (const auto& [x, y] : covers) {
    for (int z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if (L.leq(x, z) && L.leq(z, y)) {
        throw Error(ErrorKind::RedundantCover,
                    "cover " + quoted(L.names_[x]) + " " + quoted(L.names_[y]) +
                        " is implied via " + quoted(L.names_[z]));
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    if (!L.leq(L.bottom_, x)) {
      throw Error(ErrorKind::BadBounds,
                  "declared bottom " + quoted(spec.bottom) + " is not below " +
                      quoted(L.names_[x]));
    }
    if (!L.leq(x, L.top_)) {
      throw Error(ErrorKind::BadBounds,
                  "declared top " + quoted(spec.top) + " is not above " +
                      quoted(L.names_[x]));
    }
  }

  // Meets and joins for every pair, scanning pairs in row-major id order so
  // the NotALattice witness is deterministic.
  L.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  L.join_.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::uint64_t> bounds(words);
  auto greatest_of = [&](const std::uint64_t* candidates,
                         auto&& contains_all) -> ElementId {
    for (int z = 0; z < n; ++z) {
      if (!((candidates[z >> 6] >> (z & 63)) & 1u)) continue;
      if (contains_all(z)) return z;
    }
    return -1;
  };
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      // greatest lower bound
      for (int w = 0; w < words; ++w) bounds[w] = down_row(x)[w] & down_row(y)[w];
      ElementId glb = greatest_of(bounds.data(), [&](ElementId z) {
        const std::uint64_t* dz = down_row(z);
        for (int w = 0; w < words; ++w) {
          if (bounds[w] & ~dz[w]) return false;
        }
        return true;
      });
      if (glb < 0) {
        throw Error(ErrorKind::NotALattice,
                    "elements " + quoted(L.names_[x]) + " and " +
                        quoted(L.names_[y]) + " have no meet: lower bounds " +
                        bit_set_to_string(L.names_, bounds.data(), n) +
                        " have no greatest element");
      }
      // least upper bound
      for (int w = 0; w < words; ++w) bounds[w] = up_row(x)[w] & up_row(y)[w];
      ElementId lub = greatest_of(bounds.data(), [&](ElementId z) {
        const std::uint64_t* uz = up_row(z);
        for (int w = 0; w < words; ++w) {
          if (bounds[w] & ~uz[w]) return false;
        }
        return true;
      });
      if (lub < 0) {
        throw Error(ErrorKind::NotALattice,
                    "elements " + quoted(L.names_[x]) + " and " +
                        quoted(L.names_[y]) + " have no join: upper bounds " +
                        bit_set_to_string(L.names_, bounds.data(), n) +
                        " have no least element");
      }
      L.meet_[L.idx(x, y)] = glb;
      L.meet_[L.idx(y, x)] = glb;
      L.join_[L.idx(x, y)] = lub;
      L.join_[L.idx(y, x)] = lub;
    }
  }

  // Cover relation recovered from the closure (transitive reduction).
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !L.leq(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z) {
        if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) direct = false;
      }
      if (direct) L.covers_.emplace_back(x, y);
    }
  }

  L.by_label_.resize(n);
  for (int i = 0; i < n; ++i) L.by_label_[i] = i;
  std::sort(L.by_label_.begin(), L.by_label_.end(),
            [&](ElementId a, ElementId b) { return L.names_[a] < L.names_[b]; });

  return L;
}

std::optional<ElementId> Lattice::find(std::string_view label) const {
  for (int i = 0; i < n_; ++i) {
    if (names_[i] == label) return i;
  }
  return std::nullopt;
}

ElementId Lattice::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorKind::UnknownLabel,
              "unknown label " + quoted(label));
}

std::vector<ElementId> Lattice::incomparables(const ZeroPoint& a) const {
  std::vector<ElementId> out;
  for (int x = 0; x < n_; ++x) {
    if (incomparable(x, a.id())) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> Lattice::interval(ElementId lo, ElementId hi) const {
  if (!leq(lo, hi)) {
    throw Error(ErrorKind::NotComparable,
                quoted(names_[lo]) + " is not below " + quoted(names_[hi]));
  }
  std::vector<ElementId> out;
  for (int x = 0; x < n_; ++x) {
    if (leq(lo, x) && leq(x, hi)) out.push_back(x);
  }
  return out;
}

bool Lattice::is_distributive() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      for (int z = 0; z < n_; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

ZeroPoint::ZeroPoint(const Lattice& lattice, ElementId a) : a_(a) {
  if (a < 0 || a >= lattice.size()) {
    throw Error(ErrorKind::BadZero,
                "zero element id " + std::to_string(a) + " is out of range");
  }
  if (a == lattice.bottom()) {
    throw Error(ErrorKind::BadZero, "zero element " + lattice.label(a) +
                                        " must differ from the bottom");
  }
  if (a == lattice.top()) {
    throw Error(ErrorKind::BadZero, "zero element " + lattice.label(a) +
                                        " must differ from the top");
  }
}

ZeroPoint::ZeroPoint(const Lattice& lattice, std::string_view label)
    : ZeroPoint(lattice, lattice.id_of(label)) {}

}  // namespace latnull
