#include "latnull/constructions.hpp"

#include <array>

namespace latnull {

namespace {

struct VariantPlan {
  bool applicable = false;
  std::string why_not;   // evaluated precondition on failure
  ElementId fill = -1;   // value for the off-diagonal I_a x I_a pair
};

VariantPlan evaluate_variant(const Lattice& L, ElementId a, ElementId p,
                             ElementId q, Variant v) {
  const ElementId mp = L.meet(p, a);
  const ElementId mq = L.meet(q, a);
  const ElementId jp = L.join(p, a);
  const ElementId jq = L.join(q, a);
  VariantPlan plan;
  switch (v) {
    case Variant::V1: {
      ElementId lhs = L.join(mp, mq);
      if (lhs == a) {
        plan.applicable = true;
        plan.fill = L.meet(jp, jq);
      } else {
        plan.why_not =
            "(p∧a)∨(q∧a) = " + L.label(lhs) + " ≠ " + L.label(a);
      }
      break;
    }
    case Variant::V2: {
      ElementId lhs = L.meet(jp, jq);
      if (lhs == a) {
        plan.applicable = true;
        plan.fill = L.join(mp, mq);
      } else {
        plan.why_not =
            "(p∨a)∧(q∨a) = " + L.label(lhs) + " ≠ " + L.label(a);
      }
      break;
    }
    case Variant::V3: {
      if (!L.leq(jp, jq)) {
        plan.why_not = "p∨a = " + L.label(jp) + " ≰ " + L.label(jq) + " = q∨a";
      } else if (!L.leq(mq, mp)) {
        plan.why_not = "q∧a = " + L.label(mq) + " ≰ " + L.label(mp) + " = p∧a";
      } else {
        plan.applicable = true;
        plan.fill = p;
      }
      break;
    }
    case Variant::V4: {
      if (!L.leq(mp, mq)) {
        plan.why_not = "p∧a = " + L.label(mp) + " ≰ " + L.label(mq) + " = q∧a";
      } else if (!L.leq(jq, jp)) {
        plan.why_not = "q∨a = " + L.label(jq) + " ≰ " + L.label(jp) + " = p∨a";
      } else {
        plan.applicable = true;
        plan.fill = q;
      }
      break;
    }
    case Variant::V5: {
      if (L.incomparable(p, q)) {
        plan.why_not = "p ∥ q (p = " + L.label(p) + ", q = " + L.label(q) + ")";
      } else if (jp != jq) {
        plan.why_not = "p∨a = " + L.label(jp) + " ≠ " + L.label(jq) + " = q∨a";
      } else {
        plan.applicable = true;
        plan.fill = L.join(p, q);
      }
      break;
    }
    case Variant::V6: {
      if (L.incomparable(p, q)) {
        plan.why_not = "p ∥ q (p = " + L.label(p) + ", q = " + L.label(q) + ")";
      } else if (mp != mq) {
        plan.why_not = "p∧a = " + L.label(mp) + " ≠ " + L.label(mq) + " = q∧a";
      } else {
        plan.applicable = true;
        plan.fill = L.meet(p, q);
      }
      break;
    }
  }
  return plan;
}

std::pair<ElementId, ElementId> canonical_pair(const Lattice& L,
                                               const ZeroPoint& zero) {
  auto inc = L.incomparables(zero);
  if (inc.size() != 2) {
    throw Error(ErrorKind::WrongIaSize,
                "exactly 2 elements incomparable with " +
                    L.label(zero.id()) + " are required, found " +
                    std::to_string(inc.size()));
  }
  return {inc[0], inc[1]};
}

}  // namespace

std::optional<Variant> variant_from_string(std::string_view text) {
  if (text.size() != 2 || (text[0] != 'V' && text[0] != 'v')) {
    return std::nullopt;
  }
  switch (text[1]) {
    case '1': return Variant::V1;
    case '2': return Variant::V2;
    case '3': return Variant::V3;
    case '4': return Variant::V4;
    case '5': return Variant::V5;
    case '6': return Variant::V6;
    default: return std::nullopt;
  }
}

PartialOpTable build_skeleton(const Lattice& L, const ZeroPoint& zero) {
  const ElementId a = zero.id();
  const int n = L.size();
  std::vector<char> low(n), high(n);
  for (int x = 0; x < n; ++x) {
    low[x] = L.leq(x, a);
    high[x] = L.leq(a, x);
  }
  PartialOpTable table(L);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (low[x] && low[y]) {
        table.set(x, y, L.join(x, y));
      } else if (high[x] && high[y]) {
        table.set(x, y, L.meet(x, y));
      } else if ((low[x] && high[y]) || (high[x] && low[y])) {
        table.set(x, y, a);
      } else if (low[x]) {  // y incomparable with a
        table.set(x, y, L.join(x, L.meet(y, a)));
      } else if (low[y]) {
        table.set(x, y, L.join(y, L.meet(x, a)));
      } else if (high[x]) {
        table.set(x, y, L.meet(x, L.join(y, a)));
      } else if (high[y]) {
        table.set(x, y, L.meet(y, L.join(x, a)));
      } else if (x == y) {
        table.set(x, y, x);  // idempotency on the I_a diagonal
      }
      // off-diagonal I_a x I_a stays undetermined
    }
  }
  return table;
}

OpTable construct_variant(const Lattice& L, const ZeroPoint& zero,
                          Variant variant) {
  auto [p, q] = canonical_pair(L, zero);
  VariantPlan plan = evaluate_variant(L, zero.id(), p, q, variant);
  if (!plan.applicable) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string(to_string(variant)) + " requires " + plan.why_not);
  }
  PartialOpTable skeleton = build_skeleton(L, zero);
  skeleton.set(p, q, plan.fill);
  skeleton.set(q, p, plan.fill);
  return skeleton.complete();
}

std::vector<Variant> applicable_variants(const Lattice& L,
                                         const ZeroPoint& zero) {
  auto [p, q] = canonical_pair(L, zero);
  static constexpr std::array<Variant, 6> kAll = {Variant::V1, Variant::V2,
                                                  Variant::V3, Variant::V4,
                                                  Variant::V5, Variant::V6};
  std::vector<Variant> out;
  for (Variant v : kAll) {
    if (evaluate_variant(L, zero.id(), p, q, v).applicable) out.push_back(v);
  }
  return out;
}

}  // namespace latnull
