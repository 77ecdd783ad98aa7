#include "latnull/axioms.hpp"

namespace latnull {

namespace {

// All scans run in label order (Lattice::by_label), so a report's witness is
// the lexicographically first violating tuple of labels and stays stable
// under renumbering of the input file.

std::string v_of(const Lattice& L, ElementId x, ElementId y) {
  return "V(" + L.label(x) + "," + L.label(y) + ")";
}

}  // namespace

AxiomReport check_commutative(const OpTable& table) {
  const Lattice& L = table.lattice();
  AxiomReport report{Axiom::Commutative, true, {}, {}};
  for (ElementId x : L.by_label()) {
    for (ElementId y : L.by_label()) {
      ElementId xy = table.at(x, y);
      ElementId yx = table.at(y, x);
      if (xy != yx) {
        report.passed = false;
        report.witness = {L.label(x), L.label(y)};
        report.detail = v_of(L, x, y) + " = " + L.label(xy) + " ≠ " +
                        L.label(yx) + " = " + v_of(L, y, x);
        return report;
      }
    }
  }
  return report;
}

AxiomReport check_associative(const OpTable& table) {
  const Lattice& L = table.lattice();
  AxiomReport report{Axiom::Associative, true, {}, {}};
  for (ElementId x : L.by_label()) {
    for (ElementId y : L.by_label()) {
      for (ElementId z : L.by_label()) {
        ElementId lhs = table.at(x, table.at(y, z));
        ElementId rhs = table.at(table.at(x, y), z);
        if (lhs != rhs) {
          report.passed = false;
          report.witness = {L.label(x), L.label(y), L.label(z)};
          report.detail = "V(" + L.label(x) + ",V(" + L.label(y) + "," +
                          L.label(z) + ")) = " + L.label(lhs) + " ≠ " +
                          L.label(rhs) + " = V(V(" + L.label(x) + "," +
                          L.label(y) + ")," + L.label(z) + ")";
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport check_monotone(const OpTable& table) {
  const Lattice& L = table.lattice();
  AxiomReport report{Axiom::Monotone, true, {}, {}};
  for (ElementId x : L.by_label()) {
    for (ElementId y : L.by_label()) {
      if (x == y || !L.leq(x, y)) continue;
      for (ElementId z : L.by_label()) {
        ElementId right_lo = table.at(x, z);
        ElementId right_hi = table.at(y, z);
        if (!L.leq(right_lo, right_hi)) {
          report.passed = false;
          report.witness = {L.label(x), L.label(y), L.label(z)};
          report.detail = L.label(x) + " ≤ " + L.label(y) + " but " +
                          v_of(L, x, z) + " = " + L.label(right_lo) + " ≰ " +
                          L.label(right_hi) + " = " + v_of(L, y, z);
          return report;
        }
        ElementId left_lo = table.at(z, x);
        ElementId left_hi = table.at(z, y);
        if (!L.leq(left_lo, left_hi)) {
          report.passed = false;
          report.witness = {L.label(x), L.label(y), L.label(z)};
          report.detail = L.label(x) + " ≤ " + L.label(y) + " but " +
                          v_of(L, z, x) + " = " + L.label(left_lo) + " ≰ " +
                          L.label(left_hi) + " = " + v_of(L, z, y);
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport check_zero_element(const OpTable& table, const ZeroPoint& zero) {
  const Lattice& L = table.lattice();
  const ElementId a = zero.id();
  const ElementId bot = L.bottom();
  const ElementId top = L.top();
  AxiomReport report{Axiom::ZeroElement, true, {}, {}};

  for (ElementId x : L.by_label()) {
    if (!L.leq(x, a)) continue;
    ElementId v = table.at(x, bot);
    if (v != x) {
      report.passed = false;
      report.witness = {L.label(x), L.label(bot)};
      report.detail = v_of(L, x, bot) + " = " + L.label(v) + " ≠ " +
                      L.label(x) + " (required for " + L.label(x) + " ≤ " +
                      L.label(a) + ")";
      return report;
    }
  }
  for (ElementId x : L.by_label()) {
    if (!L.leq(a, x)) continue;
    ElementId v = table.at(x, top);
    if (v != x) {
      report.passed = false;
      report.witness = {L.label(x), L.label(top)};
      report.detail = v_of(L, x, top) + " = " + L.label(v) + " ≠ " +
                      L.label(x) + " (required for " + L.label(x) + " ≥ " +
                      L.label(a) + ")";
      return report;
    }
  }
  // Consequence of the definition: a absorbs everything.
  for (ElementId x : L.by_label()) {
    ElementId v = table.at(x, a);
    if (v != a) {
      report.passed = false;
      report.witness = {L.label(x), L.label(a)};
      report.detail = v_of(L, x, a) + " = " + L.label(v) + " ≠ " + L.label(a);
      return report;
    }
  }
  return report;
}

AxiomReport check_idempotent(const OpTable& table) {
  const Lattice& L = table.lattice();
  AxiomReport report{Axiom::Idempotent, true, {}, {}};
  for (ElementId x : L.by_label()) {
    ElementId v = table.at(x, x);
    if (v != x) {
      report.passed = false;
      report.witness = {L.label(x)};
      report.detail = v_of(L, x, x) + " = " + L.label(v) + " ≠ " + L.label(x);
      return report;
    }
  }
  return report;
}

NullnormCheck is_idempotent_nullnorm(const OpTable& table,
                                     const ZeroPoint& zero) {
  NullnormCheck result{
      false,
      {check_commutative(table), check_associative(table),
       check_monotone(table), check_zero_element(table, zero),
       check_idempotent(table)}};
  result.passed = true;
  for (const AxiomReport& r : result.reports) {
    if (!r.passed) result.passed = false;
  }
  return result;
}

}  // namespace latnull
