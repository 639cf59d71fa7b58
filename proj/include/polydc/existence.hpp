#pragma once

#include <optional>

#include "polydc/funcalc.hpp"

namespace polydc {

enum class Verdict { Exists, NotExists };

// Names the first violated condition. The plain values belong to the primal
// test on (g, h); the starred values are the same conditions run on the
// conjugate pair (h*, g*).
enum class FailedCondition {
  None,
  DomEmpty,
  DomNotSubset,
  ConeNotSubset,
  DomEmptyStar,
  DomNotSubsetStar,
  ConeNotSubsetStar,
};

enum class CheckOutcome { Passed, Failed, Skipped };

// Per-condition outcomes in check order; conditions after the first failure
// are left Skipped.
struct ConditionRecord {
  CheckOutcome dom_nonempty = CheckOutcome::Skipped;
  CheckOutcome dom_subset = CheckOutcome::Skipped;
  CheckOutcome cone_subset = CheckOutcome::Skipped;
};

// Outcome of an existence test. On NotExists the witness, when present, is
// machine-checkable: a point of the first domain outside the second for a
// domain-inclusion failure, or a recession direction (d, s) of the first
// epigraph outside the second epigraph's recession cone for a cone failure.
struct ExistenceCertificate {
  Verdict verdict = Verdict::NotExists;
  FailedCondition failed_condition = FailedCondition::None;
  std::optional<Vec> witness;
  ConditionRecord checked_conditions;
};

const char* to_string(Verdict v);
const char* to_string(FailedCondition c);
const char* to_string(CheckOutcome o);

// Decides whether min [g(x) - h(x)] over dom g attains a global minimizer.
// Checked in order, first failure wins: dom g is non-empty, dom g is
// contained in dom h, and the recession cone of epi g is contained in the
// recession cone of epi h.
ExistenceCertificate primal_existence_test(const PolyFunc& g, const PolyFunc& h);

// The same decision through conjugates: the three conditions run on the pair
// (h*, g*). Inputs with an empty domain admit no proper conjugate and map
// directly to the matching starred failure.
ExistenceCertificate dual_existence_test(const PolyFunc& g, const PolyFunc& h);

// True when both tests return the same verdict. They agree on every valid
// input, so a false return indicates an implementation bug.
bool existence_cross_check(const PolyFunc& g, const PolyFunc& h);

}  // namespace polydc
