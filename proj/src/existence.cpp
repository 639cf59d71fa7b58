#include "polydc/existence.hpp"

#include <stdexcept>
#include <utility>

#include "polydc/linalg.hpp"

namespace polydc {

const char* to_string(Verdict v) {
  return v == Verdict::Exists ? "Exists" : "NotExists";
}

const char* to_string(FailedCondition c) {
  switch (c) {
    case FailedCondition::None: return "none";
    case FailedCondition::DomEmpty: return "DomEmpty";
    case FailedCondition::DomNotSubset: return "DomNotSubset";
    case FailedCondition::ConeNotSubset: return "ConeNotSubset";
    case FailedCondition::DomEmptyStar: return "DomEmptyStar";
    case FailedCondition::DomNotSubsetStar: return "DomNotSubsetStar";
    case FailedCondition::ConeNotSubsetStar: return "ConeNotSubsetStar";
  }
  throw std::logic_error("unknown FailedCondition");
}

const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Passed: return "Passed";
    case CheckOutcome::Failed: return "Failed";
    case CheckOutcome::Skipped: return "Skipped";
  }
  throw std::logic_error("unknown CheckOutcome");
}

namespace {

// A concrete point of inner violating outer, or nullopt when inner is a
// subset of outer. Scans the generators of inner against the constraints of
// outer in canonical order, so the result is deterministic. For a violating
// direction the returned point walks far enough from a base vertex to leave
// outer while staying inside inner.
std::optional<Vec> domain_escape_point(const Polyhedron& inner, const Polyhedron& outer) {
  const VRep& gen = inner.vrep();
  const HRep& con = outer.hrep();
  if (gen.is_empty) throw std::logic_error("domain_escape_point: empty inner set");

  for (const Vec& v : gen.vertices) {
    for (const LinIneq& q : con.ineqs)
      if (dot(q.a, v) > q.b) return v;
    for (const LinEq& q : con.eqs)
      if (dot(q.a, v) != q.b) return v;
  }

  // Every vertex satisfies outer, so the first one can serve as the walk
  // base: along a violating direction the slack to any inequality is
  // non-negative and equality rows are tight, making the step lengths below
  // sufficient.
  const Vec& base = gen.vertices.front();
  std::vector<Vec> dirs = gen.rays;
  for (const Vec& l : gen.lineality) {
    dirs.push_back(l);
    dirs.push_back(negated(l));
  }
  for (const Vec& d : dirs) {
    for (const LinIneq& q : con.ineqs) {
      Rational s = dot(q.a, d);
      if (s <= 0) continue;
      Rational lambda = (q.b - dot(q.a, base)) / s + 1;
      Vec point = base;
      add_scaled(point, lambda, d);
      return point;
    }
    for (const LinEq& q : con.eqs) {
      if (dot(q.a, d) == 0) continue;
      return add(base, d);
    }
  }
  return std::nullopt;
}

struct RunOutcome {
  Verdict verdict = Verdict::NotExists;
  int failed = 0;  // 0 none, 1 empty domain, 2 domain inclusion, 3 cone inclusion
  std::optional<Vec> witness;
  ConditionRecord record;
};

// The shared three-condition check; the primal test runs it on (g, h), the
// dual test on (h*, g*).
RunOutcome run_conditions(const PolyFunc& first, const PolyFunc& second) {
  RunOutcome out;
  Polyhedron dom_first = domain(first);
  if (dom_first.empty()) {
    out.record.dom_nonempty = CheckOutcome::Failed;
    out.failed = 1;
    return out;
  }
  out.record.dom_nonempty = CheckOutcome::Passed;

  if (auto point = domain_escape_point(dom_first, domain(second))) {
    out.record.dom_subset = CheckOutcome::Failed;
    out.failed = 2;
    out.witness = std::move(point);
    return out;
  }
  out.record.dom_subset = CheckOutcome::Passed;

  ConeInclusion inc =
      cone_contains(recession_cone(epigraph(first)), recession_cone(epigraph(second)));
  if (!inc.contained) {
    out.record.cone_subset = CheckOutcome::Failed;
    out.failed = 3;
    out.witness = std::move(inc.witness);
    return out;
  }
  out.record.cone_subset = CheckOutcome::Passed;
  out.verdict = Verdict::Exists;
  return out;
}

ExistenceCertificate to_certificate(RunOutcome&& out, bool starred) {
  ExistenceCertificate cert;
  cert.verdict = out.verdict;
  cert.witness = std::move(out.witness);
  cert.checked_conditions = out.record;
  switch (out.failed) {
    case 0:
      cert.failed_condition = FailedCondition::None;
      break;
    case 1:
      cert.failed_condition =
          starred ? FailedCondition::DomEmptyStar : FailedCondition::DomEmpty;
      break;
    case 2:
      cert.failed_condition =
          starred ? FailedCondition::DomNotSubsetStar : FailedCondition::DomNotSubset;
      break;
    default:
      cert.failed_condition =
          starred ? FailedCondition::ConeNotSubsetStar : FailedCondition::ConeNotSubset;
      break;
  }
  return cert;
}

}  // namespace

ExistenceCertificate primal_existence_test(const PolyFunc& g, const PolyFunc& h) {
  return to_certificate(run_conditions(g, h), false);
}

ExistenceCertificate dual_existence_test(const PolyFunc& g, const PolyFunc& h) {
  if (domain(h).empty()) {
    // h has no proper conjugate; the dual chain starts from h*, so this is
    // the starred analogue of an empty first domain.
    ExistenceCertificate cert;
    cert.failed_condition = FailedCondition::DomEmptyStar;
    cert.checked_conditions.dom_nonempty = CheckOutcome::Failed;
    return cert;
  }
  if (domain(g).empty()) {
    // h* is proper, so the first condition holds, but g has no proper
    // conjugate and the inclusion into dom g* is meaningless; report the
    // inclusion as the failure. No witness: there is no concrete point to
    // exhibit.
    ExistenceCertificate cert;
    cert.failed_condition = FailedCondition::DomNotSubsetStar;
    cert.checked_conditions.dom_nonempty = CheckOutcome::Passed;
    cert.checked_conditions.dom_subset = CheckOutcome::Failed;
    return cert;
  }
  return to_certificate(run_conditions(conjugate(h), conjugate(g)), true);
}

bool existence_cross_check(const PolyFunc& g, const PolyFunc& h) {
  return primal_existence_test(g, h).verdict == dual_existence_test(g, h).verdict;
}

}  // namespace polydc
