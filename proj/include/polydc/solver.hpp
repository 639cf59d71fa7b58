#pragma once

#include <optional>

#include "polydc/existence.hpp"
#include "polydc/funcalc.hpp"

namespace polydc {

// min over dom g of g(x) - h(x), both convex polyhedral on the same space.
struct DcProblem {
  PolyFunc g;
  PolyFunc h;
  int n = 0;
};

// Validates that the two functions share a variable count.
DcProblem make_problem(PolyFunc g, PolyFunc h);

enum class SolveStatus { Optimal, NoSolution };
enum class Method { Primal, Dual };

const char* to_string(SolveStatus s);
const char* to_string(Method m);

// Solver outcome. On Optimal: x is an optimal point, value the exact optimal
// objective, epi_vertex the pair (x, g(x)), and dual_y (dual method only) an
// optimal solution of the conjugate problem. On NoSolution the certificate
// from the failed existence test is carried instead.
struct DcSolution {
  SolveStatus status = SolveStatus::NoSolution;
  Method method = Method::Primal;
  Vec x;
  Rational value;
  Vec epi_vertex;
  std::optional<Vec> dual_y;
  std::optional<ExistenceCertificate> certificate;
};

// The boundedness and monotonicity assumptions behind vertex enumeration,
// for P = epi g and C its own recession cone: boundedness is then automatic
// and monotonicity reduces to the recession cone inclusion of the existence
// test. Exposed separately so the assumption pair can be exercised directly.
// Both domains must be non-empty.
bool verify_mb(const PolyFunc& g, const PolyFunc& h);

struct LinealityReduction {
  PolyFunc gbar;  // g restricted to the affine slice xbar + (span basis)-perp
  Vec xbar;       // first vertex of the canonical V-rep of dom g
  Mat basis;      // basis of the lineality space of g
};

// Pins g down along its lineality space so the reduced epigraph has a
// pointed recession cone and a finite vertex set does the minimizing.
// Errors when dom g is empty.
LinealityReduction reduce_lineality(const PolyFunc& g);

struct ConcMinResult {
  Vec vertex;      // minimizing vertex (x, r) of p, lexicographic tie-break
  Rational value;  // r - h(x)
};

// Minimizes the concave objective r - h(x) over the vertices of p, which
// must be a non-empty epigraph over the space of h with pointed recession
// cone. Errors if a vertex falls outside dom h, which indicates the caller
// skipped the existence test.
ConcMinResult solve_concmin(const PolyFunc& h, const Polyhedron& p);

// Existence test, lineality reduction, then concave minimization over the
// reduced epigraph. NoSolution carries the failing certificate.
DcSolution solve_primal(const DcProblem& p);

// The x-part of the lexicographically smallest vertex minimizing t - y.x
// over epi g; such a point minimizes g(z) - y.z. Errors when that program
// is unbounded or infeasible, which contradicts y in dom g*.
Vec recover_primal_from_dual(const PolyFunc& g, const Vec& y);

// Runs the primal machinery on the conjugate pair (h*, g*), recovers a
// primal point from the optimal dual point, and cross-checks the two
// objective values, which must coincide exactly; a mismatch throws, as it
// can only come from an implementation bug.
DcSolution solve_dual(const DcProblem& p);

// (g(x) - h(x)) - (h*(y) - g*(y)); zero exactly at optimal primal/dual
// pairs, non-negative whenever y is optimal. Errors if any of the four
// values is infinite.
Rational toland_singer_gap(const DcProblem& p, const Vec& x, const Vec& y);

}  // namespace polydc
