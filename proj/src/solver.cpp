#include "polydc/solver.hpp"

#include <stdexcept>
#include <utility>

#include "polydc/linalg.hpp"

namespace polydc {

DcProblem make_problem(PolyFunc g, PolyFunc h) {
  if (g.n() != h.n())
    throw std::invalid_argument("make_problem: variable counts differ");
  int n = g.n();
  return DcProblem{std::move(g), std::move(h), n};
}

const char* to_string(SolveStatus s) {
  return s == SolveStatus::Optimal ? "Optimal" : "NoSolution";
}

const char* to_string(Method m) { return m == Method::Primal ? "primal" : "dual"; }

bool verify_mb(const PolyFunc& g, const PolyFunc& h) {
  return cone_contains(recession_cone(epigraph(g)), recession_cone(epigraph(h))).contained;
}

LinealityReduction reduce_lineality(const PolyFunc& g) {
  Polyhedron dom = domain(g);
  if (dom.empty()) throw std::invalid_argument("reduce_lineality: empty domain");
  Vec xbar = dom.vrep().vertices.front();
  Mat basis = function_lineality(g);
  PolyFunc gbar = restrict_affine(g, xbar, basis);
  return LinealityReduction{std::move(gbar), std::move(xbar), std::move(basis)};
}

ConcMinResult solve_concmin(const PolyFunc& h, const Polyhedron& p) {
  if (p.empty()) throw std::invalid_argument("solve_concmin: empty polyhedron");
  if (p.dim() != h.n() + 1)
    throw std::invalid_argument("solve_concmin: polyhedron is not an epigraph over dom h's space");
  const VRep& gen = p.vrep();
  if (!gen.lineality.empty())
    throw std::invalid_argument("solve_concmin: recession cone is not pointed");

  // Vertices arrive lexicographically sorted, so keeping the first strict
  // improvement realizes the lexicographic tie-break.
  std::optional<ConcMinResult> best;
  for (const Vec& vert : gen.vertices) {
    Vec x(vert.begin(), vert.end() - 1);
    ExtValue hx = evaluate(h, x);
    if (!hx)
      throw std::domain_error(
          "solve_concmin: vertex outside dom h; was the existence test skipped?");
    Rational val = vert.back() - *hx;
    if (!best || val < best->value) best = ConcMinResult{vert, std::move(val)};
  }
  return std::move(*best);
}

DcSolution solve_primal(const DcProblem& p) {
  DcSolution sol;
  sol.method = Method::Primal;
  ExistenceCertificate cert = primal_existence_test(p.g, p.h);
  if (cert.verdict == Verdict::NotExists) {
    sol.status = SolveStatus::NoSolution;
    sol.certificate = std::move(cert);
    return sol;
  }
  LinealityReduction red = reduce_lineality(p.g);
  ConcMinResult opt = solve_concmin(p.h, epigraph(red.gbar));
  sol.status = SolveStatus::Optimal;
  sol.x = Vec(opt.vertex.begin(), opt.vertex.end() - 1);
  sol.value = std::move(opt.value);
  sol.epi_vertex = std::move(opt.vertex);
  return sol;
}

Vec recover_primal_from_dual(const PolyFunc& g, const Vec& y) {
  if (static_cast<int>(y.size()) != g.n())
    throw std::invalid_argument("recover_primal_from_dual: dimension mismatch");
  Vec c = negated(y);
  c.push_back(rat(1));
  LinMinResult lp = linear_min(epigraph(g), c);
  if (lp.status != LinMinResult::Status::Optimal)
    throw std::invalid_argument("recover_primal_from_dual: y is outside dom g*");
  return Vec(lp.argmin.begin(), lp.argmin.end() - 1);
}

DcSolution solve_dual(const DcProblem& p) {
  DcSolution sol;
  sol.method = Method::Dual;
  ExistenceCertificate cert = dual_existence_test(p.g, p.h);
  if (cert.verdict == Verdict::NotExists) {
    sol.status = SolveStatus::NoSolution;
    sol.certificate = std::move(cert);
    return sol;
  }

  PolyFunc hstar = conjugate(p.h);
  PolyFunc gstar = conjugate(p.g);
  LinealityReduction red = reduce_lineality(hstar);
  ConcMinResult dual_opt = solve_concmin(gstar, epigraph(red.gbar));
  Vec y(dual_opt.vertex.begin(), dual_opt.vertex.end() - 1);

  Vec x = recover_primal_from_dual(p.g, y);
  ExtValue gx = evaluate(p.g, x);
  ExtValue hx = evaluate(p.h, x);
  if (!gx || !hx)
    throw std::logic_error("solve_dual: recovered point escapes a domain");
  Rational value = *gx - *hx;
  if (value != dual_opt.value)
    throw std::logic_error("solve_dual: primal and dual objective values disagree");

  sol.status = SolveStatus::Optimal;
  sol.epi_vertex = x;
  sol.epi_vertex.push_back(*gx);
  sol.x = std::move(x);
  sol.value = std::move(value);
  sol.dual_y = std::move(y);
  return sol;
}

Rational toland_singer_gap(const DcProblem& p, const Vec& x, const Vec& y) {
  ExtValue gx = evaluate(p.g, x);
  ExtValue hx = evaluate(p.h, x);
  ExtValue hsy = evaluate(conjugate(p.h), y);
  ExtValue gsy = evaluate(conjugate(p.g), y);
  if (!gx || !hx || !hsy || !gsy)
    throw std::invalid_argument("toland_singer_gap: a value is infinite");
  return (*gx - *hx) - (*hsy - *gsy);
}

}  // namespace polydc
