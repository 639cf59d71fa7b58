#include <doctest.h>

#include <stdexcept>

#include "polydc/linalg.hpp"
#include "polydc/solver.hpp"

using namespace polydc;

namespace {

FuncExprPtr abs_expr() {
  return max_of({affine({rat(1)}, rat(0)), affine({rat(-1)}, rat(0))});
}

// |x - c| as a max of two affine pieces.
FuncExprPtr abs_shift(Rational c) {
  return max_of({affine({rat(1)}, -c), affine({rat(-1)}, c)});
}

FuncExprPtr staircase_g() {
  auto first = max_of({affine({rat(1), rat(0)}, rat(-1)), affine({rat(-1), rat(0)}, rat(1))});
  auto kink = max_of({affine({rat(0), rat(0)}, rat(0)),
                      max_of({affine({rat(1), rat(-1)}, rat(0)), affine({rat(-1), rat(-1)}, rat(0))})});
  return sum_of({first, scale(rat(200), kink)});
}

FuncExprPtr staircase_h() {
  auto term = max_of({affine({rat(1), rat(-1)}, rat(0)), affine({rat(-1), rat(-1)}, rat(0))});
  return scale(rat(100), term);
}

HRep empty_interval() {
  HRep h;
  h.dim = 1;
  h.ineqs.push_back(LinIneq{{rat(1)}, rat(0)});
  h.ineqs.push_back(LinIneq{{rat(-1)}, rat(-1)});
  return h;
}

}  // namespace

TEST_CASE("make_problem validates the shared variable count") {
  PolyFunc f1 = compile(*abs_expr());
  PolyFunc f2 = compile(*norm1_dist({rat(0), rat(0)}));
  DcProblem p = make_problem(f1, f1);
  CHECK(p.n == 1);
  CHECK_THROWS_AS(make_problem(f1, f2), std::invalid_argument);
}

TEST_CASE("the assumption pair reduces to the recession cone inclusion") {
  PolyFunc steep = compile(*scale(rat(2), abs_expr()));
  PolyFunc flat = compile(*abs_expr());
  CHECK(verify_mb(steep, flat));
  CHECK(!verify_mb(flat, steep));
  PolyFunc stair = compile(*staircase_g());
  CHECK(verify_mb(stair, stair));
}

TEST_CASE("lineality reduction pins the zero function to its base point") {
  PolyFunc zero = compile(*affine({rat(0)}, rat(0)));
  LinealityReduction red = reduce_lineality(zero);
  CHECK(red.xbar == Vec{rat(0)});
  CHECK(red.basis == Mat{{rat(1)}});
  CHECK(evaluate(red.gbar, {rat(0)}) == ExtValue{rat(0)});
  CHECK(evaluate(red.gbar, {rat(1)}) == std::nullopt);
  Polyhedron epi = epigraph(red.gbar);
  CHECK(epi.vrep().vertices == std::vector<Vec>{{rat(0), rat(0)}});
  CHECK(epi.vrep().lineality.empty());
}

TEST_CASE("lineality reduction leaves a pointed function alone") {
  PolyFunc f = compile(*abs_expr());
  LinealityReduction red = reduce_lineality(f);
  CHECK(red.basis.empty());
  CHECK(red.xbar == Vec{rat(0)});
  CHECK(poly_equal(epigraph(red.gbar), epigraph(f)));
}

TEST_CASE("lineality reduction of a linear functional pins both coordinates") {
  PolyFunc f = compile(*affine({rat(1), rat(0)}, rat(0)));
  LinealityReduction red = reduce_lineality(f);
  CHECK(red.basis == Mat{{rat(1), rat(0)}, {rat(0), rat(1)}});
  CHECK(red.xbar == Vec{rat(0), rat(0)});
  CHECK(evaluate(red.gbar, {rat(0), rat(0)}) == ExtValue{rat(0)});
  CHECK(evaluate(red.gbar, {rat(1), rat(0)}) == std::nullopt);
  CHECK(epigraph(red.gbar).vrep().lineality.empty());
}

TEST_CASE("lineality reduction rejects an empty domain") {
  PolyFunc f = compile(*indicator(empty_interval()));
  CHECK_THROWS_AS(reduce_lineality(f), std::invalid_argument);
}

TEST_CASE("concave minimization scans the epigraph vertices") {
  PolyFunc h = compile(*abs_shift(rat(1)));
  Polyhedron p = epigraph(compile(*sum_of({abs_expr(), abs_shift(rat(2))})));
  ConcMinResult r = solve_concmin(h, p);
  CHECK(r.value == rat(1));
  CHECK(r.vertex == Vec{rat(0), rat(2)});
}

TEST_CASE("concave minimization handles trivial instances") {
  PolyFunc zero = compile(*affine({rat(0)}, rat(0)));
  ConcMinResult r1 = solve_concmin(zero, epigraph(compile(*abs_expr())));
  CHECK(r1.value == rat(0));
  CHECK(r1.vertex == Vec{rat(0), rat(0)});

  PolyFunc habs = compile(*abs_expr());
  ConcMinResult r2 = solve_concmin(habs, epigraph(compile(*scale(rat(2), abs_expr()))));
  CHECK(r2.value == rat(0));
  CHECK(r2.vertex == Vec{rat(0), rat(0)});
}

TEST_CASE("concave minimization rejects bad feeds") {
  PolyFunc habs = compile(*abs_expr());
  CHECK_THROWS_AS(solve_concmin(habs, Polyhedron::empty_set(2)), std::invalid_argument);
  CHECK_THROWS_AS(solve_concmin(habs, epigraph(compile(*norm1_dist({rat(0), rat(0)})))),
                  std::invalid_argument);
  // unreduced epigraph with a lineality direction
  CHECK_THROWS_AS(solve_concmin(habs, epigraph(compile(*affine({rat(1)}, rat(0))))),
                  std::invalid_argument);
  // a vertex of the fed polyhedron falls outside dom h
  HRep far_box;
  far_box.dim = 1;
  far_box.ineqs.push_back(LinIneq{{rat(1)}, rat(6)});
  far_box.ineqs.push_back(LinIneq{{rat(-1)}, rat(-5)});
  PolyFunc hfar = compile(*indicator(std::move(far_box)));
  CHECK_THROWS_AS(solve_concmin(hfar, epigraph(compile(*abs_expr()))), std::domain_error);
}

TEST_CASE("the primal method solves the two-kink instance") {
  DcProblem p = make_problem(compile(*sum_of({abs_expr(), abs_shift(rat(2))})),
                             compile(*abs_shift(rat(1))));
  DcSolution sol = solve_primal(p);
  REQUIRE(sol.status == SolveStatus::Optimal);
  CHECK(sol.method == Method::Primal);
  CHECK(sol.x == Vec{rat(0)});
  CHECK(sol.value == rat(1));
  CHECK(sol.epi_vertex == Vec{rat(0), rat(2)});
  CHECK(!sol.dual_y.has_value());
  CHECK(!sol.certificate.has_value());
}

TEST_CASE("the primal method handles the degenerate zero problem") {
  PolyFunc zero = compile(*affine({rat(0)}, rat(0)));
  DcSolution sol = solve_primal(make_problem(zero, zero));
  REQUIRE(sol.status == SolveStatus::Optimal);
  CHECK(sol.x == Vec{rat(0)});
  CHECK(sol.value == rat(0));
}

TEST_CASE("the primal method certifies unsolvable problems") {
  DcProblem p = make_problem(compile(*abs_expr()), compile(*scale(rat(2), abs_expr())));
  DcSolution sol = solve_primal(p);
  REQUIRE(sol.status == SolveStatus::NoSolution);
  REQUIRE(sol.certificate.has_value());
  CHECK(sol.certificate->failed_condition == FailedCondition::ConeNotSubset);
  CHECK(sol.certificate->witness == Vec{rat(-1), rat(1)});
}

TEST_CASE("the primal method solves the planar staircase instance") {
  DcProblem p = make_problem(compile(*staircase_g()), compile(*staircase_h()));
  DcSolution sol = solve_primal(p);
  REQUIRE(sol.status == SolveStatus::Optimal);
  CHECK(sol.value == rat(0));
  ExtValue gx = evaluate(p.g, sol.x);
  ExtValue hx = evaluate(p.h, sol.x);
  REQUIRE(gx.has_value());
  REQUIRE(hx.has_value());
  CHECK(*gx - *hx == sol.value);
  // the all-one vector also attains the optimum
  CHECK(*evaluate(p.g, {rat(1), rat(1)}) - *evaluate(p.h, {rat(1), rat(1)}) == sol.value);
}

TEST_CASE("primal recovery minimizes the tilted epigraph objective") {
  CHECK(recover_primal_from_dual(compile(*scale(rat(2), abs_expr())), {rat(1)}) == Vec{rat(0)});
  CHECK(recover_primal_from_dual(compile(*abs_shift(rat(3))), {rat(0)}) == Vec{rat(3)});
  CHECK(recover_primal_from_dual(compile(*affine({rat(3)}, rat(5))), {rat(3)}) == Vec{rat(0)});
  CHECK_THROWS_AS(recover_primal_from_dual(compile(*abs_expr()), {rat(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(recover_primal_from_dual(compile(*abs_expr()), {rat(1), rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("the dual method solves and recovers the scaled pair") {
  DcProblem p = make_problem(compile(*scale(rat(2), abs_expr())), compile(*abs_expr()));
  DcSolution sol = solve_dual(p);
  REQUIRE(sol.status == SolveStatus::Optimal);
  CHECK(sol.method == Method::Dual);
  CHECK(sol.dual_y == Vec{rat(-1)});
  CHECK(sol.x == Vec{rat(0)});
  CHECK(sol.value == rat(0));
  CHECK(sol.epi_vertex == Vec{rat(0), rat(0)});
}

TEST_CASE("the dual method matches the primal value on the staircase") {
  DcProblem p = make_problem(compile(*staircase_g()), compile(*staircase_h()));
  DcSolution dual = solve_dual(p);
  REQUIRE(dual.status == SolveStatus::Optimal);
  CHECK(dual.value == rat(0));
  REQUIRE(dual.dual_y.has_value());
  DcSolution primal = solve_primal(p);
  CHECK(primal.value == dual.value);
}

TEST_CASE("the dual method certifies unsolvable problems") {
  DcProblem p = make_problem(compile(*abs_expr()), compile(*scale(rat(2), abs_expr())));
  DcSolution sol = solve_dual(p);
  REQUIRE(sol.status == SolveStatus::NoSolution);
  REQUIRE(sol.certificate.has_value());
  CHECK(sol.certificate->failed_condition == FailedCondition::DomNotSubsetStar);
}

TEST_CASE("the duality gap vanishes at optimal pairs and not below") {
  DcProblem p = make_problem(compile(*scale(rat(2), abs_expr())), compile(*abs_expr()));
  DcSolution sol = solve_dual(p);
  REQUIRE(sol.status == SolveStatus::Optimal);
  CHECK(toland_singer_gap(p, sol.x, *sol.dual_y) == rat(0));
  CHECK(toland_singer_gap(p, {rat(3)}, *sol.dual_y) == rat(3));

  PolyFunc same = compile(*sum_of({abs_expr(), abs_shift(rat(2))}));
  DcProblem pp = make_problem(same, same);
  Polyhedron sub = subdifferential(same, {rat(1)});
  REQUIRE(!sub.empty());
  CHECK(toland_singer_gap(pp, {rat(1)}, sub.vrep().vertices.front()) == rat(0));

  PolyFunc box = compile(*indicator(HRep{1, {LinIneq{{rat(1)}, rat(1)}, LinIneq{{rat(-1)}, rat(0)}}, {}}));
  PolyFunc zero = compile(*affine({rat(0)}, rat(0)));
  CHECK_THROWS_AS(toland_singer_gap(make_problem(box, zero), {rat(5)}, {rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("status and method names render for reporting") {
  CHECK(std::string(to_string(SolveStatus::Optimal)) == "Optimal");
  CHECK(std::string(to_string(SolveStatus::NoSolution)) == "NoSolution");
  CHECK(std::string(to_string(Method::Primal)) == "primal");
  CHECK(std::string(to_string(Method::Dual)) == "dual");
}
