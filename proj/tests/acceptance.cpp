// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every numeric comparison is exact.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polydc/commands.hpp"
#include "polydc/instances.hpp"
#include "polydc/linalg.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace polydc;
using namespace polydc::testing;

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

struct SuitePair {
  int n = 0;
  PolyFunc g;
  PolyFunc h;
};

// Shared random suite for criteria 3 through 7: small dimensions, few affine
// pieces, indicator terms mixed in (occasionally with empty domains).
const std::vector<SuitePair>& random_suite() {
  static const std::vector<SuitePair> suite = [] {
    std::mt19937 rng(20240971);
    std::vector<SuitePair> out;
    while (out.size() < 220) {
      int n = 1 + static_cast<int>(rng() % 3);
      int depth = 1 + static_cast<int>(rng() % 2);
      PolyFunc g = compile(*random_expr(rng, n, depth, true));
      PolyFunc h = compile(*random_expr(rng, n, depth, true));
      out.push_back(SuitePair{n, std::move(g), std::move(h)});
    }
    return out;
  }();
  return suite;
}

std::string criterion_1() {
  for (int n = 2; n <= 6; ++n) {
    ProblemFile pf = ex2_instance(n);
    PolyFunc g = compile(*pf.g);
    PolyFunc h = compile(*pf.h);
    for (Method method : {Method::Primal, Method::Dual}) {
      ResultRecord rec = timed_solve(n, g, h, method);
      expect(rec.status == "Optimal", *pf.name + " " + to_string(method) + ": " + rec.status);
      expect(rec.value.has_value() && *rec.value == rat(0),
             *pf.name + " " + to_string(method) + " value is not 0");
    }
    Vec ones(n, rat(1));
    ExtValue gx = evaluate(g, ones);
    ExtValue hx = evaluate(h, ones);
    expect(gx.has_value() && hx.has_value(), *pf.name + ": all-one vector escapes a domain");
    Rational at_ones = *gx - *hx;
    expect(at_ones == rat(0), *pf.name + ": objective at the all-one vector is not 0");
  }
  return "ex2 sizes 2..6 solved to exactly 0 by both methods";
}

std::string criterion_2() {
  int combos = 0;
  for (int n = 1; n <= 3; ++n)
    for (int mg = 1; mg <= 4; ++mg)
      for (int mh = 1; mh <= 4; ++mh) {
        ProblemFile pf = ex1_instance(n, mg, mh);
        PolyFunc g = compile(*pf.g);
        PolyFunc h = compile(*pf.h);
        bool expected = mg >= mh;
        ExistenceCertificate primal = primal_existence_test(g, h);
        ExistenceCertificate dual = dual_existence_test(g, h);
        expect((primal.verdict == Verdict::Exists) == expected,
               *pf.name + ": primal verdict contradicts the mg >= mh law");
        expect((dual.verdict == Verdict::Exists) == expected,
               *pf.name + ": dual verdict contradicts the mg >= mh law");
        ++combos;
      }
  return "ex1 existence law holds for all " + std::to_string(combos) + " (n, mg, mh) combos";
}

std::string criterion_3() {
  int checked = 0;
  for (const SuitePair& p : random_suite()) {
    expect(existence_cross_check(p.g, p.h),
           "primal and dual verdicts disagree on suite pair " + std::to_string(checked));
    ++checked;
  }
  expect(checked >= 200, "suite is too small");
  return "primal and dual verdicts agree on all " + std::to_string(checked) + " random pairs";
}

std::string criterion_4() {
  int optimal = 0;
  int index = 0;
  for (const SuitePair& p : random_suite()) {
    DcProblem problem = make_problem(p.g, p.h);
    DcSolution primal = solve_primal(problem);
    DcSolution dual = solve_dual(problem);
    expect(primal.status == dual.status,
           "solver statuses disagree on suite pair " + std::to_string(index));
    if (primal.status == SolveStatus::Optimal) {
      expect(primal.value == dual.value,
             "optimal values differ on suite pair " + std::to_string(index));
      ++optimal;
    }
    ++index;
  }
  expect(optimal >= 20, "too few solvable pairs to be meaningful");
  return "primal and dual optima coincide on all " + std::to_string(optimal) + " solvable pairs";
}

std::string criterion_5() {
  int compared = 0;
  for (const SuitePair& p : random_suite()) {
    if (p.n > 2) continue;
    DcProblem problem = make_problem(p.g, p.h);
    DcSolution sol = solve_primal(problem);
    if (sol.status != SolveStatus::Optimal) continue;
    Polyhedron epi = epigraph(reduce_lineality(p.g).gbar);
    if (static_cast<int>(epi.hrep().ineqs.size() + epi.hrep().eqs.size()) > 10) continue;

    std::optional<Rational> best;
    for (const Vec& point : brute_force_basic_points(epi.hrep())) {
      Vec x(point.begin(), point.end() - 1);
      ExtValue hx = evaluate(p.h, x);
      expect(hx.has_value(), "basic point escapes dom h");
      Rational val = point.back() - *hx;
      if (!best || val < *best) best = val;
    }
    expect(best.has_value(), "no basic feasible points found");
    expect(sol.value == *best, "solver value differs from the brute-force minimum");
    ++compared;
  }
  expect(compared >= 10, "too few instances compared");
  return "solver value equals the brute-force vertex minimum on " + std::to_string(compared) +
         " instances";
}

std::string criterion_6() {
  std::mt19937 rng(20240972);
  int biconjugates = 0;
  int fy_pairs = 0;
  for (const SuitePair& p : random_suite()) {
    for (const PolyFunc& f : {p.g, p.h}) {
      if (domain(f).empty()) continue;
      PolyFunc fss = conjugate(conjugate(f));
      expect(poly_equal(epigraph(f), epigraph(fss)), "f** and f have different epigraphs");
      ++biconjugates;

      PolyFunc fs = conjugate(f);
      std::vector<Vec> xs, ys;
      const std::vector<Vec>& dom_verts = domain(f).vrep().vertices;
      const std::vector<Vec>& star_verts = domain(fs).vrep().vertices;
      for (std::size_t i = 0; i < dom_verts.size() && i < 2; ++i) xs.push_back(dom_verts[i]);
      for (std::size_t i = 0; i < star_verts.size() && i < 2; ++i) ys.push_back(star_verts[i]);
      for (int i = 0; i < 2; ++i) {
        xs.push_back(random_point(rng, f.n()));
        ys.push_back(random_point(rng, f.n()));
      }
      for (const Vec& x : xs) {
        ExtValue fx = evaluate(f, x);
        Polyhedron sub = subdifferential(f, x);
        for (const Vec& y : ys) {
          ExtValue fsy = evaluate(fs, y);
          bool tight = fx.has_value() && fsy.has_value() && *fx + *fsy == dot(x, y);
          bool member = contains_point(sub, y);
          expect(tight == member,
                 "Fenchel-Young equality disagrees with subdifferential membership");
          ++fy_pairs;
        }
      }
    }
  }
  expect(fy_pairs >= 1000, "too few Fenchel-Young samples: " + std::to_string(fy_pairs));
  return "f** = f for " + std::to_string(biconjugates) + " functions; Fenchel-Young vs " +
         "subdifferential checked on " + std::to_string(fy_pairs) + " pairs";
}

// Re-verifies one certificate against the pair it talks about. For starred
// conditions the pair is (h*, g*); `first` and `second` play the roles g and
// h played in the plain test.
void verify_certificate(const ExistenceCertificate& cert, const PolyFunc& g, const PolyFunc& h,
                        int& cone_walks) {
  if (cert.verdict == Verdict::Exists) return;
  bool starred = cert.failed_condition == FailedCondition::DomEmptyStar ||
                 cert.failed_condition == FailedCondition::DomNotSubsetStar ||
                 cert.failed_condition == FailedCondition::ConeNotSubsetStar;
  switch (cert.failed_condition) {
    case FailedCondition::DomEmpty:
      expect(domain(g).empty(), "DomEmpty certificate but dom g is not empty");
      return;
    case FailedCondition::DomEmptyStar:
      expect(domain(h).empty(), "DomEmptyStar certificate but dom h is not empty");
      return;
    case FailedCondition::DomNotSubsetStar:
      if (!cert.witness.has_value()) {
        expect(domain(g).empty(), "witness-free DomNotSubsetStar needs dom g empty");
        return;
      }
      break;
    default:
      break;
  }

  PolyFunc first = starred ? conjugate(h) : g;
  PolyFunc second = starred ? conjugate(g) : h;
  expect(cert.witness.has_value(), "missing witness");
  const Vec& witness = *cert.witness;

  if (cert.failed_condition == FailedCondition::DomNotSubset ||
      cert.failed_condition == FailedCondition::DomNotSubsetStar) {
    expect(contains_point(domain(first), witness), "domain witness is not in the first domain");
    expect(!hrep_satisfied(domain(second).hrep(), witness),
           "domain witness satisfies the second domain's H-rep");
    return;
  }

  // Cone witness: a recession direction of epi(first) that escapes
  // 0+epi(second), so the concave objective descends forever along it.
  Polyhedron first_cone = recession_cone(epigraph(first));
  Polyhedron second_cone = recession_cone(epigraph(second));
  expect(contains_point(first_cone, witness), "cone witness is not in 0+epi of the first");
  expect(!hrep_satisfied(second_cone.hrep(), witness),
         "cone witness satisfies the second cone's H-rep");

  Vec d(witness.begin(), witness.end() - 1);
  const Rational& s = witness.back();
  Vec x0 = domain(first).vrep().vertices.front();
  ExtValue f0 = evaluate(first, x0);
  expect(f0.has_value(), "walk base point escapes the first domain");
  long m = escape_offset(second, x0, d, s);
  std::optional<Rational> prev;
  for (long k = 0; k <= 5; ++k) {
    Vec x = x0;
    add_scaled(x, Rational(m + k), d);
    Vec point = x;
    point.push_back(*f0 + Rational(m + k) * s);
    expect(contains_point(epigraph(first), point), "walk leaves the first epigraph");
    ExtValue hx = evaluate(second, x);
    expect(hx.has_value(), "walk leaves the second domain");
    Rational objective = point.back() - *hx;
    if (prev) expect(objective < *prev, "walk objective fails to strictly decrease");
    prev = objective;
  }
  ++cone_walks;
}

std::string criterion_7() {
  int certificates = 0;
  int cone_walks = 0;
  for (const SuitePair& p : random_suite()) {
    DcProblem problem = make_problem(p.g, p.h);
    for (const DcSolution& sol : {solve_primal(problem), solve_dual(problem)}) {
      if (sol.status != SolveStatus::NoSolution) continue;
      expect(sol.certificate.has_value(), "NoSolution without a certificate");
      verify_certificate(*sol.certificate, p.g, p.h, cone_walks);
      ++certificates;
    }
  }
  // The distance-sum family guarantees cone failures on the primal side.
  for (int n = 1; n <= 2; ++n) {
    ProblemFile pf = ex1_instance(n, 1, 2);
    PolyFunc g = compile(*pf.g);
    PolyFunc h = compile(*pf.h);
    for (const ExistenceCertificate& cert :
         {primal_existence_test(g, h), dual_existence_test(g, h)}) {
      expect(cert.verdict == Verdict::NotExists, "ex1 with mg < mh must fail");
      verify_certificate(cert, g, h, cone_walks);
      ++certificates;
    }
  }
  expect(certificates >= 20, "too few certificates exercised");
  expect(cone_walks >= 3, "too few cone walks exercised");
  return std::to_string(certificates) + " certificates re-verified, " +
         std::to_string(cone_walks) + " strictly decreasing cone walks";
}

std::string criterion_8() {
  PolyFunc zero = compile(*affine({rat(0)}, rat(0)));
  DcProblem p = make_problem(zero, zero);
  for (DcSolution sol : {solve_primal(p), solve_dual(p)}) {
    expect(sol.status == SolveStatus::Optimal, "zero problem must be solvable");
    expect(sol.x == Vec{rat(0)}, "reduced solution is not the origin");
    expect(sol.value == rat(0), "optimal value is not 0");
  }
  return "g = h = 0 on the line returns x = 0 with value 0 under both methods";
}

void check_bench_csv(const std::string& family, int lo, int hi, const std::string& path) {
  std::ostringstream err;
  expect(run_bench(family, lo, hi, 2, 1, path, err) == 0, family + " bench failed: " + err.str());
  std::ifstream in(path);
  expect(in.good(), "cannot reopen " + path);
  std::string line;
  expect(static_cast<bool>(std::getline(in, line)), "empty csv");
  expect(line == csv_header(), "bad csv header: " + line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string n_text, method, status, value;
    expect(static_cast<bool>(std::getline(fields, n_text, ',')), "missing n column");
    int n = std::stoi(n_text);
    expect(lo <= n && n <= hi, "row size out of range: " + n_text);
    expect(static_cast<bool>(std::getline(fields, method, ',')), "missing method column");
    expect(method == "primal" || method == "dual", "bad method: " + method);
    expect(static_cast<bool>(std::getline(fields, status, ',')), "missing status column");
    expect(status == "Optimal" || status == "NoSolution", "bad status: " + status);
    expect(static_cast<bool>(std::getline(fields, value, ',')), "missing value column");
    if (status == "Optimal")
      parse_rational(value);
    else
      expect(value.empty(), "NoSolution row carries a value");
    for (int i = 0; i < 4; ++i) {
      std::string t;
      expect(static_cast<bool>(std::getline(fields, t, ',')), "missing timing column");
      std::size_t used = 0;
      double seconds = std::stod(t, &used);
      expect(used == t.size() && seconds >= 0.0, "bad timing field: " + t);
    }
    ++rows;
  }
  expect(rows == 2 * (hi - lo + 1), "expected one row per size and method");
}

std::string criterion_9() {
  check_bench_csv("ex1", 1, 3, "/tmp/polydc_acceptance_ex1.csv");
  check_bench_csv("ex2", 1, 4, "/tmp/polydc_acceptance_ex2.csv");
  return "bench emits well-formed csv for both families";
}

struct Criterion {
  int id;
  double time_limit_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, 60.0, criterion_1},  {2, 120.0, criterion_2}, {3, 0.0, criterion_3},
      {4, 0.0, criterion_4},   {5, 0.0, criterion_5},   {6, 0.0, criterion_6},
      {7, 0.0, criterion_7},   {8, 0.0, criterion_8},   {9, 0.0, criterion_9},
  };
  bool all_ok = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_seconds > 0.0 && elapsed > c.time_limit_seconds) {
      ok = false;
      detail = "over the " + std::to_string(c.time_limit_seconds) + "s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << timing << ") "
              << detail << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
