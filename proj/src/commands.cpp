#include "polydc/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "polydc/instances.hpp"
#include "polydc/linalg.hpp"

namespace polydc {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CompiledProblem {
  int n = 0;
  PolyFunc g;
  PolyFunc h;
};

CompiledProblem compile_problem(const ProblemFile& pf) {
  PolyFunc g = compile(*pf.g);
  PolyFunc h = compile(*pf.h);
  if (g.n() != pf.n || h.n() != pf.n)
    throw std::invalid_argument("expressions do not match the declared variable count");
  return CompiledProblem{pf.n, std::move(g), std::move(h)};
}

int report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << "\n";
  return 1;
}

}  // namespace

ResultRecord timed_solve(int n, const PolyFunc& g, const PolyFunc& h, Method method) {
  ResultRecord rec;
  rec.n = n;
  rec.method = to_string(method);
  Clock::time_point start = Clock::now();
  Clock::time_point t = start;

  ExistenceCertificate cert = method == Method::Primal ? primal_existence_test(g, h)
                                                       : dual_existence_test(g, h);
  rec.timings.t_exist = since(t);
  if (cert.verdict == Verdict::NotExists) {
    rec.status = to_string(SolveStatus::NoSolution);
    rec.certificate = std::move(cert);
    rec.timings.t_total = since(start);
    return rec;
  }

  if (method == Method::Primal) {
    t = Clock::now();
    LinealityReduction red = reduce_lineality(g);
    Polyhedron epi = epigraph(red.gbar);
    rec.timings.t_reduce = since(t);

    t = Clock::now();
    ConcMinResult opt = solve_concmin(h, epi);
    rec.timings.t_enum = since(t);

    rec.status = to_string(SolveStatus::Optimal);
    rec.x = Vec(opt.vertex.begin(), opt.vertex.end() - 1);
    rec.value = std::move(opt.value);
  } else {
    t = Clock::now();
    PolyFunc hstar = conjugate(h);
    PolyFunc gstar = conjugate(g);
    LinealityReduction red = reduce_lineality(hstar);
    Polyhedron epi = epigraph(red.gbar);
    rec.timings.t_reduce = since(t);

    t = Clock::now();
    ConcMinResult dual_opt = solve_concmin(gstar, epi);
    Vec y(dual_opt.vertex.begin(), dual_opt.vertex.end() - 1);
    Vec x = recover_primal_from_dual(g, y);
    ExtValue gx = evaluate(g, x);
    ExtValue hx = evaluate(h, x);
    if (!gx || !hx) throw std::logic_error("dual recovery escaped a domain");
    Rational value = *gx - *hx;
    if (value != dual_opt.value)
      throw std::logic_error("primal and dual objective values disagree");
    rec.timings.t_enum = since(t);

    rec.status = to_string(SolveStatus::Optimal);
    rec.x = std::move(x);
    rec.value = std::move(value);
    rec.dual_y = std::move(y);
  }
  rec.timings.t_total = since(start);
  return rec;
}

int run_check(const std::string& path, const std::string& method, std::ostream& out,
              std::ostream& err) {
  try {
    CompiledProblem p = compile_problem(load_problem(path));
    ResultRecord rec;
    rec.n = p.n;
    rec.method = method;
    Clock::time_point start = Clock::now();

    int code = 0;
    if (method == "primal" || method == "dual") {
      ExistenceCertificate cert = method == "primal" ? primal_existence_test(p.g, p.h)
                                                     : dual_existence_test(p.g, p.h);
      rec.status = to_string(cert.verdict);
      code = cert.verdict == Verdict::Exists ? 0 : 2;
      rec.certificate = std::move(cert);
    } else if (method == "both") {
      ExistenceCertificate primal = primal_existence_test(p.g, p.h);
      ExistenceCertificate dual = dual_existence_test(p.g, p.h);
      bool agree = primal.verdict == dual.verdict;
      rec.agreement = agree;
      if (!agree) {
        rec.status = "Disagreement";
        code = 1;
      } else {
        rec.status = to_string(primal.verdict);
        code = primal.verdict == Verdict::Exists ? 0 : 2;
      }
      rec.certificate = std::move(primal);
    } else {
      throw std::invalid_argument("unknown method '" + method + "'");
    }
    rec.timings.t_exist = since(start);
    rec.timings.t_total = rec.timings.t_exist;
    out << result_to_json(rec).dump(2) << "\n";
    return code;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int run_solve(const std::string& path, const std::string& method, const std::string& output,
              std::ostream& out, std::ostream& err) {
  try {
    if (method != "primal" && method != "dual")
      throw std::invalid_argument("unknown method '" + method + "'");
    if (output != "json" && output != "csv")
      throw std::invalid_argument("unknown output format '" + output + "'");
    CompiledProblem p = compile_problem(load_problem(path));
    ResultRecord rec =
        timed_solve(p.n, p.g, p.h, method == "primal" ? Method::Primal : Method::Dual);
    if (output == "csv")
      out << csv_header() << "\n" << result_csv_row(rec) << "\n";
    else
      out << result_to_json(rec).dump(2) << "\n";
    return rec.status == to_string(SolveStatus::Optimal) ? 0 : 2;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int run_gen(const std::string& family, int n, int mg, int mh, const std::string& out_path,
            std::ostream& err) {
  try {
    ProblemFile pf;
    if (family == "ex1")
      pf = ex1_instance(n, mg, mh);
    else if (family == "ex2")
      pf = ex2_instance(n);
    else
      throw std::invalid_argument("unknown family '" + family + "'");
    save_problem(pf, out_path);
    return 0;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int run_bench(const std::string& family, int lo, int hi, int mg, int mh,
              const std::string& out_path, std::ostream& err) {
  try {
    if (family != "ex1" && family != "ex2")
      throw std::invalid_argument("unknown family '" + family + "'");
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    out << csv_header() << "\n";
    for (int n = lo; n <= hi; ++n) {
      ProblemFile pf = family == "ex1" ? ex1_instance(n, mg, mh) : ex2_instance(n);
      CompiledProblem p = compile_problem(pf);
      for (Method method : {Method::Primal, Method::Dual})
        out << result_csv_row(timed_solve(p.n, p.g, p.h, method)) << "\n";
    }
    if (!out) throw std::invalid_argument("failed writing '" + out_path + "'");
    return 0;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

}  // namespace polydc
