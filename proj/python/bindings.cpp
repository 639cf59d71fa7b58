#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polydc/commands.hpp"
#include "polydc/instances.hpp"

namespace py = pybind11;

namespace {

using namespace polydc;

struct Compiled {
  int n = 0;
  PolyFunc g;
  PolyFunc h;
};

Compiled compile_text(const std::string& problem_json) {
  ProblemFile pf = parse_problem_text(problem_json);
  PolyFunc g = compile(*pf.g);
  PolyFunc h = compile(*pf.h);
  if (g.n() != pf.n || h.n() != pf.n)
    throw std::invalid_argument("expressions do not match the declared variable count");
  return Compiled{pf.n, std::move(g), std::move(h)};
}

Method parse_method(const std::string& method) {
  if (method == "primal") return Method::Primal;
  if (method == "dual") return Method::Dual;
  throw std::invalid_argument("unknown method '" + method + "'");
}

std::string check_text(const std::string& problem_json, const std::string& method) {
  Compiled c = compile_text(problem_json);
  ResultRecord rec;
  rec.n = c.n;
  rec.method = method;
  if (method == "both") {
    ExistenceCertificate primal = primal_existence_test(c.g, c.h);
    ExistenceCertificate dual = dual_existence_test(c.g, c.h);
    bool agree = primal.verdict == dual.verdict;
    rec.agreement = agree;
    rec.status = agree ? to_string(primal.verdict) : "Disagreement";
    rec.certificate = std::move(primal);
  } else {
    ExistenceCertificate cert = parse_method(method) == Method::Primal
                                    ? primal_existence_test(c.g, c.h)
                                    : dual_existence_test(c.g, c.h);
    rec.status = to_string(cert.verdict);
    rec.certificate = std::move(cert);
  }
  return result_to_json(rec).dump();
}

std::string solve_text(const std::string& problem_json, const std::string& method) {
  Compiled c = compile_text(problem_json);
  return result_to_json(timed_solve(c.n, c.g, c.h, parse_method(method))).dump();
}

std::string gen_text(const std::string& family, int n, int mg, int mh) {
  if (family == "ex1") return serialize_problem(ex1_instance(n, mg, mh));
  if (family == "ex2") return serialize_problem(ex2_instance(n));
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::optional<std::string> evaluate_text(const std::string& problem_json,
                                         const std::string& which,
                                         const std::vector<std::string>& x) {
  Compiled c = compile_text(problem_json);
  Vec point;
  for (const std::string& s : x) point.push_back(parse_rational(s));
  ExtValue v;
  if (which == "g")
    v = evaluate(c.g, point);
  else if (which == "h")
    v = evaluate(c.h, point);
  else if (which == "objective") {
    ExtValue gv = evaluate(c.g, point);
    ExtValue hv = evaluate(c.h, point);
    if (!gv || !hv) return std::nullopt;
    Rational diff = *gv - *hv;
    return format_rational(diff);
  } else {
    throw std::invalid_argument("unknown function '" + which + "'; use g, h or objective");
  }
  if (!v) return std::nullopt;
  return format_rational(*v);
}

}  // namespace

PYBIND11_MODULE(_polydc, m) {
  m.doc() = "exact solver for polyhedral d.c. optimization problems";
  m.def("check", &check_text, py::arg("problem_json"), py::arg("method") = "both",
        "Run the existence test; returns a result record as a json string.");
  m.def("solve", &solve_text, py::arg("problem_json"), py::arg("method") = "primal",
        "Solve to optimality; returns a result record as a json string.");
  m.def("gen", &gen_text, py::arg("family"), py::arg("n"), py::arg("mg") = 2, py::arg("mh") = 1,
        "Generate a benchmark instance; returns a problem file as a json string.");
  m.def("evaluate", &evaluate_text, py::arg("problem_json"), py::arg("which"), py::arg("x"),
        "Evaluate g, h or the objective at a rational point; None when infinite.");
}
