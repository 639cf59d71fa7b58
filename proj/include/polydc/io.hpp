#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "polydc/existence.hpp"
#include "polydc/solver.hpp"

namespace polydc {

// Insertion-ordered so serialization is deterministic and generated files
// re-serialize byte-identically.
using Json = nlohmann::ordered_json;

// On-disk problem description: an expression pair over n shared variables.
struct ProblemFile {
  int n = 0;
  FuncExprPtr g;
  FuncExprPtr h;
  std::optional<std::string> name;
  std::optional<std::string> description;
};

// Rationals travel as canonical "p" or "p/q" strings; plain JSON integers
// are accepted on input, binary floating point literals are rejected.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json expr_to_json(const FuncExpr& e);
FuncExprPtr expr_from_json(const Json& j);

Json problem_to_json(const ProblemFile& p);
ProblemFile problem_from_json(const Json& j);

// Canonical text form: two-space indented JSON with a trailing newline.
std::string serialize_problem(const ProblemFile& p);
// Parse errors of any kind surface as std::invalid_argument.
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);
void save_problem(const ProblemFile& p, const std::string& path);

Json certificate_to_json(const ExistenceCertificate& c);
ExistenceCertificate certificate_from_json(const Json& j);

// Wall-clock seconds per pipeline phase; informational only, never asserted.
struct Timings {
  double t_exist = 0.0;
  double t_reduce = 0.0;
  double t_enum = 0.0;
  double t_total = 0.0;
};

// Command output: either an existence report (status Exists/NotExists) or a
// solver report (status Optimal/NoSolution), plus timings.
struct ResultRecord {
  int n = 0;
  std::string method;
  std::string status;
  std::optional<Vec> x;
  std::optional<Rational> value;
  std::optional<Vec> dual_y;
  std::optional<ExistenceCertificate> certificate;
  std::optional<bool> agreement;
  Timings timings;
};

Json result_to_json(const ResultRecord& r);
ResultRecord result_from_json(const Json& j);

std::string csv_header();
std::string result_csv_row(const ResultRecord& r);

}  // namespace polydc
