#include "polydc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace polydc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_number())
    bad("non-integer numeric literal; write rationals as strings like \"1/3\" or \"0.25\"");
  bad("expected a rational literal");
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Rational& q : v) a.push_back(rational_to_json(q));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  Vec v;
  for (const Json& e : j) v.push_back(rational_from_json(e));
  return v;
}

namespace {

Json mat_to_json(const Mat& m) {
  Json a = Json::array();
  for (const Vec& row : m) a.push_back(vec_to_json(row));
  return a;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rows");
  Mat m;
  for (const Json& row : j) m.push_back(vec_from_json(row));
  return m;
}

Json hrep_to_json(const HRep& h) {
  Json j;
  j["dim"] = h.dim;
  Json ineqs = Json::array();
  for (const LinIneq& q : h.ineqs) {
    Json row;
    row["a"] = vec_to_json(q.a);
    row["b"] = rational_to_json(q.b);
    ineqs.push_back(std::move(row));
  }
  j["ineqs"] = std::move(ineqs);
  Json eqs = Json::array();
  for (const LinEq& q : h.eqs) {
    Json row;
    row["a"] = vec_to_json(q.a);
    row["b"] = rational_to_json(q.b);
    eqs.push_back(std::move(row));
  }
  j["eqs"] = std::move(eqs);
  return j;
}

HRep hrep_from_json(const Json& j) {
  HRep h;
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer()) bad("'dim' must be an integer");
  h.dim = dim.get<int>();
  if (auto it = j.find("ineqs"); it != j.end())
    for (const Json& row : *it)
      h.ineqs.push_back(LinIneq{vec_from_json(field(row, "a")), rational_from_json(field(row, "b"))});
  if (auto it = j.find("eqs"); it != j.end())
    for (const Json& row : *it)
      h.eqs.push_back(LinEq{vec_from_json(field(row, "a")), rational_from_json(field(row, "b"))});
  return h;
}

Json children_to_json(const std::vector<FuncExprPtr>& children) {
  Json a = Json::array();
  for (const FuncExprPtr& c : children) a.push_back(expr_to_json(*c));
  return a;
}

std::vector<FuncExprPtr> children_from_json(const Json& j) {
  if (!j.is_array()) bad("'args' must be an array");
  std::vector<FuncExprPtr> out;
  for (const Json& e : j) out.push_back(expr_from_json(e));
  return out;
}

}  // namespace

Json expr_to_json(const FuncExpr& e) {
  struct Visitor {
    Json operator()(const AffineNode& n) const {
      Json j;
      j["op"] = "affine";
      j["a"] = vec_to_json(n.a);
      j["b"] = rational_to_json(n.b);
      return j;
    }
    Json operator()(const MaxNode& n) const {
      Json j;
      j["op"] = "max";
      j["args"] = children_to_json(n.children);
      return j;
    }
    Json operator()(const SumNode& n) const {
      Json j;
      j["op"] = "sum";
      j["args"] = children_to_json(n.children);
      return j;
    }
    Json operator()(const ScaleNode& n) const {
      Json j;
      j["op"] = "scale";
      j["factor"] = rational_to_json(n.factor);
      j["arg"] = expr_to_json(*n.child);
      return j;
    }
    Json operator()(const Norm1Node& n) const {
      Json j;
      j["op"] = "norm1";
      j["center"] = vec_to_json(n.center);
      return j;
    }
    Json operator()(const IndicatorNode& n) const {
      Json j;
      j["op"] = "indicator";
      j["set"] = hrep_to_json(n.set);
      return j;
    }
    Json operator()(const PreComposeNode& n) const {
      Json j;
      j["op"] = "compose";
      j["c"] = mat_to_json(n.c);
      j["d"] = vec_to_json(n.d);
      j["arg"] = expr_to_json(*n.child);
      return j;
    }
  };
  return std::visit(Visitor{}, e.node);
}

FuncExprPtr expr_from_json(const Json& j) {
  if (!j.is_object()) bad("expression must be an object");
  const Json& op = field(j, "op");
  if (!op.is_string()) bad("'op' must be a string");
  std::string name = op.get<std::string>();
  if (name == "affine")
    return affine(vec_from_json(field(j, "a")), rational_from_json(field(j, "b")));
  if (name == "max") return max_of(children_from_json(field(j, "args")));
  if (name == "sum") return sum_of(children_from_json(field(j, "args")));
  if (name == "scale")
    return scale(rational_from_json(field(j, "factor")), expr_from_json(field(j, "arg")));
  if (name == "norm1") return norm1_dist(vec_from_json(field(j, "center")));
  if (name == "indicator") return indicator(hrep_from_json(field(j, "set")));
  if (name == "compose")
    return pre_compose(mat_from_json(field(j, "c")), vec_from_json(field(j, "d")),
                       expr_from_json(field(j, "arg")));
  bad("unknown op '" + name + "'");
}

Json problem_to_json(const ProblemFile& p) {
  Json j;
  j["n"] = p.n;
  if (p.name || p.description) {
    Json meta;
    if (p.name) meta["name"] = *p.name;
    if (p.description) meta["description"] = *p.description;
    j["metadata"] = std::move(meta);
  }
  j["g"] = expr_to_json(*p.g);
  j["h"] = expr_to_json(*p.h);
  return j;
}

ProblemFile problem_from_json(const Json& j) {
  ProblemFile p;
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) bad("'n' must be an integer");
  p.n = n.get<int>();
  if (p.n < 1) bad("'n' must be at least 1");
  if (auto it = j.find("metadata"); it != j.end()) {
    if (auto name = it->find("name"); name != it->end()) p.name = name->get<std::string>();
    if (auto desc = it->find("description"); desc != it->end())
      p.description = desc->get<std::string>();
  }
  p.g = expr_from_json(field(j, "g"));
  p.h = expr_from_json(field(j, "h"));
  if (expr_dim(*p.g) != p.n) bad("'g' is not an expression over n variables");
  if (expr_dim(*p.h) != p.n) bad("'h' is not an expression over n variables");
  return p;
}

std::string serialize_problem(const ProblemFile& p) { return problem_to_json(p).dump(2) + "\n"; }

ProblemFile parse_problem_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  try {
    return problem_from_json(j);
  } catch (const Json::exception& e) {
    bad(std::string("malformed problem: ") + e.what());
  }
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

void save_problem(const ProblemFile& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) bad("cannot open '" + path + "' for writing");
  out << serialize_problem(p);
  if (!out) bad("failed writing '" + path + "'");
}

namespace {

CheckOutcome outcome_from_string(const std::string& s) {
  for (CheckOutcome o : {CheckOutcome::Passed, CheckOutcome::Failed, CheckOutcome::Skipped})
    if (s == to_string(o)) return o;
  bad("unknown check outcome '" + s + "'");
}

FailedCondition condition_from_string(const std::string& s) {
  for (FailedCondition c :
       {FailedCondition::None, FailedCondition::DomEmpty, FailedCondition::DomNotSubset,
        FailedCondition::ConeNotSubset, FailedCondition::DomEmptyStar,
        FailedCondition::DomNotSubsetStar, FailedCondition::ConeNotSubsetStar})
    if (s == to_string(c)) return c;
  bad("unknown failed condition '" + s + "'");
}

}  // namespace

Json certificate_to_json(const ExistenceCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["failed_condition"] = to_string(c.failed_condition);
  if (c.witness) j["witness"] = vec_to_json(*c.witness);
  Json checks;
  checks["dom_nonempty"] = to_string(c.checked_conditions.dom_nonempty);
  checks["dom_subset"] = to_string(c.checked_conditions.dom_subset);
  checks["cone_subset"] = to_string(c.checked_conditions.cone_subset);
  j["checked_conditions"] = std::move(checks);
  return j;
}

ExistenceCertificate certificate_from_json(const Json& j) {
  ExistenceCertificate c;
  std::string verdict = field(j, "verdict").get<std::string>();
  if (verdict == "Exists")
    c.verdict = Verdict::Exists;
  else if (verdict == "NotExists")
    c.verdict = Verdict::NotExists;
  else
    bad("unknown verdict '" + verdict + "'");
  c.failed_condition = condition_from_string(field(j, "failed_condition").get<std::string>());
  if (auto it = j.find("witness"); it != j.end()) c.witness = vec_from_json(*it);
  const Json& checks = field(j, "checked_conditions");
  c.checked_conditions.dom_nonempty =
      outcome_from_string(field(checks, "dom_nonempty").get<std::string>());
  c.checked_conditions.dom_subset =
      outcome_from_string(field(checks, "dom_subset").get<std::string>());
  c.checked_conditions.cone_subset =
      outcome_from_string(field(checks, "cone_subset").get<std::string>());
  return c;
}

Json result_to_json(const ResultRecord& r) {
  Json j;
  j["n"] = r.n;
  j["method"] = r.method;
  j["status"] = r.status;
  if (r.x) j["x"] = vec_to_json(*r.x);
  if (r.value) j["value"] = rational_to_json(*r.value);
  if (r.dual_y) j["dual_y"] = vec_to_json(*r.dual_y);
  if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
  if (r.agreement) j["agreement"] = *r.agreement;
  Json t;
  t["t_exist"] = r.timings.t_exist;
  t["t_reduce"] = r.timings.t_reduce;
  t["t_enum"] = r.timings.t_enum;
  t["t_total"] = r.timings.t_total;
  j["timings"] = std::move(t);
  return j;
}

ResultRecord result_from_json(const Json& j) {
  ResultRecord r;
  r.n = field(j, "n").get<int>();
  r.method = field(j, "method").get<std::string>();
  r.status = field(j, "status").get<std::string>();
  if (auto it = j.find("x"); it != j.end()) r.x = vec_from_json(*it);
  if (auto it = j.find("value"); it != j.end()) r.value = rational_from_json(*it);
  if (auto it = j.find("dual_y"); it != j.end()) r.dual_y = vec_from_json(*it);
  if (auto it = j.find("certificate"); it != j.end()) r.certificate = certificate_from_json(*it);
  if (auto it = j.find("agreement"); it != j.end()) r.agreement = it->get<bool>();
  const Json& t = field(j, "timings");
  r.timings.t_exist = field(t, "t_exist").get<double>();
  r.timings.t_reduce = field(t, "t_reduce").get<double>();
  r.timings.t_enum = field(t, "t_enum").get<double>();
  r.timings.t_total = field(t, "t_total").get<double>();
  return r;
}

std::string csv_header() { return "n,method,status,value,t_exist,t_reduce,t_enum,t_total"; }

namespace {

std::string seconds(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string result_csv_row(const ResultRecord& r) {
  std::string value = r.value ? format_rational(*r.value) : "";
  return std::to_string(r.n) + "," + r.method + "," + r.status + "," + value + "," +
         seconds(r.timings.t_exist) + "," + seconds(r.timings.t_reduce) + "," +
         seconds(r.timings.t_enum) + "," + seconds(r.timings.t_total);
}

}  // namespace polydc
