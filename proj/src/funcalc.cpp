#include "polydc/funcalc.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

#include "polydc/linalg.hpp"

namespace polydc {

namespace {

void check_children(const std::vector<FuncExprPtr>& children, const char* what) {
  if (children.empty()) throw std::invalid_argument(std::string(what) + " needs at least one child");
  for (const auto& c : children)
    if (!c) throw std::invalid_argument(std::string(what) + " child is null");
  int d = expr_dim(*children.front());
  for (const auto& c : children)
    if (expr_dim(*c) != d) throw std::invalid_argument(std::string(what) + " children disagree on dimension");
}

FuncExprPtr wrap(FuncExpr e) { return std::make_shared<const FuncExpr>(std::move(e)); }

}  // namespace

FuncExprPtr affine(Vec a, Rational b) {
  return wrap(FuncExpr{AffineNode{std::move(a), std::move(b)}});
}

FuncExprPtr max_of(std::vector<FuncExprPtr> children) {
  check_children(children, "max_of");
  return wrap(FuncExpr{MaxNode{std::move(children)}});
}

FuncExprPtr sum_of(std::vector<FuncExprPtr> children) {
  check_children(children, "sum_of");
  return wrap(FuncExpr{SumNode{std::move(children)}});
}

FuncExprPtr scale(Rational factor, FuncExprPtr child) {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  if (!child) throw std::invalid_argument("scale child is null");
  return wrap(FuncExpr{ScaleNode{std::move(factor), std::move(child)}});
}

FuncExprPtr norm1_dist(Vec center) {
  return wrap(FuncExpr{Norm1Node{std::move(center)}});
}

FuncExprPtr indicator(HRep set) {
  for (const auto& q : set.ineqs)
    if (static_cast<int>(q.a.size()) != set.dim) throw std::invalid_argument("indicator row length mismatch");
  for (const auto& q : set.eqs)
    if (static_cast<int>(q.a.size()) != set.dim) throw std::invalid_argument("indicator row length mismatch");
  return wrap(FuncExpr{IndicatorNode{std::move(set)}});
}

FuncExprPtr pre_compose(Mat c, Vec d, FuncExprPtr child) {
  if (!child) throw std::invalid_argument("pre_compose child is null");
  if (c.size() != d.size()) throw std::invalid_argument("pre_compose shape mismatch");
  if (static_cast<int>(c.size()) != expr_dim(*child))
    throw std::invalid_argument("pre_compose output dimension must match the child");
  size_t n = c.empty() ? 0 : c.front().size();
  for (const auto& row : c)
    if (row.size() != n) throw std::invalid_argument("pre_compose matrix is ragged");
  return wrap(FuncExpr{PreComposeNode{std::move(c), std::move(d), std::move(child)}});
}

int expr_dim(const FuncExpr& e) {
  struct Visitor {
    int operator()(const AffineNode& n) const { return static_cast<int>(n.a.size()); }
    int operator()(const MaxNode& n) const { return expr_dim(*n.children.front()); }
    int operator()(const SumNode& n) const { return expr_dim(*n.children.front()); }
    int operator()(const ScaleNode& n) const { return expr_dim(*n.child); }
    int operator()(const Norm1Node& n) const { return static_cast<int>(n.center.size()); }
    int operator()(const IndicatorNode& n) const { return n.set.dim; }
    int operator()(const PreComposeNode& n) const {
      return n.c.empty() ? 0 : static_cast<int>(n.c.front().size());
    }
  };
  return std::visit(Visitor{}, e.node);
}

struct PolyFunc::State {
  int n = 0;
  HRep lifted;
  mutable std::mutex mx;
  mutable std::optional<Polyhedron> epi;
  mutable std::optional<Polyhedron> dom;
  mutable std::optional<PolyFunc> conj;
};

PolyFunc::PolyFunc(std::shared_ptr<State> s) : s_(std::move(s)) {}

int PolyFunc::n() const { return s_->n; }

int PolyFunc::aux_count() const { return s_->lifted.dim - s_->n - 1; }

const HRep& PolyFunc::lifted() const { return s_->lifted; }

namespace {

// The affine substitution x_child = c x + d accumulated through PreCompose.
struct Subst {
  Mat c;
  Vec d;
};

Subst identity_subst(int n) {
  Subst s;
  s.d = zero_vec(n);
  for (int i = 0; i < n; ++i) s.c.push_back(unit_vec(n, i));
  return s;
}

// Where a node's epigraph variable lives: aux column index, or the final t
// column when aux < 0. Scaling folds into mul.
struct TauRef {
  int aux = -1;
  Rational mul = 1;
};

struct RawRow {
  Vec x;
  std::vector<std::pair<int, Rational>> w;
  Rational t;
  Rational b;
  bool eq = false;
};

struct Compiler {
  int n;
  int naux = 0;
  std::vector<RawRow> rows;

  RawRow blank() const {
    RawRow r;
    r.x = zero_vec(n);
    return r;
  }

  static void set_tau(RawRow& row, const TauRef& tau, const Rational& coeff) {
    if (tau.aux < 0)
      row.t += coeff * tau.mul;
    else
      row.w.emplace_back(tau.aux, coeff * tau.mul);
  }

  // Row for a.x_child <= rhs under the substitution, before the tau term.
  RawRow substituted(const Subst& sub, const Vec& a, const Rational& rhs) const {
    RawRow row = blank();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      add_scaled(row.x, a[i], sub.c[i]);
    }
    row.b = rhs - dot(a, sub.d);
    return row;
  }

  void emit(const FuncExpr& e, const Subst& sub, const TauRef& tau) {
    if (const auto* aff = std::get_if<AffineNode>(&e.node)) {
      RawRow row = substituted(sub, aff->a, -aff->b);
      set_tau(row, tau, Rational(-1));
      rows.push_back(std::move(row));
    } else if (const auto* mx = std::get_if<MaxNode>(&e.node)) {
      for (const auto& c : mx->children) emit(*c, sub, tau);
    } else if (const auto* sm = std::get_if<SumNode>(&e.node)) {
      RawRow total = blank();
      for (const auto& c : sm->children) {
        int ti = naux++;
        emit(*c, sub, TauRef{ti, 1});
        total.w.emplace_back(ti, Rational(1));
      }
      set_tau(total, tau, Rational(-1));
      rows.push_back(std::move(total));
    } else if (const auto* sc = std::get_if<ScaleNode>(&e.node)) {
      emit(*sc->child, sub, TauRef{tau.aux, tau.mul / sc->factor});
    } else if (const auto* nm = std::get_if<Norm1Node>(&e.node)) {
      RawRow total = blank();
      for (size_t j = 0; j < nm->center.size(); ++j) {
        int uj = naux++;
        Vec ej = unit_vec(static_cast<int>(nm->center.size()), static_cast<int>(j));
        RawRow above = substituted(sub, ej, nm->center[j]);  //  (x_j - a_j) <= u_j
        above.w.emplace_back(uj, Rational(-1));
        rows.push_back(std::move(above));
        RawRow below = substituted(sub, negated(ej), -nm->center[j]);  // -(x_j - a_j) <= u_j
        below.w.emplace_back(uj, Rational(-1));
        rows.push_back(std::move(below));
        total.w.emplace_back(uj, Rational(1));
      }
      set_tau(total, tau, Rational(-1));
      rows.push_back(std::move(total));
    } else if (const auto* ind = std::get_if<IndicatorNode>(&e.node)) {
      for (const auto& q : ind->set.ineqs) rows.push_back(substituted(sub, q.a, q.b));
      for (const auto& q : ind->set.eqs) {
        RawRow row = substituted(sub, q.a, q.b);
        row.eq = true;
        rows.push_back(std::move(row));
      }
      RawRow lower = blank();  // the indicator still bounds t from below by 0
      set_tau(lower, tau, Rational(-1));
      rows.push_back(std::move(lower));
    } else if (const auto* pc = std::get_if<PreComposeNode>(&e.node)) {
      Subst inner;
      inner.d = pc->d;
      for (size_t i = 0; i < pc->c.size(); ++i) {
        Vec row = zero_vec(n);
        for (size_t j = 0; j < pc->c[i].size(); ++j) add_scaled(row, pc->c[i][j], sub.c[j]);
        inner.c.push_back(std::move(row));
        inner.d[i] += dot(pc->c[i], sub.d);
      }
      emit(*pc->child, inner, tau);
    }
  }

  HRep assemble() const {
    HRep h;
    h.dim = n + naux + 1;
    for (const auto& r : rows) {
      Vec a = zero_vec(h.dim);
      for (int i = 0; i < n; ++i) a[i] = r.x[i];
      for (const auto& [col, coef] : r.w) a[n + col] += coef;
      a[n + naux] = r.t;
      if (r.eq)
        h.eqs.push_back(LinEq{std::move(a), r.b});
      else
        h.ineqs.push_back(LinIneq{std::move(a), r.b});
    }
    return h;
  }
};

std::vector<int> epi_indices(int n, int dim) {
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) keep.push_back(i);
  keep.push_back(dim - 1);
  return keep;
}

}  // namespace

namespace detail {

// A lineality direction (0, t) with t != 0 in the epigraph means the value
// -inf is attained somewhere, which the calculus excludes.
PolyFunc make_polyfunc(int n, HRep lifted, std::optional<Polyhedron> epi_hint) {
  auto st = std::make_shared<PolyFunc::State>();
  st->n = n;
  st->lifted = std::move(lifted);
  Polyhedron epi = epi_hint ? std::move(*epi_hint)
                            : project(Polyhedron(st->lifted), epi_indices(n, st->lifted.dim));
  if (!epi.empty()) {
    for (const auto& l : epi.vrep().lineality) {
      Vec xpart(l.begin(), l.end() - 1);
      if (is_zero(xpart)) throw std::domain_error("improper polyhedral function (value -inf)");
    }
  }
  st->epi = std::move(epi);
  return PolyFunc(std::move(st));
}

}  // namespace detail

PolyFunc compile(const FuncExpr& e) {
  Compiler c;
  c.n = expr_dim(e);
  c.emit(e, identity_subst(c.n), TauRef{});
  return detail::make_polyfunc(c.n, c.assemble(), std::nullopt);
}

ExtValue evaluate(const PolyFunc& f, const Vec& x) {
  if (static_cast<int>(x.size()) != f.n()) throw std::invalid_argument("evaluation point length mismatch");
  const HRep& lifted = f.lifted();
  const int n = f.n();
  const int m = f.aux_count();

  auto prefix_dot = [&](const Vec& a) {
    Rational acc = 0;
    for (int i = 0; i < n; ++i) acc += a[i] * x[i];
    return acc;
  };

  if (m == 0) {
    bool bounded = false;
    Rational lb;
    for (const auto& q : lifted.ineqs) {
      Rational lhs = prefix_dot(q.a);
      const Rational& at = q.a[n];
      if (at == 0) {
        if (lhs > q.b) return std::nullopt;
      } else {
        Rational bound = (lhs - q.b) / -at;
        if (!bounded || bound > lb) {
          lb = std::move(bound);
          bounded = true;
        }
      }
    }
    for (const auto& q : lifted.eqs) {
      if (q.a[n] != 0) throw std::logic_error("equality row constrains t");
      if (prefix_dot(q.a) != q.b) return std::nullopt;
    }
    if (!bounded) throw std::logic_error("function value unbounded below");
    return lb;
  }

  HRep slice;
  slice.dim = m + 1;
  auto cut = [&](const Vec& a, const Rational& b, auto push) {
    Vec rest(a.begin() + n, a.end());
    push(std::move(rest), b - prefix_dot(a));
  };
  for (const auto& q : lifted.ineqs)
    cut(q.a, q.b, [&](Vec a, Rational b) { slice.ineqs.push_back(LinIneq{std::move(a), std::move(b)}); });
  for (const auto& q : lifted.eqs)
    cut(q.a, q.b, [&](Vec a, Rational b) { slice.eqs.push_back(LinEq{std::move(a), std::move(b)}); });

  LinMinResult res = linear_min(Polyhedron(std::move(slice)), unit_vec(m + 1, m));
  switch (res.status) {
    case LinMinResult::Status::Infeasible:
      return std::nullopt;
    case LinMinResult::Status::Unbounded:
      throw std::logic_error("function value unbounded below");
    case LinMinResult::Status::Optimal:
      break;
  }
  return res.value;
}

Polyhedron epigraph(const PolyFunc& f) {
  std::lock_guard<std::mutex> lock(f.s_->mx);
  if (!f.s_->epi)
    f.s_->epi = project(Polyhedron(f.s_->lifted), epi_indices(f.n(), f.s_->lifted.dim));
  return *f.s_->epi;
}

Polyhedron domain(const PolyFunc& f) {
  Polyhedron epi = epigraph(f);
  std::lock_guard<std::mutex> lock(f.s_->mx);
  if (!f.s_->dom) {
    std::vector<int> keep;
    for (int i = 0; i < f.n(); ++i) keep.push_back(i);
    f.s_->dom = project(epi, keep);
  }
  return *f.s_->dom;
}

PolyFunc conjugate(const PolyFunc& f) {
  {
    std::lock_guard<std::mutex> lock(f.s_->mx);
    if (f.s_->conj) return *f.s_->conj;
  }
  Polyhedron epi = epigraph(f);
  if (epi.empty())
    throw std::domain_error("conjugate of a function with empty domain would be improper");
  const VRep& v = epi.vrep();
  const int n = f.n();

  HRep star;
  star.dim = n + 1;
  for (const auto& vert : v.vertices) {
    Vec a(vert.begin(), vert.end() - 1);
    a.push_back(Rational(-1));
    star.ineqs.push_back(LinIneq{std::move(a), vert[n]});  // v.y - rho <= r
  }
  for (const auto& ray : v.rays) {
    Vec a(ray.begin(), ray.end() - 1);
    a.push_back(Rational(0));
    star.ineqs.push_back(LinIneq{std::move(a), ray[n]});  // d.y <= s
  }
  for (const auto& lin : v.lineality) {
    Vec a(lin.begin(), lin.end() - 1);
    a.push_back(Rational(0));
    star.eqs.push_back(LinEq{std::move(a), lin[n]});  // l.y = t
  }

  // The conjugate is w-free, so the lifted system is its own epigraph.
  Polyhedron self(star);
  PolyFunc result = detail::make_polyfunc(n, std::move(star), std::move(self));

  std::lock_guard<std::mutex> lock(f.s_->mx);
  if (!f.s_->conj) f.s_->conj = std::move(result);
  return *f.s_->conj;
}

Polyhedron subdifferential(const PolyFunc& f, const Vec& x) {
  ExtValue fx = evaluate(f, x);
  if (!fx) return Polyhedron::empty_set(f.n());
  const int n = f.n();
  const HRep& star = conjugate(f).lifted();

  // Substitute rho = x.y - f(x) into the constraints of epi f*.
  HRep sub;
  sub.dim = n;
  auto substitute = [&](const Vec& a, const Rational& b) -> std::pair<Vec, Rational> {
    Vec ay(a.begin(), a.end() - 1);
    const Rational& arho = a[n];
    add_scaled(ay, arho, x);
    Rational rhs = b + arho * *fx;
    return {std::move(ay), std::move(rhs)};
  };
  for (const auto& q : star.ineqs) {
    auto [a, b] = substitute(q.a, q.b);
    sub.ineqs.push_back(LinIneq{std::move(a), std::move(b)});
  }
  for (const auto& q : star.eqs) {
    auto [a, b] = substitute(q.a, q.b);
    sub.eqs.push_back(LinEq{std::move(a), std::move(b)});
  }
  return Polyhedron(std::move(sub));
}

PolyFunc restrict_affine(const PolyFunc& f, const Vec& xbar, const Mat& l) {
  if (static_cast<int>(xbar.size()) != f.n())
    throw std::invalid_argument("restriction point length mismatch");
  if (!evaluate(f, xbar)) throw std::invalid_argument("restriction point outside the domain");
  if (l.empty()) return f;

  HRep h = f.lifted();
  for (const auto& lk : l) {
    if (static_cast<int>(lk.size()) != f.n())
      throw std::invalid_argument("lineality vector length mismatch");
    Vec a = zero_vec(h.dim);
    for (int i = 0; i < f.n(); ++i) a[i] = lk[i];
    h.eqs.push_back(LinEq{std::move(a), dot(lk, xbar)});
  }
  return detail::make_polyfunc(f.n(), std::move(h), std::nullopt);
}

Mat function_lineality(const PolyFunc& f) {
  Polyhedron epi = epigraph(f);
  if (epi.empty()) throw std::invalid_argument("function lineality of an empty domain");
  Mat out;
  for (const auto& l : epi.vrep().lineality) out.push_back(Vec(l.begin(), l.end() - 1));
  return out;
}

}  // namespace polydc
