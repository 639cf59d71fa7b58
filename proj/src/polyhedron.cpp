#include "polydc/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "polydc/dd.hpp"
#include "polydc/linalg.hpp"

namespace polydc {

HRep HRep::infeasible(int dim) {
  HRep h;
  h.dim = dim;
  h.ineqs.push_back(LinIneq{zero_vec(dim), Rational(-1)});
  return h;
}

VRep VRep::empty(int dim) {
  VRep v;
  v.dim = dim;
  v.is_empty = true;
  return v;
}

struct Polyhedron::State {
  int dim = 0;
  mutable std::mutex mx;
  mutable std::optional<HRep> h;
  mutable std::optional<VRep> v;
};

Polyhedron::Polyhedron() : Polyhedron(VRep::empty(0)) {}

Polyhedron::Polyhedron(HRep h) : s_(std::make_shared<State>()) {
  s_->dim = h.dim;
  s_->h = std::move(h);
}

Polyhedron::Polyhedron(VRep v) : s_(std::make_shared<State>()) {
  s_->dim = v.dim;
  s_->v = std::move(v);
}

Polyhedron::Polyhedron(HRep h, VRep v) : s_(std::make_shared<State>()) {
  assert(h.dim == v.dim);
  s_->dim = h.dim;
  s_->h = std::move(h);
  s_->v = std::move(v);
}

Polyhedron Polyhedron::empty_set(int dim) {
  return Polyhedron(HRep::infeasible(dim), VRep::empty(dim));
}

int Polyhedron::dim() const { return s_->dim; }

bool Polyhedron::empty() const { return vrep().is_empty; }

const HRep& Polyhedron::hrep() const& {
  std::lock_guard<std::mutex> lock(s_->mx);
  if (!s_->h) s_->h = dd_convert_v_to_h(*s_->v);
  return *s_->h;
}

const VRep& Polyhedron::vrep() const& {
  std::lock_guard<std::mutex> lock(s_->mx);
  if (!s_->v) s_->v = dd_convert_h_to_v(*s_->h);
  return *s_->v;
}

HRep Polyhedron::hrep() && { return static_cast<const Polyhedron&>(*this).hrep(); }

VRep Polyhedron::vrep() && { return static_cast<const Polyhedron&>(*this).vrep(); }

namespace {

// Homogenization column layout: (x_0 .. x_{dim-1}, x0) with x0 last.
Mat homogenize_rows(const HRep& h) {
  Mat rows;
  auto push = [&](const Vec& a, const Rational& b, bool flip) {
    Vec r = flip ? negated(a) : a;
    r.push_back(flip ? b : -b);
    rows.push_back(std::move(r));
  };
  for (const auto& q : h.ineqs) push(q.a, q.b, false);
  for (const auto& q : h.eqs) {
    push(q.a, q.b, false);
    push(q.a, q.b, true);
  }
  Vec nonneg = zero_vec(h.dim + 1);
  nonneg[h.dim] = -1;  // -x0 <= 0
  rows.push_back(std::move(nonneg));
  return rows;
}

Vec drop_last(const Vec& v) { return Vec(v.begin(), v.end() - 1); }

}  // namespace

VRep dd_convert_h_to_v(const HRep& h) {
  detail::ConeGens cone = detail::double_description(homogenize_rows(h), h.dim + 1);

  VRep out;
  out.dim = h.dim;
  for (const auto& l : cone.lineality) {
    assert(l[h.dim] == 0);  // x0 >= 0 forces the homogenizing coordinate out
    out.lineality.push_back(drop_last(l));
  }
  for (const auto& r : cone.rays) {
    const Rational& x0 = r[h.dim];
    assert(x0 >= 0);
    if (x0 > 0) {
      Vec v(h.dim);
      for (int i = 0; i < h.dim; ++i) v[i] = r[i] / x0;
      out.vertices.push_back(std::move(v));
    } else {
      out.rays.push_back(drop_last(r));
    }
  }
  if (out.vertices.empty()) return VRep::empty(h.dim);
  out.is_empty = false;
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  return out;
}

HRep dd_convert_v_to_h(const VRep& v) {
  if (v.is_empty) return HRep::infeasible(v.dim);

  // The valid inequalities a·x <= b form a cone in (a, b)-space; its extreme
  // rays are the facets and its lineality the implicit equalities.
  Mat rows;
  for (const auto& p : v.vertices) {
    Vec r = p;
    r.push_back(Rational(-1));
    rows.push_back(std::move(r));
  }
  for (const auto& d : v.rays) {
    Vec r = d;
    r.push_back(Rational(0));
    rows.push_back(std::move(r));
  }
  for (const auto& l : v.lineality) {
    Vec r = l;
    r.push_back(Rational(0));
    rows.push_back(r);
    rows.push_back(negated(r));
  }
  detail::ConeGens cone = detail::double_description(rows, v.dim + 1);

  HRep out;
  out.dim = v.dim;
  // Rows arrive canonically scaled from the cone computation: coprime
  // integers, equalities with the first nonzero entry positive.
  for (const auto& l : cone.lineality) {
    Vec a = drop_last(l);
    if (is_zero(a)) continue;  // cannot happen for a non-empty set
    out.eqs.push_back(LinEq{std::move(a), l[v.dim]});
  }
  for (const auto& r : cone.rays) {
    Vec a = drop_last(r);
    if (is_zero(a)) {
      assert(r[v.dim] > 0);  // the trivial inequality 0 <= b
      continue;
    }
    out.ineqs.push_back(LinIneq{std::move(a), r[v.dim]});
  }
  auto ineq_less = [](const LinIneq& x, const LinIneq& y) {
    Vec xa = x.a, ya = y.a;
    xa.push_back(x.b);
    ya.push_back(y.b);
    return lex_less(xa, ya);
  };
  auto eq_less = [](const LinEq& x, const LinEq& y) {
    Vec xa = x.a, ya = y.a;
    xa.push_back(x.b);
    ya.push_back(y.b);
    return lex_less(xa, ya);
  };
  std::sort(out.ineqs.begin(), out.ineqs.end(), ineq_less);
  std::sort(out.eqs.begin(), out.eqs.end(), eq_less);
  return out;
}

Polyhedron project(const Polyhedron& p, const std::vector<int>& keep) {
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= p.dim()) throw std::invalid_argument("projection index out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) throw std::invalid_argument("projection indices must increase");
  }
  int m = static_cast<int>(keep.size());
  if (m == p.dim()) return p;  // identity projection
  const VRep& v = p.vrep();
  if (v.is_empty) return Polyhedron::empty_set(m);

  auto pick = [&](const Vec& x) {
    Vec out(m);
    for (int i = 0; i < m; ++i) out[i] = x[keep[i]];
    return out;
  };
  VRep raw;
  raw.dim = m;
  raw.is_empty = false;
  for (const auto& x : v.vertices) raw.vertices.push_back(pick(x));
  for (const auto& x : v.rays) {
    Vec r = pick(x);
    if (!is_zero(r)) raw.rays.push_back(std::move(r));
  }
  for (const auto& x : v.lineality) {
    Vec l = pick(x);
    if (!is_zero(l)) raw.lineality.push_back(std::move(l));
  }
  // Re-minimize through a representation round trip.
  HRep h = dd_convert_v_to_h(raw);
  VRep vmin = dd_convert_h_to_v(h);
  return Polyhedron(std::move(h), std::move(vmin));
}

Polyhedron recession_cone(const Polyhedron& p) {
  const VRep& v = p.vrep();
  if (v.is_empty) throw std::invalid_argument("recession cone of the empty set");
  VRep cone;
  cone.dim = v.dim;
  cone.is_empty = false;
  cone.vertices.push_back(zero_vec(v.dim));
  cone.rays = v.rays;
  cone.lineality = v.lineality;
  return Polyhedron(std::move(cone));
}

Mat lineality_space(const Polyhedron& p) {
  const VRep& v = p.vrep();
  if (v.is_empty) throw std::invalid_argument("lineality space of the empty set");
  return v.lineality;
}

namespace {

// Does generator g (a direction if homogeneous, else a point) satisfy h?
bool direction_satisfies(const HRep& h, const Vec& d) {
  for (const auto& q : h.ineqs)
    if (dot(q.a, d) > 0) return false;
  for (const auto& q : h.eqs)
    if (dot(q.a, d) != 0) return false;
  return true;
}

bool point_satisfies(const HRep& h, const Vec& x) {
  for (const auto& q : h.ineqs)
    if (dot(q.a, x) > q.b) return false;
  for (const auto& q : h.eqs)
    if (dot(q.a, x) != q.b) return false;
  return true;
}

}  // namespace

bool is_cone(const Polyhedron& p) {
  const VRep& v = p.vrep();
  if (v.is_empty) return false;
  for (const auto& x : v.vertices)
    if (!is_zero(x)) return false;
  return true;
}

ConeInclusion cone_contains(const Polyhedron& inner, const Polyhedron& outer) {
  if (!is_cone(inner) || !is_cone(outer)) throw std::invalid_argument("cone_contains requires cones");
  const VRep& vi = inner.vrep();
  const HRep& ho = outer.hrep();
  ConeInclusion res;
  for (const auto& r : vi.rays) {
    if (!direction_satisfies(ho, r)) {
      res.witness = r;
      return res;
    }
  }
  for (const auto& l : vi.lineality) {
    if (!direction_satisfies(ho, l)) {
      res.witness = l;
      return res;
    }
    Vec neg = negated(l);
    if (!direction_satisfies(ho, neg)) {
      res.witness = std::move(neg);
      return res;
    }
  }
  res.contained = true;
  return res;
}

LinMinResult linear_min(const Polyhedron& p, const Vec& c) {
  if (static_cast<int>(c.size()) != p.dim()) throw std::invalid_argument("objective length mismatch");
  LinMinResult res;
  const VRep& v = p.vrep();
  if (v.is_empty) {
    res.status = LinMinResult::Status::Infeasible;
    return res;
  }
  for (const auto& l : v.lineality) {
    Rational d = dot(c, l);
    if (d != 0) {
      res.status = LinMinResult::Status::Unbounded;
      res.ray = d > 0 ? negated(l) : l;
      return res;
    }
  }
  for (const auto& r : v.rays) {
    if (dot(c, r) < 0) {
      res.status = LinMinResult::Status::Unbounded;
      res.ray = r;
      return res;
    }
  }
  res.status = LinMinResult::Status::Optimal;
  bool first = true;
  for (const auto& x : v.vertices) {
    Rational val = dot(c, x);
    if (first || val < res.value) {  // vertices are lex-sorted: first hit wins ties
      res.value = val;
      res.argmin = x;
      first = false;
    }
  }
  return res;
}

bool contains_point(const Polyhedron& p, const Vec& x) {
  if (static_cast<int>(x.size()) != p.dim()) throw std::invalid_argument("point length mismatch");
  return point_satisfies(p.hrep(), x);
}

bool poly_subset(const Polyhedron& inner, const Polyhedron& outer) {
  const VRep& vi = inner.vrep();
  if (vi.is_empty) return true;
  const HRep& ho = outer.hrep();
  for (const auto& x : vi.vertices)
    if (!point_satisfies(ho, x)) return false;
  for (const auto& r : vi.rays)
    if (!direction_satisfies(ho, r)) return false;
  for (const auto& l : vi.lineality) {
    if (!direction_satisfies(ho, l)) return false;
    if (!direction_satisfies(ho, negated(l))) return false;
  }
  return true;
}

bool poly_equal(const Polyhedron& a, const Polyhedron& b) {
  return poly_subset(a, b) && poly_subset(b, a);
}

}  // namespace polydc
