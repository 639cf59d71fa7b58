#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "polydc/polyhedron.hpp"

namespace polydc {

// Expression AST for closed proper polyhedral convex functions. Values live
// in the extended reals (finite rational or +inf); -inf is unrepresentable.
struct FuncExpr;
using FuncExprPtr = std::shared_ptr<const FuncExpr>;

// a.x + b
struct AffineNode {
  Vec a;
  Rational b;
};

// max of the children (pointwise)
struct MaxNode {
  std::vector<FuncExprPtr> children;
};

// sum of the children (pointwise, +inf absorbing)
struct SumNode {
  std::vector<FuncExprPtr> children;
};

// factor * child, factor > 0
struct ScaleNode {
  Rational factor;
  FuncExprPtr child;
};

// x -> |x - center| in the 1-norm
struct Norm1Node {
  Vec center;
};

// 0 on the set, +inf outside
struct IndicatorNode {
  HRep set;
};

// x -> child(c x + d)
struct PreComposeNode {
  Mat c;
  Vec d;
  FuncExprPtr child;
};

struct FuncExpr {
  std::variant<AffineNode, MaxNode, SumNode, ScaleNode, Norm1Node, IndicatorNode, PreComposeNode>
      node;
};

// Validating builders.
FuncExprPtr affine(Vec a, Rational b);
FuncExprPtr max_of(std::vector<FuncExprPtr> children);
FuncExprPtr sum_of(std::vector<FuncExprPtr> children);
FuncExprPtr scale(Rational factor, FuncExprPtr child);
FuncExprPtr norm1_dist(Vec center);
FuncExprPtr indicator(HRep set);
FuncExprPtr pre_compose(Mat c, Vec d, FuncExprPtr child);

// Ambient dimension of the expression's argument.
int expr_dim(const FuncExpr& e);

class PolyFunc;

namespace detail {
// Shared construction path used by compile, conjugate and restrict_affine:
// wraps a lifted system, derives the epigraph (unless already known) and
// rejects improper functions.
PolyFunc make_polyfunc(int n, HRep lifted, std::optional<Polyhedron> epi_hint);
}  // namespace detail

// A compiled polyhedral function: f(x) = min{t : (x, w, t) in lifted} over
// the auxiliary block w. Column layout of the lifted system: x (n entries),
// w (aux_count entries), then t last. Every t-coefficient of an inequality
// is <= 0, so the (x, t)-projection of the lifted set is the epigraph.
// Immutable; projections and the conjugate are cached behind the shared
// state, so copies are cheap and share work.
class PolyFunc {
 public:
  int n() const;
  int aux_count() const;
  const HRep& lifted() const;

 private:
  struct State;
  explicit PolyFunc(std::shared_ptr<State> s);
  std::shared_ptr<State> s_;

  friend Polyhedron epigraph(const PolyFunc& f);
  friend Polyhedron domain(const PolyFunc& f);
  friend PolyFunc conjugate(const PolyFunc& f);
  friend PolyFunc detail::make_polyfunc(int n, HRep lifted, std::optional<Polyhedron> epi_hint);
};

// Compiles the expression to its lifted epigraph system. Throws if the
// result would take the value -inf somewhere (cannot happen for the builders
// above; the check guards hand-built inputs and internal composition bugs).
PolyFunc compile(const FuncExpr& e);

// Exact value at x; nullopt encodes +inf.
ExtValue evaluate(const PolyFunc& f, const Vec& x);

// {(x, t) : t >= f(x)} in dimension n+1; cached.
Polyhedron epigraph(const PolyFunc& f);

// {x : f(x) < +inf} in dimension n; cached.
Polyhedron domain(const PolyFunc& f);

// Legendre-Fenchel conjugate f*(y) = sup_x [y.x - f(x)], built from the
// generator description of epi f; errors when dom f is empty (the conjugate
// would be identically -inf). Cached.
PolyFunc conjugate(const PolyFunc& f);

// {y : f(z) >= f(x) + y.(z - x) for all z}; the empty set when x is outside
// dom f.
Polyhedron subdifferential(const PolyFunc& f, const Vec& x);

// The function equal to f on xbar + (span L)-orthogonal complement and +inf
// elsewhere; errors if xbar is outside dom f.
PolyFunc restrict_affine(const PolyFunc& f, const Vec& xbar, const Mat& l);

// Basis of the lineality space of f: the x-projection of lineal(epi f).
// Errors on empty domain.
Mat function_lineality(const PolyFunc& f);

}  // namespace polydc
