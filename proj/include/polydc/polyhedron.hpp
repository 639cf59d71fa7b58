#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "polydc/rational.hpp"

namespace polydc {

// a·x <= b
struct LinIneq {
  Vec a;
  Rational b;
};

// a·x == b
struct LinEq {
  Vec a;
  Rational b;
};

// Inequality/equality description of a closed convex polyhedron.
struct HRep {
  int dim = 0;
  std::vector<LinIneq> ineqs;
  std::vector<LinEq> eqs;

  // Canonical description of the empty set: 0·x <= -1.
  static HRep infeasible(int dim);
};

// Generator description: conv(vertices) + cone(rays) + span(lineality).
// Canonical form: lineality in reduced row echelon form; vertices and rays
// reduced modulo the lineality space, rays scaled to coprime integers, all
// lists sorted lexicographically. A non-empty set always has a vertex entry
// (the representative of a minimal face).
struct VRep {
  int dim = 0;
  bool is_empty = true;
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  std::vector<Vec> lineality;

  static VRep empty(int dim);
};

// Immutable dual-representation polyhedron. Whichever representation is
// missing is derived on demand and cached; the cache is synchronized, so
// values can be shared across threads.
class Polyhedron {
 public:
  Polyhedron();
  explicit Polyhedron(HRep h);
  explicit Polyhedron(VRep v);
  Polyhedron(HRep h, VRep v);

  static Polyhedron empty_set(int dim);

  int dim() const;
  bool empty() const;
  const HRep& hrep() const&;
  const VRep& vrep() const&;
  // Calling on a temporary would dangle; copy out instead.
  HRep hrep() &&;
  VRep vrep() &&;

 private:
  struct State;
  std::shared_ptr<State> s_;
};

// Representation conversion (double description method). Both directions
// return minimal canonical descriptions.
VRep dd_convert_h_to_v(const HRep& h);
HRep dd_convert_v_to_h(const VRep& v);

// Exact orthogonal projection onto the coordinates listed in keep
// (0-based, strictly increasing). Projects the generators and re-minimizes.
Polyhedron project(const Polyhedron& p, const std::vector<int>& keep);

// Cone of directions d with p + {d} subset of p. Errors on the empty set.
Polyhedron recession_cone(const Polyhedron& p);

// Basis of 0+p intersected with -(0+p). Errors on the empty set.
Mat lineality_space(const Polyhedron& p);

struct ConeInclusion {
  bool contained = false;
  Vec witness;  // a generator of inner violating outer, when !contained
};

// Tests cone inclusion generator-wise: every ray and +-lineality vector of
// inner must satisfy outer's constraints. Both arguments must be cones.
ConeInclusion cone_contains(const Polyhedron& inner, const Polyhedron& outer);

struct LinMinResult {
  enum class Status { Optimal, Unbounded, Infeasible };
  Status status = Status::Infeasible;
  Rational value;  // Optimal
  Vec argmin;      // Optimal: lexicographically smallest optimal vertex
  Vec ray;         // Unbounded: direction with c·ray < 0
};

// Minimizes c·x over p by scanning the generator description.
LinMinResult linear_min(const Polyhedron& p, const Vec& c);

bool contains_point(const Polyhedron& p, const Vec& x);

// inner subset of outer, checked generator-against-constraints.
bool poly_subset(const Polyhedron& inner, const Polyhedron& outer);
bool poly_equal(const Polyhedron& a, const Polyhedron& b);

// True when every vertex is the zero point (or there are none).
bool is_cone(const Polyhedron& p);

}  // namespace polydc
