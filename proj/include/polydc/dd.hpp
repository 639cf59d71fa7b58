#pragma once

#include "polydc/rational.hpp"

namespace polydc::detail {

// Generator description of a homogeneous cone {y : r·y <= 0 for all rows r}.
// lineality is a basis in reduced row echelon form; rays are the extreme rays
// of the quotient by the lineality space, reduced so their lineality-pivot
// coordinates vanish, scaled to coprime integers and sorted lexicographically.
struct ConeGens {
  Mat lineality;
  Mat rays;
};

// Double description method on a homogeneous inequality system.
// Deterministic: rows are canonicalized, deduplicated and inserted in
// lexicographic order.
ConeGens double_description(const Mat& rows, int dim);

}  // namespace polydc::detail
