#pragma once

#include "polydc/io.hpp"

namespace polydc {

// Sum-of-distances family: g is the 1-norm distance sum to mg anchor
// columns with entries sin(i+j), h the same with mh cosine columns, all
// entries rounded to exact rationals with denominator 10^6. A solution
// exists exactly when mg >= mh, independently of the rounding, because the
// epigraph recession cones depend only on the anchor counts.
ProblemFile ex1_instance(int n, int mg, int mh);

// Staircase family on n variables:
// g(x) = |x1 - 1| + 200 sum_{i=2..n} max{0, |x_{i-1}| - x_i},
// h(x) = 100 sum_{i=2..n} (|x_{i-1}| - x_i); h is identically zero for n=1.
// The all-one vector is optimal with value 0.
ProblemFile ex2_instance(int n);

}  // namespace polydc
