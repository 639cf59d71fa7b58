#include "polydc/instances.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "polydc/linalg.hpp"

namespace polydc {

namespace {

Rational round_millionth(double v) {
  Rational q(static_cast<long>(std::lround(v * 1e6)), 1000000L);
  q.canonicalize();
  return q;
}

FuncExprPtr distance_sum(int n, int m, bool use_sin) {
  std::vector<FuncExprPtr> terms;
  for (int j = 1; j <= m; ++j) {
    Vec anchor;
    for (int i = 1; i <= n; ++i) {
      double angle = static_cast<double>(i + j);
      anchor.push_back(round_millionth(use_sin ? std::sin(angle) : std::cos(angle)));
    }
    terms.push_back(norm1_dist(std::move(anchor)));
  }
  if (terms.size() == 1) return terms.front();
  return sum_of(std::move(terms));
}

// |x_{i-1}| - x_i as a max of two affine pieces (1-based index i >= 2).
FuncExprPtr step_term(int n, int i) {
  Vec plus = zero_vec(n);
  plus[i - 2] = rat(1);
  plus[i - 1] = rat(-1);
  Vec minus = zero_vec(n);
  minus[i - 2] = rat(-1);
  minus[i - 1] = rat(-1);
  return max_of({affine(std::move(plus), rat(0)), affine(std::move(minus), rat(0))});
}

}  // namespace

ProblemFile ex1_instance(int n, int mg, int mh) {
  if (n < 1 || mg < 1 || mh < 1)
    throw std::invalid_argument("ex1_instance: n, mg and mh must be at least 1");
  ProblemFile p;
  p.n = n;
  p.g = distance_sum(n, mg, true);
  p.h = distance_sum(n, mh, false);
  p.name = "ex1-n" + std::to_string(n) + "-mg" + std::to_string(mg) + "-mh" + std::to_string(mh);
  p.description = "1-norm distance sum to sine anchors minus the same for cosine anchors";
  return p;
}

ProblemFile ex2_instance(int n) {
  if (n < 1) throw std::invalid_argument("ex2_instance: n must be at least 1");
  ProblemFile p;
  p.n = n;

  Vec e1 = unit_vec(n, 0);
  std::vector<FuncExprPtr> gterms;
  gterms.push_back(max_of({affine(e1, rat(-1)), affine(negated(e1), rat(1))}));
  for (int i = 2; i <= n; ++i)
    gterms.push_back(
        scale(rat(200), max_of({affine(zero_vec(n), rat(0)), step_term(n, i)})));
  p.g = gterms.size() == 1 ? gterms.front() : sum_of(std::move(gterms));

  if (n == 1) {
    p.h = affine(zero_vec(1), rat(0));
  } else {
    std::vector<FuncExprPtr> hterms;
    for (int i = 2; i <= n; ++i) hterms.push_back(step_term(n, i));
    FuncExprPtr total = hterms.size() == 1 ? hterms.front() : sum_of(std::move(hterms));
    p.h = scale(rat(100), std::move(total));
  }

  p.name = "ex2-n" + std::to_string(n);
  p.description = "staircase instance; the all-one vector is optimal with value 0";
  return p;
}

}  // namespace polydc
