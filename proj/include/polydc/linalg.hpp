#pragma once

#include "polydc/rational.hpp"

namespace polydc {

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rational& s);
Vec negated(const Vec& a);
bool is_zero(const Vec& a);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);

// y += s * x
void add_scaled(Vec& y, const Rational& s, const Vec& x);

bool lex_less(const Vec& a, const Vec& b);

// Scales a nonzero rational vector by a positive factor so the entries become
// coprime integers. With normalize_sign the first nonzero entry is made
// positive (only valid where the direction's sign carries no meaning).
Vec primitive(Vec a, bool normalize_sign = false);

// In-place Gauss-Jordan elimination. Returns the pivot column per row of the
// reduced matrix; zero rows are removed.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Solves the square system a*x = b exactly; nullopt when singular.
std::optional<Vec> solve_linear(Mat a, Vec b);

}  // namespace polydc
