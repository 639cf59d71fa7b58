#include "polydc/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace polydc {

Rational dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scaled(const Vec& a, const Rational& s) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Vec negated(const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(int n) { return Vec(n, Rational(0)); }

Vec unit_vec(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

void add_scaled(Vec& y, const Rational& s, const Vec& x) {
  assert(y.size() == x.size());
  for (size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

bool lex_less(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Vec primitive(Vec a, bool normalize_sign) {
  mpz_class den_lcm = 1;
  for (const auto& x : a) den_lcm = lcm(den_lcm, x.get_den());
  mpz_class num_gcd = 0;
  for (auto& x : a) {
    x *= Rational(den_lcm);
    x.canonicalize();
    num_gcd = gcd(num_gcd, x.get_num());
  }
  if (num_gcd == 0) return a;  // zero vector
  for (auto& x : a) {
    x /= Rational(num_gcd);
    x.canonicalize();
  }
  if (normalize_sign) {
    for (const auto& x : a) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : a) y = -y;
      break;
    }
  }
  return a;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational p = m[row][col];
    for (auto& x : m[row]) x /= p;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<Vec> solve_linear(Mat a, Vec b) {
  size_t n = a.size();
  if (n == 0) return Vec{};
  assert(a[0].size() == n && b.size() == n);
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  if (pivots.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;  // last column pivoted
  Vec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace polydc
