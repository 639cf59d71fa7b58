#include "polydc/dd.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "polydc/linalg.hpp"

namespace polydc::detail {
namespace {

// Bitset over the rows processed so far; tracks which rows a ray satisfies
// with equality. Kept exact by recomputation, never by the union shortcut,
// so the combinatorial adjacency test stays valid on degenerate inputs.
struct ZeroSet {
  std::vector<uint64_t> bits;

  explicit ZeroSet(size_t nbits) : bits((nbits + 63) / 64, 0) {}
  void set(size_t i) { bits[i / 64] |= uint64_t(1) << (i % 64); }
  bool subset_of(const ZeroSet& other) const {
    for (size_t i = 0; i < bits.size(); ++i)
      if (bits[i] & ~other.bits[i]) return false;
    return true;
  }
  static ZeroSet intersect(const ZeroSet& a, const ZeroSet& b) {
    ZeroSet out(0);
    out.bits.resize(a.bits.size());
    for (size_t i = 0; i < a.bits.size(); ++i) out.bits[i] = a.bits[i] & b.bits[i];
    return out;
  }
};

struct Ray {
  Vec v;
  ZeroSet zero;
};

ZeroSet exact_zero_set(const Vec& v, const Mat& rows, size_t processed, size_t capacity) {
  ZeroSet z(capacity);
  for (size_t i = 0; i < processed; ++i)
    if (dot(rows[i], v) == 0) z.set(i);
  return z;
}

// r_plus and r_minus are adjacent iff no third ray is tight on every row
// that both of them are tight on.
bool adjacent(const Ray& a, const Ray& b, const std::vector<Ray>& rays, size_t ia, size_t ib) {
  ZeroSet common = ZeroSet::intersect(a.zero, b.zero);
  for (size_t i = 0; i < rays.size(); ++i) {
    if (i == ia || i == ib) continue;
    if (common.subset_of(rays[i].zero)) return false;
  }
  return true;
}

}  // namespace

ConeGens double_description(const Mat& input_rows, int dim) {
  // Canonicalize rows: coprime integer scaling, drop zero rows, dedupe,
  // lexicographic insertion order.
  Mat rows;
  for (const auto& r : input_rows) {
    assert(static_cast<int>(r.size()) == dim);
    Vec p = primitive(r);
    if (!is_zero(p)) rows.push_back(std::move(p));
  }
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const size_t nrows = rows.size();

  Mat lin;
  for (int i = 0; i < dim; ++i) lin.push_back(unit_vec(dim, i));
  std::vector<Ray> rays;

  for (size_t k = 0; k < nrows; ++k) {
    const Vec& row = rows[k];

    // If the row cuts the lineality space, pivot one basis vector out of it.
    size_t pivot = lin.size();
    for (size_t i = 0; i < lin.size(); ++i) {
      if (dot(row, lin[i]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot != lin.size()) {
      Vec vstar = lin[pivot];
      Rational dstar = dot(row, vstar);
      Mat new_lin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        Rational d = dot(row, lin[i]);
        Vec w = lin[i];
        if (d != 0) add_scaled(w, -d / dstar, vstar);
        new_lin.push_back(primitive(std::move(w)));
      }
      lin = std::move(new_lin);
      for (auto& r : rays) {
        Rational d = dot(row, r.v);
        if (d != 0) {
          add_scaled(r.v, -d / dstar, vstar);
          r.v = primitive(std::move(r.v));
        }
        r.zero = exact_zero_set(r.v, rows, k + 1, nrows);
      }
      Vec fresh = primitive(dstar > 0 ? negated(vstar) : vstar);
      ZeroSet fz = exact_zero_set(fresh, rows, k + 1, nrows);
      rays.push_back(Ray{std::move(fresh), std::move(fz)});
      continue;
    }

    std::vector<size_t> pos, neg;
    std::vector<Rational> vals(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(row, rays[i].v);
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] < 0)
        neg.push_back(i);
    }
    if (pos.empty()) {
      for (auto& r : rays) r.zero = exact_zero_set(r.v, rows, k + 1, nrows);
      continue;
    }

    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (vals[i] <= 0) next.push_back(rays[i]);
    for (size_t ip : pos) {
      for (size_t in : neg) {
        if (!adjacent(rays[ip], rays[in], rays, ip, in)) continue;
        Vec combo = scaled(rays[in].v, vals[ip]);
        add_scaled(combo, -vals[in], rays[ip].v);
        combo = primitive(std::move(combo));
        next.push_back(Ray{std::move(combo), ZeroSet(nrows)});
      }
    }
    for (auto& r : next) r.zero = exact_zero_set(r.v, rows, k + 1, nrows);
    std::sort(next.begin(), next.end(), [](const Ray& a, const Ray& b) { return lex_less(a.v, b.v); });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Ray& a, const Ray& b) { return a.v == b.v; }),
               next.end());
    rays = std::move(next);
  }

  ConeGens out;
  out.lineality = lin;
  std::vector<int> pivots = rref(out.lineality);
  for (auto& l : out.lineality) l = primitive(std::move(l), /*normalize_sign=*/true);

  for (auto& r : rays) {
    Vec v = std::move(r.v);
    // Canonical representative modulo the lineality space: clear the
    // coordinates at the lineality pivot columns.
    for (size_t i = 0; i < out.lineality.size(); ++i) {
      const Rational& coeff = v[pivots[i]];
      if (coeff != 0) add_scaled(v, -coeff / out.lineality[i][pivots[i]], out.lineality[i]);
    }
    if (is_zero(v)) continue;
    out.rays.push_back(primitive(std::move(v)));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace polydc::detail
