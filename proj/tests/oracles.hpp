#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's geometry or determinant code.

#include "multideg/geometry.hpp"
#include "multideg/poly_matrix.hpp"
#include "multideg/rational.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using multideg::GeneralizedSimplex;
using multideg::Integer;
using multideg::LatticePoint;
using multideg::MultiPoly;
using multideg::PolyMatrix;
using multideg::Rational;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 ? -1 : 1;
}

// Sum over permutations.
inline MultiPoly leibniz_det(const PolyMatrix& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  MultiPoly total(m.ring());
  do {
    MultiPoly term(m.ring(), Rational(permutation_sign(p)));
    for (std::size_t i = 0; i < p.size(); ++i) term = term * m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Integer leibniz_det(const std::vector<std::vector<Integer>>& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    Integer term = permutation_sign(p);
    for (std::size_t i = 0; i < p.size(); ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Gaussian elimination over Q; nullopt when singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

enum class Containment { Outside, Boundary, Interior };

// Barycentric test in the homogenized cone.
inline Containment cell_contains(const GeneralizedSimplex& t, const std::vector<Rational>& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1));
  std::size_t col = 0;
  for (const auto& v : t.finite_vertices) {
    for (std::size_t i = 0; i < n; ++i) a[i][col] = v[i];
    a[n][col++] = 1;
  }
  for (auto j : t.infinite_directions) {
    a[j][col] = 1;
    a[n][col++] = 0;
  }
  std::vector<Rational> b(p);
  b.push_back(1);
  auto x = solve(a, b);
  if (!x) return Containment::Outside;
  bool zero = false;
  for (const auto& c : *x) {
    if (c < 0) return Containment::Outside;
    zero = zero || c == 0;
  }
  return zero ? Containment::Boundary : Containment::Interior;
}

// ---- plane geometry ---------------------------------------------------------

using P2 = std::array<Rational, 2>;
using Polygon = std::vector<P2>;

inline Rational cross(const P2& o, const P2& a, const P2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain, counterclockwise, collinear points dropped.
inline Polygon convex_hull(Polygon pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Polygon h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Keep the part with coordinate axis <= bound.
inline Polygon clip_upper(const Polygon& poly, int axis, const Rational& bound) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& a = poly[i];
    const P2& b = poly[(i + 1) % poly.size()];
    bool ain = a[axis] <= bound, bin = b[axis] <= bound;
    if (ain) out.push_back(a);
    if (ain != bin) {
      Rational s = (bound - a[axis]) / (b[axis] - a[axis]);
      out.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
    }
  }
  return out;
}

inline Rational area(const Polygon& poly) {
  Rational twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& a = poly[i];
    const P2& b = poly[(i + 1) % poly.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

inline P2 to_p2(const LatticePoint& p) { return {Rational(p[0]), Rational(p[1])}; }

// (conv(points) + orthant) intersected with {x <= k, y <= k}; k must bound
// every coordinate.
inline Rational region_area(const std::vector<LatticePoint>& points, const Rational& k) {
  Polygon pts;
  for (const auto& p : points) {
    P2 q = to_p2(p);
    pts.push_back(q);
    pts.push_back({k, q[1]});
    pts.push_back({q[0], k});
  }
  pts.push_back({k, k});
  return area(convex_hull(pts));
}

inline Rational simplex_area(const GeneralizedSimplex& t, const Rational& k) {
  Rational lo = 0;
  for (const auto& v : t.finite_vertices) lo = std::min({lo, Rational(v[0]), Rational(v[1])});
  const Rational reach = 4 * (abs(k) + abs(lo) + 1);
  Polygon pts;
  for (const auto& v : t.finite_vertices) {
    P2 q = to_p2(v);
    pts.push_back(q);
    for (auto j : t.infinite_directions) {
      P2 r = q;
      r[j] += reach;
      pts.push_back(r);
    }
  }
  Polygon hull = convex_hull(pts);
  if (hull.size() < 3) return 0;
  return area(clip_upper(clip_upper(hull, 0, k), 1, k));
}

// Planar membership in conv(points) + orthant: by Caratheodory a witness
// uses at most two finite points.
inline bool region_contains_2d(const std::vector<LatticePoint>& points, const P2& p) {
  for (const auto& q : points) {
    if (Rational(q[0]) <= p[0] && Rational(q[1]) <= p[1]) return true;
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      // lambda*q_a + (1-lambda)*q_b <= p for some lambda in [0,1]
      Rational lo = 0, hi = 1;
      for (int c = 0; c < 2; ++c) {
        Rational slope = points[a][c] - points[b][c];
        Rational room = p[c] - points[b][c];
        if (slope == 0) {
          if (room < 0) lo = 2;
        } else if (slope > 0) {
          hi = std::min(hi, room / slope);
        } else {
          lo = std::max(lo, room / slope);
        }
      }
      if (lo <= hi) return true;
    }
  }
  return false;
}

// ---- random instances -------------------------------------------------------

struct Instance {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<Integer> degrees;
  std::size_t dim = 0;
};

// Rows with sum_j m_ij d_j = D for a common D, on P^dim.
inline Instance random_isobaric(std::mt19937_64& rng, std::size_t n, std::size_t dim,
                                std::size_t row_count) {
  std::uniform_int_distribution<int> deg(1, 3);
  for (;;) {
    Instance inst;
    inst.dim = dim;
    std::vector<int> d(n);
    for (auto& x : d) x = deg(rng);
    for (auto x : d) inst.degrees.emplace_back(x);
    const int target = std::uniform_int_distribution<int>(2, 6)(rng);
    std::vector<std::vector<std::int64_t>> sols;
    std::vector<std::int64_t> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t j, int left) -> void {
      if (j == n) {
        if (left == 0) sols.push_back(cur);
        return;
      }
      for (int m = 0; m * d[j] <= left; ++m) {
        cur[j] = m;
        self(self, j + 1, left - m * d[j]);
      }
      cur[j] = 0;
    };
    rec(rec, 0, target);
    if (sols.size() < row_count) continue;
    std::shuffle(sols.begin(), sols.end(), rng);
    sols.resize(row_count);
    inst.rows = sols;
    return inst;
  }
}

inline std::vector<std::vector<std::int64_t>> random_torus(std::mt19937_64& rng, std::size_t k,
                                                           int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(k));
  for (auto& r : a) {
    for (auto& x : r) x = e(rng);
  }
  return a;
}

}  // namespace oracle
