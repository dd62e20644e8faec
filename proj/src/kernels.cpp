#include "multideg/kernels.hpp"

#include "multideg/errors.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace multideg::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Runs body(i) for i in [0, count) across threads; the first exception is
// rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

template <typename Body>
void serial_for(std::size_t count, Body&& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

bool vertex_flag(const std::vector<LatticePoint>& points, std::size_t i) {
  for (std::size_t j = 0; j < i; ++j) {
    if (points[j] == points[i]) return false;
  }
  std::vector<LatticePoint> others;
  for (const auto& q : points) {
    if (q != points[i]) others.push_back(q);
  }
  if (others.empty()) return true;
  return !outer_region_contains(others, points[i]);
}

Integer removed_minor(const IntMatrix& m, std::uint64_t removed) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(removed >> i & 1u)) keep.push_back(i);
  }
  IntMatrix sub(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (auto b : keep) sub[a].push_back(m[keep[a]][b]);
  }
  return integer_det(std::move(sub));
}

void check_square(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw NonSquareError("principal minors need a square matrix");
  }
  if (m.size() > 30) throw ValidationError("matrix too large for a subset sweep");
}

template <typename Loop>
std::vector<bool> vertex_flags_with(const std::vector<LatticePoint>& points, Loop loop) {
  std::vector<char> flags(points.size(), 0);
  loop(points.size(), [&](std::size_t i) { flags[i] = vertex_flag(points, i) ? 1 : 0; });
  return std::vector<bool>(flags.begin(), flags.end());
}

template <typename Loop>
std::vector<RationalExpression> integral_terms_with(
    const std::vector<GeneralizedSimplex>& simplices, const RingPtr& ring, std::size_t dim_v,
    Loop loop) {
  std::vector<RationalExpression> out(simplices.size(), RationalExpression(MultiPoly(ring)));
  loop(simplices.size(),
       [&](std::size_t i) { out[i] = simplex_integral_term(simplices[i], ring, dim_v); });
  return out;
}

template <typename Loop>
std::vector<MultiPoly> segre_terms_with(const std::vector<GeneralizedSimplex>& simplices,
                                        const RingPtr& ring, std::size_t dim_v, Loop loop) {
  std::vector<MultiPoly> out(simplices.size(), MultiPoly(ring));
  loop(simplices.size(),
       [&](std::size_t i) { out[i] = simplex_segre_term(simplices[i], ring, dim_v); });
  return out;
}

template <typename Loop>
std::vector<Integer> principal_minors_with(const IntMatrix& m, Loop loop) {
  check_square(m);
  std::vector<Integer> out(std::size_t{1} << m.size());
  loop(out.size(), [&](std::size_t mask) { out[mask] = removed_minor(m, mask); });
  return out;
}

struct SerialLoop {
  template <typename Body>
  void operator()(std::size_t n, Body&& b) const { serial_for(n, b); }
};
struct ParallelLoop {
  template <typename Body>
  void operator()(std::size_t n, Body&& b) const { parallel_for(n, b); }
};

// Dot product v . X as a polynomial.
MultiPoly dot_x(const LatticePoint& v, const RingPtr& ring) {
  MultiPoly p(ring);
  for (std::size_t j = 0; j < v.dim(); ++j) {
    if (v[j] != 0) p += MultiPoly::variable(ring, x_var(j)) * Rational(v[j]);
  }
  return p;
}

MultiPoly x_t_monomial(const GeneralizedSimplex& t, const RingPtr& ring) {
  Exponent e(ring->size(), 0);
  for (std::size_t j = 0; j < t.dim(); ++j) e[x_var(j)] = 1;
  for (auto j : t.infinite_directions) e[x_var(j)] = 0;
  return MultiPoly::monomial(ring, std::move(e), Rational(1));
}

}  // namespace

RationalExpression simplex_integral_term(const GeneralizedSimplex& t, const RingPtr& ring,
                                         std::size_t dim_v) {
  const std::size_t rk = rank(t);
  const std::size_t h = h_var(*ring), tv = t_var(*ring);
  MultiPoly num = x_t_monomial(t, ring) * Rational(hvol(t));
  num = num * MultiPoly::variable(ring, tv, static_cast<int>(rk)) *
        MultiPoly::variable(ring, h, static_cast<int>(dim_v + 1));
  std::vector<MultiPoly> den;
  for (const auto& v : t.finite_vertices) {
    den.push_back(MultiPoly::variable(ring, h) + dot_x(v, ring) * MultiPoly::variable(ring, tv));
  }
  return RationalExpression(std::move(num), den);
}

MultiPoly simplex_segre_term(const GeneralizedSimplex& t, const RingPtr& ring, std::size_t dim_v) {
  std::vector<std::size_t> xs;
  for (std::size_t j = 0; j < t.dim(); ++j) xs.push_back(x_var(j));
  const int base_degree = static_cast<int>(t.dim() - t.infinite_directions.size());
  if (base_degree > static_cast<int>(dim_v)) return MultiPoly(ring);
  const int budget = static_cast<int>(dim_v) - base_degree;

  MultiPoly series(ring, Rational(hvol(t)));
  for (const auto& v : t.finite_vertices) {
    // 1 / (1 + L) = sum_k (-L)^k, truncated.
    MultiPoly neg = -dot_x(v, ring);
    MultiPoly inverse(ring, Rational(1));
    MultiPoly power(ring, Rational(1));
    for (int k = 1; k <= budget; ++k) {
      power = (power * neg).truncated(budget, xs);
      inverse += power;
    }
    series = (series * inverse).truncated(budget, xs);
  }
  return (series * x_t_monomial(t, ring)).truncated(static_cast<int>(dim_v), xs);
}

namespace serial {
std::vector<bool> vertex_flags(const std::vector<LatticePoint>& points) {
  return vertex_flags_with(points, SerialLoop{});
}
std::vector<RationalExpression> integral_terms(const std::vector<GeneralizedSimplex>& simplices,
                                               const RingPtr& ring, std::size_t dim_v) {
  return integral_terms_with(simplices, ring, dim_v, SerialLoop{});
}
std::vector<MultiPoly> segre_terms(const std::vector<GeneralizedSimplex>& simplices,
                                   const RingPtr& ring, std::size_t dim_v) {
  return segre_terms_with(simplices, ring, dim_v, SerialLoop{});
}
std::vector<Integer> principal_minors(const IntMatrix& m) {
  return principal_minors_with(m, SerialLoop{});
}
}  // namespace serial

namespace parallel {
std::vector<bool> vertex_flags(const std::vector<LatticePoint>& points) {
  return vertex_flags_with(points, ParallelLoop{});
}
std::vector<RationalExpression> integral_terms(const std::vector<GeneralizedSimplex>& simplices,
                                               const RingPtr& ring, std::size_t dim_v) {
  return integral_terms_with(simplices, ring, dim_v, ParallelLoop{});
}
std::vector<MultiPoly> segre_terms(const std::vector<GeneralizedSimplex>& simplices,
                                   const RingPtr& ring, std::size_t dim_v) {
  return segre_terms_with(simplices, ring, dim_v, ParallelLoop{});
}
std::vector<Integer> principal_minors(const IntMatrix& m) {
  return principal_minors_with(m, ParallelLoop{});
}
}  // namespace parallel

}  // namespace multideg::kernels
