#pragma once

// Data-parallel kernels. Each kernel has a serial reference implementation and
// an OpenMP implementation with identical, deterministic output: results are
// written to per-index slots and never reduced in thread order.

#include "multideg/expr.hpp"
#include "multideg/geometry.hpp"
#include "multideg/poly.hpp"
#include "multideg/rational.hpp"

#include <vector>

namespace multideg::kernels {

/// hVol(T) * X_T * t^rk * h^(dimV+1) / prod_i (h + (v_i . X) t)
RationalExpression simplex_integral_term(const GeneralizedSimplex& t, const RingPtr& ring,
                                         std::size_t dim_v);

/// hVol(T) * X_T / prod_i (1 + v_i . X), expanded and truncated at X-degree dimV.
MultiPoly simplex_segre_term(const GeneralizedSimplex& t, const RingPtr& ring, std::size_t dim_v);

/// Square integer matrix as rows.
using IntMatrix = std::vector<std::vector<Integer>>;

// principal_minors: det of M with the rows and columns in a removed set I
// deleted, indexed by the bitmask of I; 2^n entries, the full mask maps to 1.
namespace serial {
std::vector<bool> vertex_flags(const std::vector<LatticePoint>& points);
std::vector<RationalExpression> integral_terms(const std::vector<GeneralizedSimplex>& simplices,
                                               const RingPtr& ring, std::size_t dim_v);
std::vector<MultiPoly> segre_terms(const std::vector<GeneralizedSimplex>& simplices,
                                   const RingPtr& ring, std::size_t dim_v);
std::vector<Integer> principal_minors(const IntMatrix& m);
}  // namespace serial

namespace parallel {
std::vector<bool> vertex_flags(const std::vector<LatticePoint>& points);
std::vector<RationalExpression> integral_terms(const std::vector<GeneralizedSimplex>& simplices,
                                               const RingPtr& ring, std::size_t dim_v);
std::vector<MultiPoly> segre_terms(const std::vector<GeneralizedSimplex>& simplices,
                                   const RingPtr& ring, std::size_t dim_v);
std::vector<Integer> principal_minors(const IntMatrix& m);
}  // namespace parallel

/// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

}  // namespace multideg::kernels
