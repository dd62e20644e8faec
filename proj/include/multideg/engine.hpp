#pragma once

#include "multideg/exponent_matrix.hpp"
#include "multideg/expr.hpp"
#include "multideg/geometry.hpp"
#include "multideg/intersection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multideg {

struct EngineOptions {
  /// Placing order for the triangulation; default is vertices then rays.
  std::optional<InsertionOrder> order;
  /// Use the OpenMP kernels (results are identical either way).
  bool parallel = true;
};

/// Translated region, its vertices and a triangulation.
struct NewtonTriangulation {
  NewtonOuterRegion region;
  Triangulation triangulation;
};

NewtonTriangulation newton_triangulation(const ExponentMatrix& m,
                                         const EngineOptions& options = {});

/// G = sum_T hVol(T) X_T over a triangulation of the translated outer region.
GradedClass multidegree_class(const ExponentMatrix& m, const GeometricSetup& setup,
                              const EngineOptions& options = {});

/// gamma(t) = sum_T hVol(T) deg(T) t^rk(T).
MultidegreePolynomial multidegree_polynomial(const ExponentMatrix& m, const GeometricSetup& setup,
                                             const EngineOptions& options = {});

/// The multidegree integral as a rational function of X1..Xn, h, t, summed
/// from per-simplex closed forms. Nothing is substituted.
RationalExpression symbolic_integral(const ExponentMatrix& m, const GeometricSetup& setup,
                                     const EngineOptions& options = {});

/// Substitute X_j -> d_j h into a symbolic integral and read gamma off the
/// t-coefficients (each a multiple of h^dimV). Only for setups whose classes
/// are proportional to h; throws MethodInapplicable otherwise.
MultidegreePolynomial gamma_from_symbolic(const RationalExpression& e, const GeometricSetup& setup);

/// Truncated power series in X1..Xn (powers allowed), total degree <= dim V.
struct SegreSeries {
  MultiPoly series;
  std::size_t truncation = 0;
};

struct SegreResult {
  SegreSeries segre;       // s(S, V)
  SegreSeries complement;  // [V] - s(S, V), integral over the untranslated outer region
};

SegreResult segre_class(const ExponentMatrix& m, const GeometricSetup& setup,
                        const EngineOptions& options = {});

/// Degrees h^{dimV - |S|} * X_S of the series terms, P^r model only.
MultidegreePolynomial segre_degrees(const SegreSeries& s, const GeometricSetup& setup);

struct SimplexRecord {
  GeneralizedSimplex simplex;
  std::size_t rank = 0;
  Integer hvol;
  Integer degree;  // h^{dimV - rk} X_T, zero above dim V
};

struct MultidegreeReport {
  MultidegreePolynomial gamma;
  GradedClass multidegree_class{0};
  std::vector<SimplexRecord> simplices;
  std::vector<LatticePoint> translated_points;
  std::vector<bool> vertex_flags;
  std::size_t pivot = 0;
  Integer line_bundle_degree;  // d = h^{dimV-1} c_1(L)
  std::optional<Integer> self_intersection;        // c_1(L)^dimV
  std::optional<Integer> base_locus_contribution;  // c_1(L)^dimV - gamma_dimV
  bool dominant = false;                           // gamma_dimV > 0
  std::vector<SubsetMask> defaulted_subsets;
  std::string hypothesis_note;
};

MultidegreeReport report(const ExponentMatrix& m, const GeometricSetup& setup,
                         const EngineOptions& options = {});

/// deg(T) = h^{dimV - rk T} * X_T.
Integer simplex_degree(const GeneralizedSimplex& t, const GeometricSetup& setup);

}  // namespace multideg
