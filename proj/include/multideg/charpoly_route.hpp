#pragma once

#include "multideg/exponent_matrix.hpp"
#include "multideg/intersection.hpp"
#include "multideg/poly_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace multideg {

// Subsets I of {1..n} index rows and the same-numbered columns (coordinates)
// simultaneously. Masks are 0-based; rendering is 1-based.

struct ProjectionViolation {
  SubsetMask subset = 0;
  std::size_t row = 0;  // i in I whose projection escapes the projected region
};

struct SignViolation {
  SubsetMask subset = 0;
  Integer det;
  int required_sign = 0;
};

struct WellPresentedReport {
  bool ok = false;
  std::vector<ProjectionViolation> projection_violations;
  std::vector<SignViolation> sign_violations;
  /// Sign condition evaluated on the pivot-translated matrix instead. Purely
  /// informational; `ok` is decided on the untranslated matrix.
  std::vector<SignViolation> translated_sign_violations;
};

/// Projection and principal-minor sign conditions over all proper subsets I.
/// Throws NonSquareError unless the matrix is square.
WellPresentedReport check_well_presented(const ExponentMatrix& m);

struct NewtonSimplex {
  SubsetMask subset = 0;  // I: infinite directions
  GeneralizedSimplex simplex;
  Integer hvol;
  bool degenerate = false;
};

/// Simplices T_I (I proper) with finite vertices at the origin and the rows
/// k not in I, infinite vertices a_i for i in I. No well-presentedness check.
std::vector<NewtonSimplex> newton_simplices(const ExponentMatrix& m);
/// As newton_simplices; throws NotWellPresented unless the map is well-presented.
std::vector<NewtonSimplex> newton_decomposition(const ExponentMatrix& m);

/// sum_{I} (-1)^{n-|I|} det M^I prod_{k not in I} X_k times
/// sum_k c_1(L)^k, truncated at X-degree dim V. Powers of X_j may occur.
MultiPoly prechar_class(const ExponentMatrix& m, const GeometricSetup& setup, bool force = false);
MultidegreePolynomial prechar_multidegrees(const ExponentMatrix& m, const GeometricSetup& setup,
                                           bool force = false);

/// Rows m_ij X_j.
PolyMatrix build_M(const ExponentMatrix& m, const RingPtr& ring);
/// Rows (m_ij - m_pj) X_j with p the pivot row.
PolyMatrix build_Mprime(const ExponentMatrix& m, const RingPtr& ring);
/// build_Mprime without the pivot row and column.
PolyMatrix build_Mdoubleprime(const ExponentMatrix& m, const RingPtr& ring);

/// Expansion sum_I t^{|I|} (-1)^{n-|I|} det M^I prod_{k not in I} X_k
/// of det(tI - M(X)), from integer principal minors.
MultiPoly charpoly_by_principal_minors(const ExponentMatrix& m, const RingPtr& ring,
                                       bool parallel = true);

struct CharpolyResult {
  MultidegreePolynomial gamma;
  MultiPoly charpoly;  // det(tI - M'(X))
  bool forced = false;
  std::string warning;
};

/// gamma(t) = h^{dimV-n} t^n P_{M'(X)}(h/t), evaluated through the setup.
CharpolyResult multidegree_via_charpoly(const ExponentMatrix& m, const GeometricSetup& setup,
                                        bool force = false);

/// Exponent matrix A of a monomial map of (n-1)-tori; entries may be negative.
struct TorusMap {
  std::vector<std::vector<std::int64_t>> a;
  std::size_t size() const { return a.size(); }
};

/// n x n nonnegative exponent matrix of the homogenized map, normalized so
/// every column has minimum 0.
ExponentMatrix homogenize_torus(const TorusMap& map);

/// Coefficients of det(I - tA). Throws NotWellPresented unless the
/// homogenization is well-presented (or force is set).
MultidegreePolynomial torus_multidegrees(const TorusMap& map, bool force = false);

struct BasrelCheck {
  bool ok = true;
  std::size_t samples = 0;
  std::vector<std::string> failures;
};

/// Samples rational X with all row forms m_i . X equal and checks
/// det(tI - M(X)) = (t - c_1) det(tI - M''(X)) at each sample.
BasrelCheck basrel_identity_check(const ExponentMatrix& m, std::size_t samples,
                                  std::uint64_t seed);

/// "{1,3}"
std::string subset_label(SubsetMask s);

}  // namespace multideg
