#pragma once

#include "multideg/poly.hpp"

#include <vector>

namespace multideg {

/// Square matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t n);
  static PolyMatrix from_integers(RingPtr ring, const std::vector<std::vector<Integer>>& m);
  static PolyMatrix identity(RingPtr ring, std::size_t n);

  std::size_t size() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  /// Delete the listed rows and the same-numbered columns.
  PolyMatrix principal_submatrix(const std::vector<std::size_t>& removed) const;

  PolyMatrix operator*(const PolyMatrix& other) const;

 private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<MultiPoly> cells_;
};

/// Largest size handled by cofactor expansion in `det`.
inline constexpr std::size_t kCofactorLimit = 6;

MultiPoly det_cofactor(const PolyMatrix& m);
/// Fraction-free elimination with exact polynomial division.
MultiPoly det_bareiss(const PolyMatrix& m);
/// Cofactor expansion up to kCofactorLimit, Bareiss above.
MultiPoly det(const PolyMatrix& m);

/// det(t*I - m) with t a ring variable not occurring in m.
MultiPoly charpoly(const PolyMatrix& m, std::size_t t);

}  // namespace multideg
