#pragma once

#include "multideg/geometry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace multideg {

/// Exponents m_ij of the monomials mu_i = s_1^{m_i1} ... s_n^{m_in}; one row
/// per monomial. Entries are nonnegative. The pivot row is the one subtracted
/// to put a vertex at the origin (default: last row).
class ExponentMatrix {
 public:
  explicit ExponentMatrix(std::vector<std::vector<std::int64_t>> rows,
                          std::optional<std::size_t> pivot = std::nullopt);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t n() const { return rows_.front().size(); }
  bool is_square() const { return row_count() == n(); }
  std::size_t pivot() const { return pivot_; }
  ExponentMatrix with_pivot(std::size_t pivot) const;

  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  std::vector<LatticePoint> points() const;
  /// Rows minus the pivot row.
  std::vector<LatticePoint> translated_points() const;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  std::size_t pivot_;
};

}  // namespace multideg
