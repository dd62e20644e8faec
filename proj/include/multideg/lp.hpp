#pragma once

#include "multideg/rational.hpp"

#include <optional>
#include <vector>

namespace multideg::lp {

/// Phase-one simplex with Bland's rule over exact rationals: finds x >= 0 with
/// A x = b, or reports infeasibility. A is given row-major; every row must
/// have the same length.
std::optional<std::vector<Rational>> find_feasible(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<Rational>& b);

}  // namespace multideg::lp
