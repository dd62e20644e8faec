#pragma once

#include "multideg/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace multideg {

/// Affine form c0 + sum_j c_j * var_j over a ring. `homogenized` produces the
/// denominator shape that appears in the multidegree integrand,
/// c0*h + (sum_j c_j*var_j)*t.
struct LinearForm {
  Rational constant = 0;
  std::vector<std::pair<std::size_t, Rational>> coefficients;

  MultiPoly to_poly(const RingPtr& ring) const;
  MultiPoly homogenized(const RingPtr& ring, std::size_t h, std::size_t t) const;
};

/// A denominator factor with its multiplicity. Factors are kept normalized:
/// primitive integer coefficients, positive leading coefficient, nonconstant,
/// and not a product of a monomial with something else.
struct DenomFactor {
  MultiPoly poly;
  int multiplicity = 1;
};

/// Numerator over a product of normalized factors. Every constructor and
/// operation returns the simplified form: no factor divides the numerator,
/// factors sorted canonically, zero has an empty denominator.
class RationalExpression {
 public:
  explicit RationalExpression(MultiPoly numerator);
  /// numerator / prod(denominators), each denominator normalized and split.
  RationalExpression(MultiPoly numerator, const std::vector<MultiPoly>& denominators);

  const RingPtr& ring() const { return numerator_.ring(); }
  const MultiPoly& numerator() const { return numerator_; }
  const std::vector<DenomFactor>& denominator() const { return denominator_; }
  MultiPoly expanded_denominator() const;

  bool is_polynomial() const { return denominator_.empty(); }
  /// True when every denominator factor is a single variable.
  bool denominator_is_monomial() const;

  RationalExpression operator*(const RationalExpression& other) const;

  /// Exact substitution, then simplification. Throws DivisionByZeroForm when
  /// a denominator factor becomes identically zero.
  RationalExpression substitute(const std::map<std::size_t, MultiPoly>& assignment) const;

  /// Value at a point; throws DivisionByZeroForm when the denominator vanishes.
  Rational evaluate(const std::vector<Rational>& point) const;

  /// "(num)/((f1)^2*(f2))", or just the numerator when polynomial.
  std::string to_string() const;

  friend bool operator==(const RationalExpression& a, const RationalExpression& b);

 private:
  RationalExpression(MultiPoly numerator, std::vector<DenomFactor> factors, bool);
  void simplify();

  MultiPoly numerator_;
  std::vector<DenomFactor> denominator_;
};

/// Normalize a nonzero polynomial into scalar * prod(factors). Monomial content
/// is split into single-variable factors; the constant scalar absorbs content
/// and sign.
std::pair<Rational, std::vector<DenomFactor>> normalize_factor(const MultiPoly& p);

/// Sum over the least common denominator, then simplified.
RationalExpression expr_sum(const std::vector<RationalExpression>& terms);

/// Inverse of to_string.
RationalExpression parse_expression(const RingPtr& ring, const std::string& text);

}  // namespace multideg
