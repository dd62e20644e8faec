#pragma once

#include "multideg/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multideg {

/// Ordered variable names. Variable i is smaller than variable i+1 in the
/// term order, so for the problem ring X1 < ... < Xn < h < t.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Ring with variables X1..Xn, h, t.
RingPtr make_problem_ring(std::size_t n);

inline std::size_t x_var(std::size_t j) { return j; }              // X_{j+1}
inline std::size_t h_var(const Ring& r) { return r.size() - 2; }
inline std::size_t t_var(const Ring& r) { return r.size() - 1; }

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded lexicographic order, the last variable being the most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with Rational coefficients. Zero
/// coefficients are never stored. Values are immutable once built and can be
/// shared across threads.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  explicit MultiPoly(RingPtr ring);
  MultiPoly(RingPtr ring, const Rational& constant);

  static MultiPoly variable(RingPtr ring, std::size_t var, int power = 1);
  static MultiPoly monomial(RingPtr ring, Exponent exponent, const Rational& coeff);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero exponent).
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;
  /// Leading term in graded-lex order; requires nonzero.
  const std::pair<const Exponent, Rational>& leading_term() const;

  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Smallest exponent of var over all terms (0 for the zero polynomial).
  int min_degree_in(std::size_t var) const;
  /// Sum of terms whose var-exponent equals k, with var removed (set to 0).
  MultiPoly coefficient_of(std::size_t var, int k) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;

  /// Exact quotient by divisor, or nullopt when the division leaves a remainder.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Replace variables by polynomials over the same ring. Unmapped variables stay.
  MultiPoly substitute(const std::map<std::size_t, MultiPoly>& assignment) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Keep only terms whose degree in the given variables (all if empty) is <= max.
  MultiPoly truncated(int max_degree, const std::vector<std::size_t>& vars = {}) const;

  /// Canonical text: terms in descending order, e.g. "3*X1^2*h - 5/2*t + 1".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  RingPtr ring_;
  Terms terms_;
};

/// Three-way comparison of canonical term lists (same ring).
int compare(const MultiPoly& a, const MultiPoly& b);

/// Parse the canonical text form (also accepts parentheses and nested powers).
MultiPoly parse_poly(const RingPtr& ring, const std::string& text);

enum class PolyOp { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

}  // namespace multideg
