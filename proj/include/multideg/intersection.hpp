#pragma once

#include "multideg/exponent_matrix.hpp"
#include "multideg/poly.hpp"
#include "multideg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace multideg {

/// Bitmask over hypersurface indices 0..n-1.
using SubsetMask = std::uint64_t;

inline int popcount(SubsetMask s) { return __builtin_popcountll(s); }
/// Ascending 0-based indices of the set bits.
std::vector<std::size_t> subset_members(SubsetMask s);

enum class VarietyKind { ProjectiveSpace, Table };

/// One user-supplied intersection number h^{dimV-|S|} * prod_{j in S} X_j.
/// `indices` is a multiset of 0-based hypersurface indices.
struct TableEntry {
  std::vector<std::size_t> indices;
  Integer value;
};

/// The variety V with its hypersurface classes, known only through
/// intersection numbers. The transversality hypothesis on the X_j is the
/// caller's obligation and is not checked.
class GeometricSetup {
 public:
  /// V = P^r with general hypersurfaces of the given degrees (Bezout model).
  static GeometricSetup projective_space(std::size_t r, std::vector<Integer> degrees);
  /// Explicit table. Missing entries default to the proportional model
  /// degV * prod(d_j / degV) and are listed in defaulted_subsets().
  static GeometricSetup table(std::size_t dim, Integer deg_v, std::vector<Integer> degrees,
                              const std::vector<TableEntry>& entries);

  VarietyKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const Integer& degree_of_variety() const { return deg_v_; }
  std::size_t n() const { return degrees_.size(); }
  const std::vector<Integer>& degrees() const { return degrees_; }
  const std::vector<TableEntry>& entries() const { return entries_; }
  const std::vector<SubsetMask>& defaulted_subsets() const { return defaulted_; }

  /// True when every X_j is a multiple of h (the P^r model), which licenses
  /// substituting X_j -> d_j h.
  bool classes_proportional_to_h() const { return kind_ == VarietyKind::ProjectiveSpace; }

  /// Squarefree intersection number; zero when |S| > dim V.
  Integer intersection(SubsetMask s) const;
  /// Intersection number of a monomial with powers (exponent per X_j).
  Integer intersection(const std::vector<int>& exponents) const;

 private:
  GeometricSetup() = default;
  Integer default_value(const std::vector<int>& exponents) const;

  VarietyKind kind_ = VarietyKind::ProjectiveSpace;
  std::size_t dim_ = 0;
  Integer deg_v_ = 1;
  std::vector<Integer> degrees_;
  std::vector<TableEntry> entries_;
  std::map<std::vector<int>, Integer> table_;
  std::vector<SubsetMask> defaulted_;
};

GeometricSetup projective_space_setup(std::size_t r, std::vector<Integer> degrees);
GeometricSetup table_setup(std::size_t dim, Integer deg_v, std::vector<Integer> degrees,
                           const std::vector<TableEntry>& entries);

/// Coefficients gamma_0, gamma_1, ... with trailing zeros trimmed.
class MultidegreePolynomial {
 public:
  MultidegreePolynomial() = default;
  explicit MultidegreePolynomial(std::vector<Integer> coefficients);
  /// Throws InvariantBreach on a non-integral coefficient.
  static MultidegreePolynomial from_rationals(const std::vector<Rational>& coefficients);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer operator[](std::size_t l) const { return l < coeffs_.size() ? coeffs_[l] : Integer(0); }
  std::size_t size() const { return coeffs_.size(); }
  bool operator==(const MultidegreePolynomial&) const = default;

  /// "1 + 5*t + 6*t^2"
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Truncated sum of terms coeff * h^e * prod_{j in S} X_j with |S| + e <= dim V.
class GradedClass {
 public:
  struct Key {
    SubsetMask subset = 0;
    int h_power = 0;
    int codim() const { return popcount(subset) + h_power; }
    auto operator<=>(const Key&) const = default;
  };

  explicit GradedClass(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Terms of codimension above dim V are discarded.
  void add(SubsetMask subset, int h_power, const Rational& coeff);
  GradedClass& operator+=(const GradedClass& other);
  bool operator==(const GradedClass& other) const { return terms_ == other.terms_; }

  /// "1 + 3*X1 + X2 + X2*X3", terms by codimension then subset.
  std::string to_string() const;

 private:
  std::size_t dim_;
  std::map<Key, Rational> terms_;
};

/// Common weighted row degree d = sum_j m_ij d_j; throws IsobaricError
/// naming the offending rows (1-based).
Integer validate_isobaric(const ExponentMatrix& m, const GeometricSetup& setup);

/// gamma_l = sum over terms of codimension l of coeff * intersection(S).
MultidegreePolynomial evaluate_degree(const GradedClass& c, const GeometricSetup& setup);
/// The same evaluation with t = 1.
Integer evaluate_total_degree(const GradedClass& c, const GeometricSetup& setup);

/// Evaluation of a power-allowing class given as a polynomial in X1..Xn, h
/// of the problem ring (t must not occur): each X^e h^k of codimension
/// |e| + k <= dim V contributes coeff * intersection(e).
MultidegreePolynomial evaluate_power_class(const MultiPoly& c, const GeometricSetup& setup);

}  // namespace multideg
