#include "multideg/intersection.hpp"

#include "multideg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace multideg {

ExponentMatrix::ExponentMatrix(std::vector<std::vector<std::int64_t>> rows,
                               std::optional<std::size_t> pivot)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw ValidationError("exponent matrix has no rows");
  const std::size_t n = rows_.front().size();
  if (n == 0) throw ValidationError("exponent matrix has no columns");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != n) {
      throw ValidationError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows_[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (auto x : rows_[i]) {
      if (x < 0) {
        throw ValidationError("row " + std::to_string(i + 1) + " has a negative exponent");
      }
    }
  }
  pivot_ = pivot.value_or(rows_.size() - 1);
  if (pivot_ >= rows_.size()) throw ValidationError("pivot row out of range");
}

ExponentMatrix ExponentMatrix::with_pivot(std::size_t pivot) const {
  return ExponentMatrix(rows_, pivot);
}

std::vector<LatticePoint> ExponentMatrix::points() const {
  std::vector<LatticePoint> out;
  for (const auto& r : rows_) out.emplace_back(r);
  return out;
}

std::vector<LatticePoint> ExponentMatrix::translated_points() const {
  return translate_by_pivot(points(), pivot_);
}

std::vector<std::size_t> subset_members(SubsetMask s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; s; ++j, s >>= 1) {
    if (s & 1u) out.push_back(j);
  }
  return out;
}

namespace {

void check_degrees(const std::vector<Integer>& degrees) {
  if (degrees.size() > 62) throw ValidationError("too many hypersurfaces");
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] < 1) {
      throw ValidationError("degree d_" + std::to_string(j + 1) + " must be positive");
    }
  }
}

std::vector<int> exponents_of(const std::vector<std::size_t>& indices, std::size_t n) {
  std::vector<int> e(n, 0);
  for (auto j : indices) ++e[j];
  return e;
}

}  // namespace

GeometricSetup GeometricSetup::projective_space(std::size_t r, std::vector<Integer> degrees) {
  check_degrees(degrees);
  GeometricSetup s;
  s.kind_ = VarietyKind::ProjectiveSpace;
  s.dim_ = r;
  s.deg_v_ = 1;
  s.degrees_ = std::move(degrees);
  return s;
}

GeometricSetup GeometricSetup::table(std::size_t dim, Integer deg_v, std::vector<Integer> degrees,
                                     const std::vector<TableEntry>& entries) {
  check_degrees(degrees);
  if (deg_v < 1) throw ValidationError("degV must be at least 1");
  GeometricSetup s;
  s.kind_ = VarietyKind::Table;
  s.dim_ = dim;
  s.deg_v_ = deg_v;
  s.degrees_ = std::move(degrees);
  s.entries_ = entries;
  const std::size_t n = s.degrees_.size();
  for (const auto& entry : entries) {
    for (auto j : entry.indices) {
      if (j >= n) throw ValidationError("table entry refers to hypersurface " +
                                        std::to_string(j + 1) + " of " + std::to_string(n));
    }
    auto e = exponents_of(entry.indices, n);
    if (entry.indices.size() > dim && entry.value != 0) {
      throw ValidationError("table entry of codimension " + std::to_string(entry.indices.size()) +
                            " > dim V must be zero");
    }
    if (entry.indices.empty() && entry.value != deg_v) {
      throw ValidationError("table entry for the empty set disagrees with degV");
    }
    if (entry.indices.size() == 1 && entry.value != s.degrees_[entry.indices[0]]) {
      throw ValidationError("table entry for X" + std::to_string(entry.indices[0] + 1) +
                            " disagrees with its degree");
    }
    auto [it, inserted] = s.table_.emplace(e, entry.value);
    if (!inserted && it->second != entry.value) {
      throw ValidationError("conflicting duplicate table entries");
    }
  }
  // Squarefree subsets of size >= 2 are the only ones not implied by degV
  // and the degrees.
  if (n < 63) {
    for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m) {
      int k = popcount(m);
      if (k < 2 || static_cast<std::size_t>(k) > dim) continue;
      auto e = exponents_of(subset_members(m), n);
      if (!s.table_.count(e)) {
        s.default_value(e);  // throws when not integral
        s.defaulted_.push_back(m);
      }
    }
  }
  return s;
}

Integer GeometricSetup::default_value(const std::vector<int>& exponents) const {
  // X_j = (d_j / degV) h in the proportional model.
  Rational v = deg_v_;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    for (int k = 0; k < exponents[j]; ++k) v *= Rational(degrees_[j], deg_v_);
  }
  if (!is_integer(v)) {
    throw ValidationError("intersection number for a missing table entry cannot be defaulted "
                          "(proportional model gives " + multideg::to_string(v) + ")");
  }
  return numerator_of(v);
}

Integer GeometricSetup::intersection(SubsetMask s) const {
  std::vector<int> e(n(), 0);
  for (auto j : subset_members(s)) {
    if (j >= n()) throw ValidationError("subset refers to a missing hypersurface");
    e[j] = 1;
  }
  return intersection(e);
}

Integer GeometricSetup::intersection(const std::vector<int>& exponents) const {
  int codim = 0;
  for (int k : exponents) codim += k;
  if (static_cast<std::size_t>(codim) > dim_) return 0;
  if (kind_ == VarietyKind::ProjectiveSpace) {
    Integer v = 1;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      for (int k = 0; k < exponents[j]; ++k) v *= degrees_[j];
    }
    return v;
  }
  if (codim == 0) return deg_v_;
  if (codim == 1) {
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      if (exponents[j]) return degrees_[j];
    }
  }
  auto it = table_.find(exponents);
  return it != table_.end() ? it->second : default_value(exponents);
}

GeometricSetup projective_space_setup(std::size_t r, std::vector<Integer> degrees) {
  return GeometricSetup::projective_space(r, std::move(degrees));
}

GeometricSetup table_setup(std::size_t dim, Integer deg_v, std::vector<Integer> degrees,
                           const std::vector<TableEntry>& entries) {
  return GeometricSetup::table(dim, std::move(deg_v), std::move(degrees), entries);
}

MultidegreePolynomial::MultidegreePolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

MultidegreePolynomial MultidegreePolynomial::from_rationals(
    const std::vector<Rational>& coefficients) {
  std::vector<Integer> out;
  for (std::size_t l = 0; l < coefficients.size(); ++l) {
    if (!is_integer(coefficients[l])) {
      throw InvariantBreach("multidegree gamma_" + std::to_string(l) + " = " +
                            multideg::to_string(coefficients[l]) + " is not an integer");
    }
    out.push_back(numerator_of(coefficients[l]));
  }
  return MultidegreePolynomial(std::move(out));
}

std::string MultidegreePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t l = 0; l < coeffs_.size(); ++l) {
    const Integer& c = coeffs_[l];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Integer mag = abs(c);
    if (l == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << "t";
      if (l > 1) os << "^" << l;
    }
  }
  return os.str();
}

void GradedClass::add(SubsetMask subset, int h_power, const Rational& coeff) {
  Key k{subset, h_power};
  if (k.codim() > static_cast<int>(dim_) || coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  for (const auto& [k, c] : other.terms_) add(k.subset, k.h_power, c);
  return *this;
}

std::string GradedClass::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.codim() != b.first.codim()) return a.first.codim() < b.first.codim();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : sorted) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    std::vector<std::string> factors;
    if (k.h_power > 0) factors.push_back(k.h_power == 1 ? "h" : "h^" + std::to_string(k.h_power));
    for (auto j : subset_members(k.subset)) factors.push_back("X" + std::to_string(j + 1));
    if (factors.empty()) {
      os << multideg::to_string(mag);
      continue;
    }
    if (mag != 1) os << multideg::to_string(mag) << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

Integer validate_isobaric(const ExponentMatrix& m, const GeometricSetup& setup) {
  if (m.n() != setup.n()) {
    throw ValidationError("exponent matrix has " + std::to_string(m.n()) +
                          " columns but there are " + std::to_string(setup.n()) + " degrees");
  }
  std::vector<Integer> sums;
  for (const auto& row : m.rows()) {
    Integer s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += Integer(row[j]) * setup.degrees()[j];
    sums.push_back(s);
  }
  // Report rows disagreeing with the pivot row.
  const Integer& ref = sums[m.pivot()];
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != ref) bad.push_back(i);
  }
  if (!bad.empty()) {
    std::ostringstream os;
    os << "rows are not isobaric: pivot row " << m.pivot() + 1 << " has weighted degree "
       << ref.str() << ", but";
    for (auto i : bad) os << " row " << i + 1 << " has " << sums[i].str() << ";";
    throw IsobaricError(os.str());
  }
  return ref;
}

MultidegreePolynomial evaluate_degree(const GradedClass& c, const GeometricSetup& setup) {
  std::vector<Rational> gamma(setup.dim() + 1, Rational(0));
  for (const auto& [k, coeff] : c.terms()) {
    int l = k.codim();
    if (l > static_cast<int>(setup.dim())) continue;
    gamma[static_cast<std::size_t>(l)] += coeff * Rational(setup.intersection(k.subset));
  }
  return MultidegreePolynomial::from_rationals(gamma);
}

Integer evaluate_total_degree(const GradedClass& c, const GeometricSetup& setup) {
  Integer total = 0;
  auto gamma = evaluate_degree(c, setup);
  for (const auto& g : gamma.coefficients()) total += g;
  return total;
}

MultidegreePolynomial evaluate_power_class(const MultiPoly& c, const GeometricSetup& setup) {
  const Ring& ring = *c.ring();
  const std::size_t n = ring.size() - 2;
  if (n != setup.n()) throw ValidationError("class ring does not match the setup");
  std::vector<Rational> gamma(setup.dim() + 1, Rational(0));
  for (const auto& [e, coeff] : c.terms()) {
    if (e[t_var(ring)] != 0) throw ValidationError("power class must not contain t");
    std::vector<int> x(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    int l = total_degree(e);
    if (l > static_cast<int>(setup.dim())) continue;
    gamma[static_cast<std::size_t>(l)] += coeff * Rational(setup.intersection(x));
  }
  return MultidegreePolynomial::from_rationals(gamma);
}

}  // namespace multideg
