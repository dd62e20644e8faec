#include "multideg/rational.hpp"

#include "multideg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace multideg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::Isobaric: return "IsobaricError";
    case ErrorKind::NonSquare: return "NonSquareError";
    case ErrorKind::NotWellPresented: return "NotWellPresented";
    case ErrorKind::DivisionByZero: return "DivisionByZeroForm";
    case ErrorKind::MethodInapplicable: return "MethodInapplicable";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Error";
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw ValidationError("malformed number '" + whole + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ValidationError("malformed number '" + whole + "'");
    }
  }
  std::string digits = text[0] == '+' ? text.substr(1) : text;
  return Integer(digits);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Integer integer_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int flips = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      ++flips;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  return flips % 2 ? Integer(-d) : d;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows,
                                              std::size_t cols) {
  auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace multideg
