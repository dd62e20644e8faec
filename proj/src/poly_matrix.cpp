#include "multideg/poly_matrix.hpp"

#include "multideg/errors.hpp"

#include <algorithm>

namespace multideg {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t n)
    : ring_(ring), n_(n), cells_(n * n, MultiPoly(ring)) {}

PolyMatrix PolyMatrix::from_integers(RingPtr ring, const std::vector<std::vector<Integer>>& m) {
  PolyMatrix out(ring, m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw ValidationError("matrix is not square");
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = MultiPoly(ring, Rational(m[i][j]));
  }
  return out;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix out(ring, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = MultiPoly(ring, Rational(1));
  return out;
}

PolyMatrix PolyMatrix::principal_submatrix(const std::vector<std::size_t>& removed) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n_; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  }
  PolyMatrix out(ring_, keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out(a, b) = (*this)(keep[a], keep[b]);
  }
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  PolyMatrix out(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      MultiPoly acc(ring_);
      for (std::size_t k = 0; k < n_; ++k) acc += (*this)(i, k) * other(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

namespace {

// Laplace expansion along the first remaining row; `cols` are the free columns.
MultiPoly cofactor_rec(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.empty()) return MultiPoly(m.ring(), Rational(1));
  MultiPoly acc(m.ring());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MultiPoly& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    MultiPoly minor = cofactor_rec(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2) {
      acc -= entry * minor;
    } else {
      acc += entry * minor;
    }
  }
  return acc;
}

}  // namespace

MultiPoly det_cofactor(const PolyMatrix& m) {
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_rec(m, 0, cols);
}

MultiPoly det_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(m.ring(), Rational(1));
  std::vector<std::vector<MultiPoly>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  }
  MultiPoly prev(m.ring(), Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(m.ring());
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.divide_exact(prev);
        if (!q) throw InvariantBreach("Bareiss step left a remainder");
        a[i][j] = std::move(*q);
      }
      a[i][k] = MultiPoly(m.ring());
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MultiPoly det(const PolyMatrix& m) {
  return m.size() <= kCofactorLimit ? det_cofactor(m) : det_bareiss(m);
}

MultiPoly charpoly(const PolyMatrix& m, std::size_t t) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j).degree_in(t) > 0) {
        throw ValidationError("charpoly variable occurs in matrix entries");
      }
    }
  }
  PolyMatrix shifted(m.ring(), m.size());
  MultiPoly tv = MultiPoly::variable(m.ring(), t);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      shifted(i, j) = i == j ? tv - m(i, j) : -m(i, j);
    }
  }
  return det(shifted);
}

}  // namespace multideg
