#include "multideg/lp.hpp"

#include "multideg/errors.hpp"

namespace multideg::lp {

std::optional<std::vector<Rational>> find_feasible(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw ValidationError("LP: row count mismatch");
  const std::size_t vars = rows ? a.front().size() : 0;
  for (const auto& r : a) {
    if (r.size() != vars) throw ValidationError("LP: ragged constraint matrix");
  }

  // Tableau columns: original vars, one artificial per row, then rhs.
  const std::size_t cols = vars + rows;
  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < vars; ++j) tab[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    tab[i][vars + i] = 1;
    tab[i][cols] = flip ? Rational(-b[i]) : b[i];
    basis[i] = vars + i;
  }

  // Reduced costs of "minimize the sum of artificials": c_j - sum of rows.
  std::vector<Rational> cost(cols + 1, Rational(0));
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= vars && j < cols) continue;
    for (std::size_t i = 0; i < rows; ++i) cost[j] -= tab[i][j];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == rows) throw InvariantBreach("LP: unbounded phase-one problem");

    Rational piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }

  // cost[cols] holds minus the objective value.
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(vars, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) x[basis[i]] = tab[i][cols];
  }
  return x;
}

}  // namespace multideg::lp
