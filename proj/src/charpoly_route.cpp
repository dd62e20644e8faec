#include "multideg/charpoly_route.hpp"

#include "multideg/errors.hpp"
#include "multideg/geometry.hpp"
#include "multideg/kernels.hpp"

#include <random>
#include <sstream>

namespace multideg {

std::string subset_label(SubsetMask s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto j : subset_members(s)) {
    os << (first ? "" : ",") << j + 1;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

void require_square(const ExponentMatrix& m) {
  if (!m.is_square()) {
    throw NonSquareError("well-presentedness needs a square exponent matrix (" +
                         std::to_string(m.row_count()) + " rows, " + std::to_string(m.n()) +
                         " columns)");
  }
}

kernels::IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  kernels::IntMatrix out;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (auto x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

kernels::IntMatrix translated_int_matrix(const ExponentMatrix& m) {
  kernels::IntMatrix out;
  for (const auto& p : m.translated_points()) {
    std::vector<Integer> row;
    for (auto x : p.coords) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

int required_sign(std::size_t n, std::size_t removed) {
  return (n - 1 - removed) % 2 == 0 ? 1 : -1;
}

std::vector<SignViolation> sign_violations(const std::vector<Integer>& minors, std::size_t n) {
  std::vector<SignViolation> out;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  for (SubsetMask s = 0; s < full; ++s) {
    const Integer& d = minors[s];
    int want = required_sign(n, static_cast<std::size_t>(popcount(s)));
    if (d != 0 && sign(d) != want) out.push_back({s, d, want});
  }
  return out;
}

std::string describe(const WellPresentedReport& r) {
  std::ostringstream os;
  os << "map is not well-presented:";
  for (const auto& v : r.projection_violations) {
    os << " projection fails for I=" << subset_label(v.subset) << " row " << v.row + 1 << ";";
  }
  for (const auto& v : r.sign_violations) {
    os << " det M^" << subset_label(v.subset) << " = " << v.det.str() << " needs sign "
       << (v.required_sign > 0 ? "+" : "-") << ";";
  }
  return os.str();
}

void require_well_presented(const ExponentMatrix& m) {
  auto r = check_well_presented(m);
  if (!r.ok) throw NotWellPresented(describe(r));
}

MultiPoly x_product(const RingPtr& ring, SubsetMask kept) {
  Exponent e(ring->size(), 0);
  for (auto k : subset_members(kept)) e[x_var(k)] = 1;
  return MultiPoly::monomial(ring, std::move(e), Rational(1));
}

std::vector<std::size_t> x_vars(std::size_t n) {
  std::vector<std::size_t> v;
  for (std::size_t j = 0; j < n; ++j) v.push_back(x_var(j));
  return v;
}

}  // namespace

WellPresentedReport check_well_presented(const ExponentMatrix& m) {
  require_square(m);
  const std::size_t n = m.n();
  if (n > 30) throw ValidationError("matrix too large for the subset sweep");
  WellPresentedReport r;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  auto points = m.points();

  for (SubsetMask s = 1; s < full; ++s) {
    auto removed = subset_members(s);
    std::vector<LatticePoint> gens;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(s >> k & 1u)) gens.push_back(project(points[k], removed));
    }
    for (auto i : removed) {
      if (!outer_region_contains(gens, project(points[i], removed))) {
        r.projection_violations.push_back({s, i});
      }
    }
  }

  r.sign_violations = sign_violations(kernels::parallel::principal_minors(to_int_matrix(m.rows())), n);
  r.translated_sign_violations =
      sign_violations(kernels::parallel::principal_minors(translated_int_matrix(m)), n);
  r.ok = r.projection_violations.empty() && r.sign_violations.empty();
  return r;
}

std::vector<NewtonSimplex> newton_simplices(const ExponentMatrix& m) {
  require_square(m);
  const std::size_t n = m.n();
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  auto points = m.points();
  std::vector<NewtonSimplex> out;
  for (SubsetMask s = 0; s < full; ++s) {
    NewtonSimplex ns;
    ns.subset = s;
    ns.simplex.finite_vertices.push_back(LatticePoint(std::vector<std::int64_t>(n, 0)));
    for (std::size_t k = 0; k < n; ++k) {
      if (s >> k & 1u) {
        ns.simplex.infinite_directions.push_back(k);
      } else {
        ns.simplex.finite_vertices.push_back(points[k]);
      }
    }
    ns.hvol = hvol(ns.simplex);
    ns.degenerate = ns.hvol == 0;
    out.push_back(std::move(ns));
  }
  return out;
}

std::vector<NewtonSimplex> newton_decomposition(const ExponentMatrix& m) {
  require_well_presented(m);
  return newton_simplices(m);
}

MultiPoly charpoly_by_principal_minors(const ExponentMatrix& m, const RingPtr& ring,
                                       bool parallel) {
  require_square(m);
  const std::size_t n = m.n();
  auto im = to_int_matrix(m.rows());
  auto minors = parallel ? kernels::parallel::principal_minors(im)
                         : kernels::serial::principal_minors(im);
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  MultiPoly out(ring);
  for (SubsetMask s = 0; s <= full; ++s) {
    if (minors[s] == 0) continue;
    int removed = popcount(s);
    Rational c(minors[s]);
    if ((n - static_cast<std::size_t>(removed)) % 2) c = -c;
    out += x_product(ring, full & ~s) * MultiPoly::variable(ring, t_var(*ring), removed) * c;
  }
  return out;
}

MultiPoly prechar_class(const ExponentMatrix& m, const GeometricSetup& setup, bool force) {
  require_square(m);
  if (!force) require_well_presented(m);
  if (m.n() != setup.n()) throw ValidationError("matrix and setup disagree on n");
  validate_isobaric(m, setup);
  const std::size_t n = m.n();
  auto ring = make_problem_ring(n);
  const int dim = static_cast<int>(setup.dim());
  const auto xs = x_vars(n);

  // Minor sum at t = 1.
  MultiPoly minor_sum = charpoly_by_principal_minors(m, ring).substitute(
      {{t_var(*ring), MultiPoly(ring, Rational(1))}});

  MultiPoly c1(ring);
  for (std::size_t j = 0; j < n; ++j) {
    c1 += MultiPoly::variable(ring, x_var(j)) * Rational(m(m.pivot(), j));
  }
  MultiPoly inverse(ring, Rational(1));
  MultiPoly power(ring, Rational(1));
  for (int k = 1; k <= dim; ++k) {
    power = (power * c1).truncated(dim, xs);
    inverse += power;
  }
  return (inverse * minor_sum.truncated(dim, xs)).truncated(dim, xs);
}

MultidegreePolynomial prechar_multidegrees(const ExponentMatrix& m, const GeometricSetup& setup,
                                           bool force) {
  return evaluate_power_class(prechar_class(m, setup, force), setup);
}

PolyMatrix build_M(const ExponentMatrix& m, const RingPtr& ring) {
  require_square(m);
  const std::size_t n = m.n();
  PolyMatrix out(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = MultiPoly::variable(ring, x_var(j)) * Rational(m(i, j));
    }
  }
  return out;
}

PolyMatrix build_Mprime(const ExponentMatrix& m, const RingPtr& ring) {
  require_square(m);
  const std::size_t n = m.n(), p = m.pivot();
  PolyMatrix out(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = MultiPoly::variable(ring, x_var(j)) * Rational(m(i, j) - m(p, j));
    }
  }
  return out;
}

PolyMatrix build_Mdoubleprime(const ExponentMatrix& m, const RingPtr& ring) {
  return build_Mprime(m, ring).principal_submatrix({m.pivot()});
}

CharpolyResult multidegree_via_charpoly(const ExponentMatrix& m, const GeometricSetup& setup,
                                        bool force) {
  require_square(m);
  if (m.n() != setup.n()) throw ValidationError("matrix and setup disagree on n");
  validate_isobaric(m, setup);
  const std::size_t n = m.n();
  auto ring = make_problem_ring(n);
  CharpolyResult out{MultidegreePolynomial{}, MultiPoly(ring), false, {}};
  auto wp = check_well_presented(m);
  if (!wp.ok) {
    if (!force) throw NotWellPresented(describe(wp));
    out.forced = true;
    out.warning = "FORCED: " + describe(wp) + " The result need not be the multidegree polynomial.";
  }
  out.charpoly = charpoly(build_Mprime(m, ring), t_var(*ring));

  // Coefficient of t^{n-l} is the codimension-l part of G.
  MultiPoly g(ring);
  for (std::size_t l = 0; l <= std::min(n, setup.dim()); ++l) {
    g += out.charpoly.coefficient_of(t_var(*ring), static_cast<int>(n - l));
  }
  out.gamma = evaluate_power_class(g, setup);
  return out;
}

ExponentMatrix homogenize_torus(const TorusMap& map) {
  const std::size_t k = map.size();
  if (k == 0) throw ValidationError("torus map needs a nonempty exponent matrix");
  for (const auto& row : map.a) {
    if (row.size() != k) throw NonSquareError("torus exponent matrix must be square");
  }
  const std::size_t n = k + 1;
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      rows[i][j] = map.a[i][j];
      sum += map.a[i][j];
    }
    rows[i][k] = -sum;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t lo = rows[0][j];
    for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, rows[i][j]);
    for (std::size_t i = 0; i < n; ++i) rows[i][j] -= lo;
  }
  return ExponentMatrix(std::move(rows));
}

MultidegreePolynomial torus_multidegrees(const TorusMap& map, bool force) {
  auto hom = homogenize_torus(map);
  if (!force) require_well_presented(hom);
  auto ring = std::make_shared<const Ring>(std::vector<std::string>{"t"});
  const std::size_t k = map.size();
  PolyMatrix m(ring, k);
  MultiPoly t = MultiPoly::variable(ring, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = t * Rational(-map.a[i][j]);
      if (i == j) m(i, j) += MultiPoly(ring, Rational(1));
    }
  }
  MultiPoly d = det(m);
  std::vector<Integer> coeffs(k + 1, Integer(0));
  for (std::size_t l = 0; l <= k; ++l) {
    Rational c = d.coefficient({static_cast<int>(l)});
    coeffs[l] = numerator_of(c);
  }
  return MultidegreePolynomial(std::move(coeffs));
}

BasrelCheck basrel_identity_check(const ExponentMatrix& m, std::size_t samples,
                                  std::uint64_t seed) {
  require_square(m);
  const std::size_t n = m.n(), p = m.pivot();
  std::vector<std::vector<Rational>> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p) continue;
    std::vector<Rational> row;
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(m(i, j) - m(p, j));
    constraints.push_back(std::move(row));
  }
  auto basis = null_space(constraints, n);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  auto ring = std::make_shared<const Ring>(std::vector<std::string>{"t"});
  MultiPoly t = MultiPoly::variable(ring, 0);

  BasrelCheck out;
  while (out.samples < samples) {
    std::vector<Rational> x(n, Rational(0));
    for (const auto& b : basis) {
      Rational c(num(rng), den(rng));
      for (std::size_t j = 0; j < n; ++j) x[j] += c * b[j];
    }
    if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) continue;
    ++out.samples;

    PolyMatrix mx(ring, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mx(i, j) = MultiPoly(ring, Rational(m(i, j)) * x[j]);
    }
    Rational c1 = 0;
    for (std::size_t j = 0; j < n; ++j) c1 += Rational(m(p, j)) * x[j];
    PolyMatrix mpp(ring, n - 1);
    for (std::size_t i = 0, a = 0; i < n; ++i) {
      if (i == p) continue;
      for (std::size_t j = 0, b = 0; j < n; ++j) {
        if (j == p) continue;
        mpp(a, b++) = MultiPoly(ring, Rational(m(i, j) - m(p, j)) * x[j]);
      }
      ++a;
    }
    MultiPoly lhs = charpoly(mx, 0);
    MultiPoly rhs = (t - MultiPoly(ring, c1)) * charpoly(mpp, 0);
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "X=(";
      for (std::size_t j = 0; j < n; ++j) os << (j ? "," : "") << to_string(x[j]);
      os << "): " << lhs.to_string() << " != " << rhs.to_string();
      out.failures.push_back(os.str());
      out.ok = false;
    }
  }
  return out;
}

}  // namespace multideg
