#include "multideg/engine.hpp"
#include "multideg/errors.hpp"
#include "multideg/kernels.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace multideg;

namespace {

std::vector<Integer> ints(std::initializer_list<int> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

const std::vector<std::vector<std::int64_t>> kTria{{0, 1, 2}, {2, 0, 2}, {3, 1, 1}};

ExponentMatrix cremona(std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 1));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 0;
  return ExponentMatrix(rows);
}

MultidegreePolynomial binomial_row(unsigned n) {
  std::vector<Integer> c;
  for (unsigned k = 0; k <= n; ++k) c.push_back(oracle::binomial(n, k));
  return MultidegreePolynomial(c);
}

std::vector<InsertionOrder> two_orders(const ExponentMatrix& m) {
  auto nt = newton_triangulation(m);
  const std::size_t v = nt.region.vertices().size(), n = m.n();
  return {InsertionOrder::vertices_then_rays(v, n), InsertionOrder::rays_then_vertices(v, n)};
}

// s(S, V) for a complete intersection of the divisors D_i: prod D_i / (1 + D_i).
MultiPoly lci_segre(const RingPtr& ring, const std::vector<MultiPoly>& divisors, int dim) {
  std::vector<std::size_t> xs;
  for (std::size_t j = 0; j + 2 < ring->size(); ++j) xs.push_back(j);
  MultiPoly s(ring, 1);
  for (const auto& d : divisors) {
    MultiPoly inv(ring, 1), power(ring, 1);
    for (int k = 1; k <= dim; ++k) {
      power = (power * -d).truncated(dim, xs);
      inv += power;
    }
    s = (s * d * inv).truncated(dim, xs);
  }
  return s;
}

}  // namespace

TEST(Engine, TriaMultidegrees) {
  ExponentMatrix m(kTria);
  auto setup = projective_space_setup(2, ints({1, 2, 3}));
  EXPECT_EQ(multidegree_polynomial(m, setup).to_string(), "1 + 5*t + 6*t^2");
  auto r = report(m, setup);
  EXPECT_EQ(r.line_bundle_degree, 8);
  ASSERT_TRUE(r.self_intersection.has_value());
  EXPECT_EQ(*r.self_intersection, 64);
  EXPECT_EQ(*r.base_locus_contribution, 58);
  EXPECT_TRUE(r.dominant);
  EXPECT_EQ(r.pivot, 2u);
  EXPECT_EQ(r.translated_points[0], LatticePoint({-3, 0, 1}));
  EXPECT_FALSE(r.hypothesis_note.empty());
  EXPECT_EQ(evaluate_degree(r.multidegree_class, setup), r.gamma);
}

TEST(Engine, TriaTriangulationContributions) {
  ExponentMatrix m(kTria);
  auto setup = projective_space_setup(2, ints({1, 2, 3}));
  auto r = report(m, setup);
  std::vector<std::pair<std::size_t, Integer>> contributions;
  std::vector<Integer> per_rank(3, 0);
  for (const auto& s : r.simplices) {
    contributions.emplace_back(s.rank, s.hvol * s.degree);
    per_rank[s.rank] += s.hvol * s.degree;
  }
  std::sort(contributions.begin(), contributions.end());
  std::vector<std::pair<std::size_t, Integer>> expected{{0, 1}, {1, 2}, {1, 3}, {2, 6}};
  EXPECT_EQ(contributions, expected);
  EXPECT_EQ(per_rank, ints({1, 5, 6}));
}

TEST(Engine, AlternativeTriaTriangulationData) {
  // C + all rays, AC + a2 a3, AB + a1 a3, ABC + a1.
  LatticePoint a({-3, 0, 1}), b({-1, -1, 1}), c({0, 0, 0});
  std::vector<GeneralizedSimplex> cells{
      {{c}, {0, 1, 2}}, {{a, c}, {1, 2}}, {{a, b}, {0, 2}}, {{a, b, c}, {0}}};
  auto setup = projective_space_setup(2, ints({1, 2, 3}));
  std::vector<std::tuple<std::size_t, Integer, Integer>> data;
  for (const auto& t : cells) data.emplace_back(rank(t), hvol(t), simplex_degree(t, setup));
  std::vector<std::tuple<std::size_t, Integer, Integer>> expected{
      {0, 1, 1}, {1, 3, 1}, {1, 1, 2}, {2, 1, 6}};
  EXPECT_EQ(data, expected);

  // It tiles the same region: every generic point lies in exactly one cell
  // iff it lies in the region.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-5000, 3000);
  std::vector<LatticePoint> pts{a, b, c};
  for (int s = 0; s < 300; ++s) {
    std::vector<Rational> p{Rational(num(rng), 1009), Rational(num(rng), 1009),
                            Rational(num(rng), 1009)};
    int interior = 0, boundary = 0;
    for (const auto& t : cells) {
      auto k = oracle::cell_contains(t, p);
      interior += k == oracle::Containment::Interior;
      boundary += k == oracle::Containment::Boundary;
    }
    if (boundary) continue;
    EXPECT_EQ(interior, outer_region_contains(pts, p) ? 1 : 0);
  }

  // Its closed-form sum agrees with the engine's symbolic integral.
  auto ring = make_problem_ring(3);
  std::vector<RationalExpression> terms;
  for (const auto& t : cells) terms.push_back(kernels::simplex_integral_term(t, ring, 2));
  EXPECT_EQ(expr_sum(terms), symbolic_integral(ExponentMatrix(kTria), setup));
}

TEST(Engine, TriaSymbolicIntegral) {
  ExponentMatrix m(kTria);
  auto setup = projective_space_setup(2, ints({1, 2, 3}));
  auto e = symbolic_integral(m, setup);
  auto ring = e.ring();
  // Integrating the rank-0 orthant at C, then the strips, by hand.
  RationalExpression expected(parse_poly(ring, "h^2*(h + X3*t)*(h + (X3 - X1)*t)"),
                              {parse_poly(ring, "h + (X3 - 3*X1)*t"),
                               parse_poly(ring, "h + (X3 - X1 - X2)*t")});
  EXPECT_EQ(e, expected);
  EXPECT_EQ(e.to_string(),
            "(X3^2*h^2*t^2 - X1*X3*h^2*t^2 + 2*X3*h^3*t - X1*h^3*t + h^4)/"
            "((X3*t - 3*X1*t + h)*(X3*t - X2*t - X1*t + h))");
  EXPECT_EQ(gamma_from_symbolic(e, setup).to_string(), "1 + 5*t + 6*t^2");
  for (const auto& order : two_orders(m)) {
    EngineOptions o;
    o.order = order;
    EXPECT_EQ(symbolic_integral(m, setup, o), e);
  }
}

TEST(Engine, CremonaGivesBinomials) {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto setup = projective_space_setup(n - 1, std::vector<Integer>(n, 1));
    EXPECT_EQ(multidegree_polynomial(cremona(n), setup), binomial_row(n - 1)) << "n=" << n;
  }
}

TEST(Engine, PowerMapGivesPowers) {
  for (int d = 1; d <= 4; ++d) {
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i) rows[i][i] = d;
      auto setup = projective_space_setup(n - 1, std::vector<Integer>(n, 1));
      std::vector<Integer> expected;
      Integer p = 1;
      for (std::size_t l = 0; l < n; ++l, p *= d) expected.push_back(p);
      EXPECT_EQ(multidegree_polynomial(ExponentMatrix(rows), setup), MultidegreePolynomial(expected));
    }
  }
}

TEST(Engine, ConstantMapHasOnlyDegreeOfVariety) {
  // All rows equal: the map is constant.
  ExponentMatrix m({{1, 2}, {1, 2}, {1, 2}});
  auto setup = projective_space_setup(2, ints({2, 1}));
  auto r = report(m, setup);
  EXPECT_EQ(r.gamma.to_string(), "1");
  EXPECT_FALSE(r.dominant);
  EXPECT_EQ(r.vertex_flags, (std::vector<bool>{true, false, false}));
}

TEST(Engine, PivotAndOrderInvariance) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::size_t dim = 1 + trial % (n - 1 + 1);
    if (dim > n) dim = n;
    auto inst = oracle::random_isobaric(rng, n, dim, 2 + trial % 3);
    auto setup = projective_space_setup(inst.dim, inst.degrees);
    ExponentMatrix base(inst.rows);
    const auto gamma = multidegree_polynomial(base, setup);
    for (std::size_t p = 0; p < base.row_count(); ++p) {
      auto m = base.with_pivot(p);
      EXPECT_EQ(multidegree_polynomial(m, setup), gamma) << "pivot " << p;
      for (const auto& order : two_orders(m)) {
        EngineOptions o;
        o.order = order;
        auto g = multidegree_class(m, setup, o);
        EXPECT_EQ(evaluate_degree(g, setup), gamma);
        EXPECT_EQ(evaluate_total_degree(g, setup),
                  evaluate_total_degree(multidegree_class(base, setup), setup));
      }
    }
  }
}

TEST(Engine, TriangulationAndSymbolicRoutesAgree) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::size_t dim = 1 + trial % n;
    auto inst = oracle::random_isobaric(rng, n, dim, 2 + trial % 4);
    auto setup = projective_space_setup(inst.dim, inst.degrees);
    ExponentMatrix m(inst.rows);
    auto gamma = multidegree_polynomial(m, setup);
    EXPECT_EQ(gamma_from_symbolic(symbolic_integral(m, setup), setup), gamma) << "trial " << trial;
    EXPECT_EQ(gamma[0], 1);
    for (const auto& c : gamma.coefficients()) EXPECT_GE(c, 0);
  }
}

TEST(Engine, TableSetupMatchingProjectivePlane) {
  ExponentMatrix m(kTria);
  auto table = table_setup(2, 1, ints({1, 2, 3}), {{{0, 1}, 2}, {{0, 2}, 3}, {{1, 2}, 6}});
  EXPECT_EQ(multidegree_polynomial(m, table).to_string(), "1 + 5*t + 6*t^2");
  EXPECT_THROW(gamma_from_symbolic(symbolic_integral(m, table), table), MethodInapplicable);
  auto defaulted = table_setup(2, 1, ints({1, 2, 3}), {});
  auto r = report(m, defaulted);
  EXPECT_EQ(r.gamma.to_string(), "1 + 5*t + 6*t^2");
  EXPECT_EQ(r.defaulted_subsets.size(), 3u);
}

TEST(Engine, TableSetupOnQuadricSurface) {
  // V a smooth quadric surface, X1 and X2 hyperplane sections.
  auto setup = table_setup(2, 2, ints({2, 2}), {{{0, 1}, 2}});
  ExponentMatrix m({{1, 0}, {0, 1}});
  // Projection from a line: gamma = 2 + 2t + 0.
  auto r = report(m, setup);
  EXPECT_EQ(r.gamma[0], 2);
  EXPECT_EQ(r.gamma[1], 2);
  EXPECT_EQ(r.gamma[2], 0);
  EXPECT_EQ(*r.base_locus_contribution, 2);
}

TEST(Engine, RejectsMismatchedInput) {
  ExponentMatrix m(kTria);
  EXPECT_THROW(multidegree_polynomial(m, projective_space_setup(2, ints({1, 2}))), ValidationError);
  EXPECT_THROW(multidegree_polynomial(m, projective_space_setup(2, ints({1, 1, 1}))), IsobaricError);
}

TEST(Segre, SquaresOfTwoLines) {
  ExponentMatrix m({{2, 0}, {0, 2}});
  auto setup = projective_space_setup(2, ints({1, 1}));
  auto s = segre_class(m, setup);
  auto ring = s.segre.series.ring();
  auto x1 = MultiPoly::variable(ring, x_var(0)), x2 = MultiPoly::variable(ring, x_var(1));
  auto expected = lci_segre(ring, {x1 * Rational(2), x2 * Rational(2)}, 2);
  EXPECT_EQ(expected, parse_poly(ring, "4*X1*X2"));
  EXPECT_EQ(s.segre.series, expected);
  EXPECT_EQ(s.complement.series, MultiPoly(ring, 1) - expected);
  EXPECT_EQ(segre_degrees(s.segre, setup).to_string(), "4*t^2");
}

TEST(Segre, CompleteIntersectionsMatchProductFormula) {
  struct Case {
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<Integer> degrees;
    std::size_t dim;
  };
  std::vector<Case> cases{
      {{{2, 0}, {0, 3}}, ints({3, 2}), 3},
      {{{1, 0}, {0, 1}}, ints({1, 1}), 2},
      {{{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}, ints({2, 6, 3}), 4},
  };
  for (const auto& c : cases) {
    auto setup = projective_space_setup(c.dim, c.degrees);
    auto s = segre_class(ExponentMatrix(c.rows), setup);
    auto ring = s.segre.series.ring();
    std::vector<MultiPoly> divisors;
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
      divisors.push_back(MultiPoly::variable(ring, x_var(i)) * Rational(c.rows[i][i]));
    }
    EXPECT_EQ(s.segre.series, lci_segre(ring, divisors, static_cast<int>(c.dim)));
  }
}

TEST(Engine, SerialAndParallelKernelsAgree) {
  ExponentMatrix m(kTria);
  auto setup = projective_space_setup(2, ints({1, 2, 3}));
  EngineOptions serial;
  serial.parallel = false;
  EXPECT_EQ(symbolic_integral(m, setup, serial), symbolic_integral(m, setup));
  EXPECT_EQ(multidegree_class(m, setup, serial), multidegree_class(m, setup));
  EXPECT_EQ(segre_class(m, setup, serial).segre.series, segre_class(m, setup).segre.series);
}
