#include "multideg/engine.hpp"

#include "multideg/errors.hpp"
#include "multideg/kernels.hpp"

#include <algorithm>

namespace multideg {

namespace {

SubsetMask finite_coordinates(const GeneralizedSimplex& t) {
  SubsetMask s = 0;
  for (std::size_t j = 0; j < t.dim(); ++j) s |= SubsetMask{1} << j;
  for (auto j : t.infinite_directions) s &= ~(SubsetMask{1} << j);
  return s;
}

void check_setup(const ExponentMatrix& m, const GeometricSetup& setup) {
  if (m.n() != setup.n()) {
    throw ValidationError("exponent matrix has " + std::to_string(m.n()) + " columns but " +
                          std::to_string(setup.n()) + " hypersurface degrees are given");
  }
  validate_isobaric(m, setup);
}

NewtonTriangulation triangulate_points(std::vector<LatticePoint> points,
                                       const EngineOptions& options) {
  NewtonTriangulation out;
  out.region.dim = points.front().dim();
  out.region.vertex_flags = options.parallel ? kernels::parallel::vertex_flags(points)
                                             : kernels::serial::vertex_flags(points);
  out.region.generators = std::move(points);
  out.triangulation = options.order ? triangulate(out.region, *options.order)
                                    : triangulate(out.region);
  return out;
}

}  // namespace

NewtonTriangulation newton_triangulation(const ExponentMatrix& m, const EngineOptions& options) {
  return triangulate_points(m.translated_points(), options);
}

Integer simplex_degree(const GeneralizedSimplex& t, const GeometricSetup& setup) {
  if (rank(t) > setup.dim()) return 0;
  return setup.intersection(finite_coordinates(t));
}

GradedClass multidegree_class(const ExponentMatrix& m, const GeometricSetup& setup,
                              const EngineOptions& options) {
  check_setup(m, setup);
  auto nt = newton_triangulation(m, options);
  GradedClass g(setup.dim());
  for (const auto& t : nt.triangulation.simplices) {
    g.add(finite_coordinates(t), 0, Rational(hvol(t)));
  }
  return g;
}

MultidegreePolynomial multidegree_polynomial(const ExponentMatrix& m, const GeometricSetup& setup,
                                             const EngineOptions& options) {
  return evaluate_degree(multidegree_class(m, setup, options), setup);
}

RationalExpression symbolic_integral(const ExponentMatrix& m, const GeometricSetup& setup,
                                     const EngineOptions& options) {
  check_setup(m, setup);
  auto nt = newton_triangulation(m, options);
  auto ring = make_problem_ring(m.n());
  auto terms = options.parallel
                   ? kernels::parallel::integral_terms(nt.triangulation.simplices, ring, setup.dim())
                   : kernels::serial::integral_terms(nt.triangulation.simplices, ring, setup.dim());
  return expr_sum(terms);
}

MultidegreePolynomial gamma_from_symbolic(const RationalExpression& e,
                                          const GeometricSetup& setup) {
  if (!setup.classes_proportional_to_h()) {
    throw MethodInapplicable(
        "substituting X_j -> d_j h requires hypersurface classes proportional to h (Pn setup)");
  }
  const RingPtr& ring = e.ring();
  if (ring->size() != setup.n() + 2) throw ValidationError("expression ring does not match setup");
  const std::size_t h = h_var(*ring), t = t_var(*ring);
  std::map<std::size_t, MultiPoly> assignment;
  for (std::size_t j = 0; j < setup.n(); ++j) {
    assignment.emplace(x_var(j), MultiPoly::variable(ring, h) * Rational(setup.degrees()[j]));
  }
  RationalExpression sub = e.substitute(assignment);
  if (!sub.is_polynomial()) {
    throw InvariantBreach("denominator survives X_j -> d_j h substitution: " + sub.to_string());
  }
  const int dim = static_cast<int>(setup.dim());
  std::vector<Rational> gamma(setup.dim() + 1, Rational(0));
  for (const auto& [exp, c] : sub.numerator().terms()) {
    int l = exp[t];
    if (l > dim) continue;  // codimension above dim V
    if (exp[h] != dim) {
      throw InvariantBreach("t^" + std::to_string(l) + " coefficient is not a multiple of h^" +
                            std::to_string(dim));
    }
    gamma[static_cast<std::size_t>(l)] += c * Rational(setup.degree_of_variety());
  }
  return MultidegreePolynomial::from_rationals(gamma);
}

SegreResult segre_class(const ExponentMatrix& m, const GeometricSetup& setup,
                        const EngineOptions& options) {
  check_setup(m, setup);
  auto nt = triangulate_points(m.points(), options);
  auto ring = make_problem_ring(m.n());
  const auto& simplices = nt.triangulation.simplices;
  auto terms = options.parallel ? kernels::parallel::segre_terms(simplices, ring, setup.dim())
                                : kernels::serial::segre_terms(simplices, ring, setup.dim());
  MultiPoly complement(ring);
  for (const auto& p : terms) complement += p;
  SegreResult out{{MultiPoly(ring, Rational(1)) - complement, setup.dim()},
                  {complement, setup.dim()}};
  return out;
}

MultidegreePolynomial segre_degrees(const SegreSeries& s, const GeometricSetup& setup) {
  if (!setup.classes_proportional_to_h()) {
    throw MethodInapplicable("Segre degrees need the Pn intersection model");
  }
  // Signed series coefficients may be negative; evaluate term by term.
  std::vector<Integer> out(setup.dim() + 1, Integer(0));
  const std::size_t n = setup.n();
  for (const auto& [e, c] : s.series.terms()) {
    std::vector<int> x(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    int l = total_degree(e);
    if (l > static_cast<int>(setup.dim())) continue;
    Rational v = c * Rational(setup.intersection(x));
    if (!is_integer(v)) throw InvariantBreach("non-integral Segre degree");
    out[static_cast<std::size_t>(l)] += numerator_of(v);
  }
  return MultidegreePolynomial(std::move(out));
}

MultidegreeReport report(const ExponentMatrix& m, const GeometricSetup& setup,
                         const EngineOptions& options) {
  check_setup(m, setup);
  MultidegreeReport r;
  auto nt = newton_triangulation(m, options);
  r.pivot = m.pivot();
  r.translated_points = nt.region.generators;
  r.vertex_flags = nt.region.vertex_flags;
  r.multidegree_class = GradedClass(setup.dim());
  for (const auto& t : nt.triangulation.simplices) {
    SimplexRecord rec{t, rank(t), hvol(t), simplex_degree(t, setup)};
    r.multidegree_class.add(finite_coordinates(t), 0, Rational(rec.hvol));
    r.simplices.push_back(std::move(rec));
  }
  r.gamma = evaluate_degree(r.multidegree_class, setup);
  r.line_bundle_degree = validate_isobaric(m, setup);

  auto ring = make_problem_ring(m.n());
  MultiPoly c1(ring);
  for (std::size_t j = 0; j < m.n(); ++j) {
    c1 += MultiPoly::variable(ring, x_var(j)) * Rational(m(m.pivot(), j));
  }
  try {
    auto top = evaluate_power_class(c1.pow(static_cast<unsigned>(setup.dim())), setup);
    r.self_intersection = top[setup.dim()];
    r.base_locus_contribution = *r.self_intersection - r.gamma[setup.dim()];
  } catch (const ValidationError&) {
    // Table setup without the needed power intersection numbers.
  }
  r.dominant = r.gamma[setup.dim()] > 0;
  r.defaulted_subsets = setup.defaulted_subsets();
  r.hypothesis_note =
      "valid under the transversality hypothesis on the hypersurfaces X_j (not verified)";
  return r;
}

}  // namespace multideg
