#include "multideg/geometry.hpp"

#include "multideg/errors.hpp"
#include "multideg/kernels.hpp"
#include "multideg/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace multideg {

LatticePoint LatticePoint::operator-(const LatticePoint& other) const {
  if (dim() != other.dim()) throw ValidationError("lattice points of different dimension");
  LatticePoint out(coords);
  for (std::size_t i = 0; i < dim(); ++i) out.coords[i] -= other.coords[i];
  return out;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ")";
  return os.str();
}

NewtonOuterRegion NewtonOuterRegion::from_points(std::vector<LatticePoint> points) {
  if (points.empty()) throw ValidationError("Newton region needs at least one generator");
  NewtonOuterRegion r;
  r.dim = points.front().dim();
  for (const auto& p : points) {
    if (p.dim() != r.dim) throw ValidationError("generators of different dimension");
  }
  r.vertex_flags = region_vertices(points);
  r.generators = std::move(points);
  return r;
}

std::vector<LatticePoint> NewtonOuterRegion::vertices() const {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (vertex_flags[i]) out.push_back(generators[i]);
  }
  return out;
}

std::size_t GeneralizedSimplex::dim() const {
  return finite_vertices.empty() ? 0 : finite_vertices.front().dim();
}

bool GeneralizedSimplex::well_formed() const {
  if (finite_vertices.empty()) return false;
  std::size_t n = dim();
  for (const auto& v : finite_vertices) {
    if (v.dim() != n) return false;
  }
  auto dirs = infinite_directions;
  std::sort(dirs.begin(), dirs.end());
  if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end()) return false;
  if (!dirs.empty() && dirs.back() >= n) return false;
  return finite_vertices.size() + infinite_directions.size() == n + 1;
}

std::vector<LatticePoint> translate_by_pivot(const std::vector<LatticePoint>& points,
                                             std::size_t pivot) {
  if (pivot >= points.size()) throw ValidationError("pivot index out of range");
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p - points[pivot]);
  return out;
}

std::vector<bool> region_vertices(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw ValidationError("region_vertices of an empty point list");
  return kernels::parallel::vertex_flags(points);
}

LatticePoint project(const LatticePoint& p, const std::vector<std::size_t>& removed) {
  LatticePoint out;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) {
      out.coords.push_back(p[i]);
    }
  }
  return out;
}

std::vector<LatticePoint> project(const std::vector<LatticePoint>& points,
                                  const std::vector<std::size_t>& removed) {
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(project(p, removed));
  return out;
}

bool outer_region_contains(const std::vector<LatticePoint>& generators,
                           const std::vector<Rational>& p) {
  if (generators.empty()) throw ValidationError("outer region needs generators");
  const std::size_t n = p.size();
  const std::size_t m = generators.size();
  for (const auto& g : generators) {
    if (g.dim() != n) throw ValidationError("generator/point dimension mismatch");
  }
  // sum_k lambda_k q_kj + s_j = p_j, sum_k lambda_k = 1, lambda, s >= 0.
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(m + n, Rational(0)));
  std::vector<Rational> b(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < m; ++k) a[j][k] = generators[k][j];
    a[j][m + j] = 1;
    b[j] = p[j];
  }
  for (std::size_t k = 0; k < m; ++k) a[n][k] = 1;
  b[n] = 1;
  return lp::find_feasible(a, b).has_value();
}

bool outer_region_contains(const std::vector<LatticePoint>& generators, const LatticePoint& p) {
  std::vector<Rational> q(p.coords.begin(), p.coords.end());
  return outer_region_contains(generators, q);
}

InsertionOrder InsertionOrder::vertices_then_rays(std::size_t vertex_count, std::size_t n) {
  InsertionOrder o;
  o.sequence.resize(vertex_count + n);
  std::iota(o.sequence.begin(), o.sequence.end(), std::size_t{0});
  return o;
}

InsertionOrder InsertionOrder::rays_then_vertices(std::size_t vertex_count, std::size_t n) {
  InsertionOrder o;
  for (std::size_t j = 0; j < n; ++j) o.sequence.push_back(vertex_count + j);
  for (std::size_t k = 0; k < vertex_count; ++k) o.sequence.push_back(k);
  return o;
}

InsertionOrder InsertionOrder::reversed(std::size_t vertex_count, std::size_t n) {
  InsertionOrder o = vertices_then_rays(vertex_count, n);
  std::reverse(o.sequence.begin(), o.sequence.end());
  return o;
}

namespace {

using Cell = std::vector<std::size_t>;  // sorted generator indices

class PlacingTriangulator {
 public:
  PlacingTriangulator(const std::vector<LatticePoint>& vertices, std::size_t n)
      : vertex_count_(vertices.size()), n_(n) {
    for (const auto& v : vertices) {
      std::vector<Rational> g(v.coords.begin(), v.coords.end());
      g.push_back(1);
      gens_.push_back(std::move(g));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> g(n + 1, Rational(0));
      g[j] = 1;
      gens_.push_back(std::move(g));
    }
  }

  std::vector<Cell> run(const std::vector<std::size_t>& order) {
    for (auto p : order) place(p);
    if (rank_ != n_ + 1) throw InvariantBreach("triangulation is not full-dimensional");
    return cells_;
  }

  bool is_vertex(std::size_t g) const { return g < vertex_count_; }

 private:
  void place(std::size_t p) {
    if (cells_.empty()) {
      cells_.push_back({p});
      rank_ = 1;
      choose_columns();
      return;
    }
    std::vector<std::vector<Rational>> probe;
    for (auto g : cells_.front()) probe.push_back(gens_[g]);
    probe.push_back(gens_[p]);
    if (rational_rank(probe) > rank_) {
      for (auto& c : cells_) {
        c.push_back(p);
        std::sort(c.begin(), c.end());
      }
      ++rank_;
      choose_columns();
      return;
    }

    std::map<Cell, int> facet_count;
    for (const auto& c : cells_) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Cell f = c;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        ++facet_count[f];
      }
    }
    std::vector<Cell> added;
    for (const auto& c : cells_) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Cell f = c;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        if (facet_count[f] != 1) continue;
        int side_p = orientation(f, p);
        int side_q = orientation(f, c[k]);
        if (side_p != 0 && side_p == -side_q) {
          f.push_back(p);
          std::sort(f.begin(), f.end());
          added.push_back(std::move(f));
        }
      }
    }
    cells_.insert(cells_.end(), added.begin(), added.end());
  }

  // Coordinates on which the current linear span projects injectively.
  void choose_columns() {
    const auto& basis = cells_.front();
    cols_.clear();
    for (std::size_t c = 0; c <= n_ && cols_.size() < rank_; ++c) {
      std::vector<std::vector<Rational>> sub;
      for (auto g : basis) {
        std::vector<Rational> row;
        for (auto cc : cols_) row.push_back(gens_[g][cc]);
        row.push_back(gens_[g][c]);
        sub.push_back(std::move(row));
      }
      if (rational_rank(sub) > cols_.size()) cols_.push_back(c);
    }
  }

  int orientation(const Cell& facet, std::size_t x) const {
    std::vector<std::vector<Integer>> m;
    auto row_of = [&](std::size_t g) {
      std::vector<Integer> row;
      for (auto c : cols_) row.push_back(numerator_of(gens_[g][c]));
      return row;
    };
    for (auto g : facet) m.push_back(row_of(g));
    m.push_back(row_of(x));
    return sign(integer_det(std::move(m)));
  }

  std::size_t vertex_count_;
  std::size_t n_;
  std::vector<std::vector<Rational>> gens_;
  std::vector<Cell> cells_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> cols_;
};

}  // namespace

Triangulation triangulate(const NewtonOuterRegion& region) {
  std::size_t v = static_cast<std::size_t>(
      std::count(region.vertex_flags.begin(), region.vertex_flags.end(), true));
  return triangulate(region, InsertionOrder::vertices_then_rays(v, region.dim));
}

Triangulation triangulate(const NewtonOuterRegion& region, const InsertionOrder& order) {
  auto vertices = region.vertices();
  if (vertices.empty()) throw ValidationError("region has no vertices");
  const std::size_t n = region.dim;
  {
    auto sorted = order.sequence;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i || sorted.size() != vertices.size() + n) {
        throw ValidationError("insertion order must be a permutation of all generators");
      }
    }
  }
  PlacingTriangulator placer(vertices, n);
  auto cells = placer.run(order.sequence);

  Triangulation tri;
  for (const auto& c : cells) {
    GeneralizedSimplex s;
    for (auto g : c) {
      if (placer.is_vertex(g)) {
        s.finite_vertices.push_back(vertices[g]);
      } else {
        s.infinite_directions.push_back(g - vertices.size());
      }
    }
    tri.simplices.push_back(std::move(s));
  }
  return tri;
}

std::size_t rank(const GeneralizedSimplex& t) {
  if (t.finite_vertices.empty()) throw ValidationError("simplex without finite vertices");
  return t.finite_vertices.size() - 1;
}

Integer hvol(const GeneralizedSimplex& t) {
  if (!t.well_formed()) throw ValidationError("malformed generalized simplex");
  const auto& v = t.finite_vertices;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < t.dim(); ++j) {
    if (std::find(t.infinite_directions.begin(), t.infinite_directions.end(), j) ==
        t.infinite_directions.end()) {
      kept.push_back(j);
    }
  }
  std::vector<std::vector<Integer>> m;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::vector<Integer> row;
    for (auto j : kept) row.push_back(Integer(v[i][j] - v[0][j]));
    m.push_back(std::move(row));
  }
  return abs(integer_det(std::move(m)));
}

std::string dump(const GeneralizedSimplex& t) {
  std::ostringstream os;
  os << "finite=[";
  for (std::size_t i = 0; i < t.finite_vertices.size(); ++i) {
    os << (i ? "," : "") << t.finite_vertices[i].to_string();
  }
  os << "] infinite=[";
  for (std::size_t i = 0; i < t.infinite_directions.size(); ++i) {
    os << (i ? "," : "") << t.infinite_directions[i] + 1;
  }
  os << "] rank=" << rank(t) << " hvol=" << hvol(t).str();
  return os.str();
}

}  // namespace multideg
