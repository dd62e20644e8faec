#pragma once

#include "multideg/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace multideg {

/// Integer point in Z^n. Translated exponent vectors may be negative.
struct LatticePoint {
  std::vector<std::int64_t> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;

  LatticePoint operator-(const LatticePoint& other) const;
  std::string to_string() const;
};

/// Generators of conv(points) + nonnegative orthant, with vertex flags.
struct NewtonOuterRegion {
  std::vector<LatticePoint> generators;
  std::size_t dim = 0;
  std::vector<bool> vertex_flags;

  static NewtonOuterRegion from_points(std::vector<LatticePoint> points);
  std::vector<LatticePoint> vertices() const;
};

/// Convex span of finite vertices and positive coordinate directions.
struct GeneralizedSimplex {
  std::vector<LatticePoint> finite_vertices;
  std::vector<std::size_t> infinite_directions;  // sorted, 0-based coordinates

  std::size_t dim() const;
  bool well_formed() const;
};

struct Triangulation {
  std::vector<GeneralizedSimplex> simplices;
};

std::vector<LatticePoint> translate_by_pivot(const std::vector<LatticePoint>& points,
                                             std::size_t pivot);

/// Flag i is false iff points[i] lies in conv(other distinct points) + orthant.
/// Of several equal points only the first can be flagged.
std::vector<bool> region_vertices(const std::vector<LatticePoint>& points);

/// Drop the coordinates listed in `removed` (0-based), keeping order.
std::vector<LatticePoint> project(const std::vector<LatticePoint>& points,
                                  const std::vector<std::size_t>& removed);
LatticePoint project(const LatticePoint& p, const std::vector<std::size_t>& removed);

/// p in conv(generators) + nonnegative orthant, decided by exact LP.
bool outer_region_contains(const std::vector<LatticePoint>& generators, const LatticePoint& p);
bool outer_region_contains(const std::vector<LatticePoint>& generators,
                           const std::vector<Rational>& p);

/// Order in which generators are placed. Indices 0..V-1 refer to the region
/// vertices (in input order), V..V+n-1 to the rays e_1..e_n.
struct InsertionOrder {
  std::vector<std::size_t> sequence;

  static InsertionOrder vertices_then_rays(std::size_t vertex_count, std::size_t n);
  static InsertionOrder rays_then_vertices(std::size_t vertex_count, std::size_t n);
  static InsertionOrder reversed(std::size_t vertex_count, std::size_t n);
};

/// Placing triangulation of the cone over {(v,1)} and {(e_j,0)}; every
/// full-dimensional simplicial cone becomes one generalized simplex.
Triangulation triangulate(const NewtonOuterRegion& region);
Triangulation triangulate(const NewtonOuterRegion& region, const InsertionOrder& order);

std::size_t rank(const GeneralizedSimplex& t);
/// Lattice-normalized volume of the projection along the infinite directions.
Integer hvol(const GeneralizedSimplex& t);

/// One simplex per line: "finite=[(..),(..)] infinite=[2,3] rank=1 hvol=3".
/// Infinite directions are printed 1-based.
std::string dump(const GeneralizedSimplex& t);

}  // namespace multideg
