#pragma once

/**
 * @file polyhedron.hpp
 * @brief Exact convex polyhedra in the plane (possibly unbounded).
 *
 * A Polyhedron2 carries both descriptions: the H-representation (inward
 * half-planes <mu, X> >= lambda) and the V-representation (vertices plus
 * recession rays). Everything is computed with exact QuadScalar arithmetic.
 *
 * Vertex enumeration is the O(n^2) pairwise-intersection method, which is
 * exact and sufficient in two dimensions.
 */

#include <optional>
#include <vector>

#include "quasitoric/linalg.hpp"

namespace quasitoric {

/// The constraint <mu, normal> >= offset; normal points into the region.
struct HalfPlane {
  Vec2 normal;
  QuadScalar offset;

  bool satisfied_by(const Vec2& mu) const { return dot(mu, normal) >= offset; }
  bool tight_at(const Vec2& mu) const { return dot(mu, normal) == offset; }
  // Same constraint up to a positive rescaling of (normal, offset).
  bool equivalent_to(const HalfPlane& o) const;

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

class Polyhedron2 {
 public:
  // Use vrep_from_hrep / intersect_halfplane to build one.
  Polyhedron2() = default;

  const std::vector<HalfPlane>& hrep() const { return hrep_; }
  // Canonical order: counterclockwise, starting at the lexicographically
  // smallest vertex.
  const std::vector<Vec2>& vertices() const { return vertices_; }
  // Extreme rays of the recession cone, each scaled so its first nonzero
  // coordinate is +-1, sorted by angle.
  const std::vector<Vec2>& rays() const { return rays_; }

  bool bounded() const { return rays_.empty(); }
  bool simple() const { return simple_; }
  // Dimension of the affine hull (0, 1 or 2).
  int dimension() const { return dimension_; }

  // Indices into hrep() of the constraints tight at vertex i.
  std::vector<int> facets_at(std::size_t vertex) const;

  bool contains(const Vec2& mu) const;

  // Same vertices and rays (hrep order is not compared).
  friend bool same_vrep(const Polyhedron2& a, const Polyhedron2& b) {
    return a.vertices_ == b.vertices_ && a.rays_ == b.rays_;
  }

 private:
  friend Polyhedron2 vrep_from_hrep(const std::vector<HalfPlane>& hrep);

  std::vector<HalfPlane> hrep_;
  std::vector<Vec2> vertices_;
  std::vector<Vec2> rays_;
  bool simple_ = false;
  int dimension_ = 0;
};

// Throws InfeasibleError for an empty region and NotPointedError for a
// nonempty region without vertices. Redundant and duplicate constraints are
// dropped; the survivors keep their input order and their scaling.
Polyhedron2 vrep_from_hrep(const std::vector<HalfPlane>& hrep);

// Facet description of the full-dimensional polyhedron with the given
// vertices (counterclockwise) and recession rays. Normals are scaled so
// their first nonzero coordinate is +-1.
std::vector<HalfPlane> hrep_from_vrep(const std::vector<Vec2>& vertices, const std::vector<Vec2>& rays);

bool contains(const Polyhedron2& p, const Vec2& mu);

// P intersected with h; nullopt when the intersection is empty.
std::optional<Polyhedron2> intersect_halfplane(const Polyhedron2& p, const HalfPlane& h);

// A point of the region described by hrep, or nullopt if it is empty. For
// bounded regions this is the centroid of the vertices.
std::optional<Vec2> feasible_point(const std::vector<HalfPlane>& hrep);

// Shoelace area of a bounded polyhedron.
QuadScalar area(const Polyhedron2& p);

// Scale v so its first nonzero coordinate is +-1.
Vec2 normalize_direction(const Vec2& v);

}  // namespace quasitoric
