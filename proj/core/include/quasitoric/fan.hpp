#pragma once

// Fans in the plane and the simplicial / rational / smooth / complete
// predicates. Rationality and smoothness are relative to a quasilattice.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasitoric/polyhedron.hpp"
#include "quasitoric/quasilattice.hpp"

namespace quasitoric {

/// Rays (given by generators, not rescaled) and maximal cones stored as
/// index pairs (i, j) with generator i turning counterclockwise into j.
class Fan2 {
 public:
  // Validates: nonzero generators, no two pointing the same way, cones
  // spanned by independent pairs.
  Fan2(std::vector<Vec2> rays, std::vector<std::pair<int, int>> cones);

  const std::vector<Vec2>& rays() const { return rays_; }
  const std::vector<std::pair<int, int>>& cones() const { return cones_; }

  // Provenance from normal_fan: ray i is the normal of facet ray_facet[i],
  // cone k is the normal cone at vertex cone_vertex[k].
  const std::vector<int>& ray_facets() const { return ray_facets_; }
  const std::vector<int>& cone_vertices() const { return cone_vertices_; }

 private:
  friend Fan2 normal_fan(const Polyhedron2& p);

  std::vector<Vec2> rays_;
  std::vector<std::pair<int, int>> cones_;
  std::vector<int> ray_facets_;
  std::vector<int> cone_vertices_;
};

// Rays are the hrep normals in hrep order; one cone per vertex. Throws
// PreconditionError naming the vertex when p is not simple.
Fan2 normal_fan(const Polyhedron2& p);

// Every ray meets Q outside the origin.
bool is_rational(const Fan2& fan, const Quasilattice& q);

/// A maximal cone whose primitive generators do not form a lattice basis.
struct SmoothnessDefect {
  int cone = 0;
  std::optional<Integer> determinant;  // nullopt when a ray is not rational
};

// Throws PreconditionError if lattice is not discrete.
std::vector<SmoothnessDefect> smoothness_defects(const Fan2& fan, const Quasilattice& lattice);
bool is_smooth(const Fan2& fan, const Quasilattice& lattice);

// The maximal cones tile the plane: sorted by angle, consecutive rays are
// exactly the cones, each spanning less than a half-turn.
bool is_complete(const Fan2& fan);

}  // namespace quasitoric
