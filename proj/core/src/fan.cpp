#include "quasitoric/fan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quasitoric/errors.hpp"

namespace quasitoric {

Fan2::Fan2(std::vector<Vec2> rays, std::vector<std::pair<int, int>> cones)
    : rays_(std::move(rays)), cones_(std::move(cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].is_zero()) throw PreconditionError("fan ray generator " + std::to_string(i) + " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (same_direction(rays_[i], rays_[j]))
        throw PreconditionError("fan rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  const int n = static_cast<int>(rays_.size());
  for (auto& [i, j] : cones_) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw PreconditionError("cone index out of range");
    const int orientation = cross(rays_[i], rays_[j]).sign();
    if (orientation == 0) throw PreconditionError("cone generators are linearly dependent");
    if (orientation < 0) std::swap(i, j);
  }
}

Fan2 normal_fan(const Polyhedron2& p) {
  if (p.dimension() != 2) throw PreconditionError("normal fan of a degenerate polyhedron");
  std::vector<std::pair<int, int>> cones;
  std::vector<int> cone_vertices;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const auto facets = p.facets_at(v);
    if (facets.size() != 2) {
      std::ostringstream msg;
      msg << "polyhedron is not simple: vertex " << p.vertices()[v] << " lies on " << facets.size() << " facets";
      throw PreconditionError(msg.str());
    }
    cones.emplace_back(facets[0], facets[1]);
    cone_vertices.push_back(static_cast<int>(v));
  }
  std::vector<Vec2> rays;
  for (const auto& h : p.hrep()) rays.push_back(h.normal);
  Fan2 fan(std::move(rays), std::move(cones));
  fan.ray_facets_.resize(p.hrep().size());
  std::iota(fan.ray_facets_.begin(), fan.ray_facets_.end(), 0);
  fan.cone_vertices_ = std::move(cone_vertices);
  return fan;
}

bool is_rational(const Fan2& fan, const Quasilattice& q) {
  return std::all_of(fan.rays().begin(), fan.rays().end(), [&](const Vec2& g) { return ray_meets(q, g); });
}

std::vector<SmoothnessDefect> smoothness_defects(const Fan2& fan, const Quasilattice& lattice) {
  if (!is_lattice(lattice)) throw PreconditionError("smoothness is only defined relative to a lattice");
  std::vector<std::optional<PrimitiveRay>> prim;
  for (const auto& g : fan.rays()) prim.push_back(primitive_ray(lattice, g));
  std::vector<SmoothnessDefect> out;
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    const auto [i, j] = fan.cones()[k];
    if (!prim[i] || !prim[j]) {
      out.push_back({static_cast<int>(k), std::nullopt});
      continue;
    }
    const Integer det = prim[i]->m * prim[j]->n - prim[i]->n * prim[j]->m;
    if (det != 1 && det != -1) out.push_back({static_cast<int>(k), det});
  }
  return out;
}

bool is_smooth(const Fan2& fan, const Quasilattice& lattice) { return smoothness_defects(fan, lattice).empty(); }

bool is_complete(const Fan2& fan) {
  const auto& rays = fan.rays();
  const auto& cones = fan.cones();
  if (rays.size() < 3 || cones.size() != rays.size()) return false;
  std::vector<int> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return angle_order(rays[a], rays[b]) < 0; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int from = order[k];
    const int to = order[(k + 1) % order.size()];
    // Each gap must be a cone spanning less than a half-turn (stored cones
    // are already oriented counterclockwise).
    if (std::count(cones.begin(), cones.end(), std::pair<int, int>{from, to}) != 1) return false;
  }
  return true;
}

}  // namespace quasitoric
