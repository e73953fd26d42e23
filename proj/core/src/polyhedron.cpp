#include "quasitoric/polyhedron.hpp"

#include <algorithm>

#include "quasitoric/errors.hpp"

namespace quasitoric {

namespace {

std::optional<Vec2> intersect_lines(const HalfPlane& a, const HalfPlane& b) {
  const QuadScalar det = cross(a.normal, b.normal);
  if (det.is_zero()) return std::nullopt;
  return Vec2{(a.offset * b.normal.y - b.offset * a.normal.y) / det,
              (a.normal.x * b.offset - b.normal.x * a.offset) / det};
}

bool satisfies_all(const std::vector<HalfPlane>& hrep, const Vec2& mu) {
  return std::all_of(hrep.begin(), hrep.end(), [&](const HalfPlane& h) { return h.satisfied_by(mu); });
}

bool in_recession_cone(const std::vector<HalfPlane>& hrep, const Vec2& v) {
  return std::all_of(hrep.begin(), hrep.end(), [&](const HalfPlane& h) { return dot(v, h.normal).sign() >= 0; });
}

// All normals parallel: the region is a slab, a half-plane, a line, the
// whole plane, or empty. Returns a point of it, if any.
std::optional<Vec2> parallel_feasible_point(const std::vector<HalfPlane>& hrep) {
  if (hrep.empty()) return Vec2{};
  const Vec2 base = hrep.front().normal;
  std::optional<QuadScalar> lower, upper;
  for (const auto& h : hrep) {
    // h.normal = k * base
    const QuadScalar k = base.x.is_zero() ? h.normal.y / base.y : h.normal.x / base.x;
    const QuadScalar bound = h.offset / k;
    if (k.sign() > 0) {
      if (!lower || bound > *lower) lower = bound;
    } else {
      if (!upper || bound < *upper) upper = bound;
    }
  }
  if (lower && upper && *lower > *upper) return std::nullopt;
  const QuadScalar t = lower ? *lower : *upper;
  return (t / dot(base, base)) * base;
}

bool normals_span_plane(const std::vector<HalfPlane>& hrep) {
  for (std::size_t i = 1; i < hrep.size(); ++i)
    if (!cross(hrep[0].normal, hrep[i].normal).is_zero()) return true;
  return false;
}

int affine_dimension(const std::vector<Vec2>& vertices, const std::vector<Vec2>& rays) {
  std::vector<Vec2> directions = rays;
  for (std::size_t i = 1; i < vertices.size(); ++i) directions.push_back(vertices[i] - vertices[0]);
  if (directions.empty()) return 0;
  for (std::size_t i = 1; i < directions.size(); ++i)
    if (!cross(directions[0], directions[i]).is_zero()) return 2;
  return 1;
}

void order_counterclockwise(std::vector<Vec2>& pts) {
  if (pts.size() < 3) {
    std::sort(pts.begin(), pts.end());
    return;
  }
  Vec2 centroid;
  for (const auto& p : pts) centroid += p;
  const QuadScalar n(static_cast<long long>(pts.size()));
  centroid = QuadScalar(1) / n * centroid;
  std::sort(pts.begin(), pts.end(),
            [&](const Vec2& a, const Vec2& b) { return angle_order(a - centroid, b - centroid) < 0; });
  std::rotate(pts.begin(), std::min_element(pts.begin(), pts.end()), pts.end());
}

}  // namespace

bool HalfPlane::equivalent_to(const HalfPlane& o) const {
  if (!same_direction(normal, o.normal)) return false;
  const QuadScalar k = normal.x.is_zero() ? o.normal.y / normal.y : o.normal.x / normal.x;
  return o.offset == k * offset;
}

Vec2 normalize_direction(const Vec2& v) {
  if (v.is_zero()) throw PreconditionError("cannot normalize the zero vector");
  const QuadScalar lead = abs(v.x.is_zero() ? v.y : v.x);
  return QuadScalar(1) / lead * v;
}

std::vector<int> Polyhedron2::facets_at(std::size_t vertex) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < hrep_.size(); ++i)
    if (hrep_[i].tight_at(vertices_.at(vertex))) out.push_back(static_cast<int>(i));
  return out;
}

bool Polyhedron2::contains(const Vec2& mu) const { return satisfies_all(hrep_, mu); }

bool contains(const Polyhedron2& p, const Vec2& mu) { return p.contains(mu); }

Polyhedron2 vrep_from_hrep(const std::vector<HalfPlane>& input) {
  std::vector<HalfPlane> hrep;
  for (const auto& h : input) {
    if (h.normal.is_zero()) throw PreconditionError("half-plane with zero normal");
    const bool duplicate =
        std::any_of(hrep.begin(), hrep.end(), [&](const HalfPlane& k) { return k.equivalent_to(h); });
    if (!duplicate) hrep.push_back(h);
  }

  std::vector<Vec2> vertices;
  for (std::size_t i = 0; i < hrep.size(); ++i) {
    for (std::size_t j = i + 1; j < hrep.size(); ++j) {
      auto mu = intersect_lines(hrep[i], hrep[j]);
      if (mu && satisfies_all(hrep, *mu)) vertices.push_back(std::move(*mu));
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  if (vertices.empty()) {
    if (!normals_span_plane(hrep) && parallel_feasible_point(hrep)) {
      throw NotPointedError("region is nonempty but contains a line (no vertex)");
    }
    throw InfeasibleError("constraint system is infeasible");
  }

  std::vector<Vec2> rays;
  for (const auto& h : hrep) {
    for (const Vec2& cand : {Vec2{h.normal.y, -h.normal.x}, Vec2{-h.normal.y, h.normal.x}}) {
      if (!in_recession_cone(hrep, cand)) continue;
      Vec2 dir = normalize_direction(cand);
      if (std::find(rays.begin(), rays.end(), dir) == rays.end()) rays.push_back(std::move(dir));
    }
  }
  std::sort(rays.begin(), rays.end(), [](const Vec2& a, const Vec2& b) { return angle_order(a, b) < 0; });

  order_counterclockwise(vertices);
  const int dim = affine_dimension(vertices, rays);

  std::vector<HalfPlane> kept;
  for (const auto& h : hrep) {
    const auto tight = std::count_if(vertices.begin(), vertices.end(), [&](const Vec2& v) { return h.tight_at(v); });
    bool keep = tight >= 1;
    if (dim == 2) {
      const bool along_ray =
          std::any_of(rays.begin(), rays.end(), [&](const Vec2& r) { return dot(r, h.normal).is_zero(); });
      keep = tight >= 2 || (tight == 1 && along_ray);
    }
    if (keep) kept.push_back(h);
  }

  Polyhedron2 p;
  p.hrep_ = std::move(kept);
  p.vertices_ = std::move(vertices);
  p.rays_ = std::move(rays);
  p.dimension_ = dim;
  p.simple_ = dim == 2;
  for (std::size_t i = 0; i < p.vertices_.size() && p.simple_; ++i) p.simple_ = p.facets_at(i).size() == 2;
  return p;
}

std::vector<HalfPlane> hrep_from_vrep(const std::vector<Vec2>& vertices, const std::vector<Vec2>& rays) {
  if (vertices.empty()) throw PreconditionError("hrep_from_vrep needs at least one vertex");
  if (affine_dimension(vertices, rays) != 2) throw PreconditionError("hrep_from_vrep needs a full-dimensional polyhedron");

  struct Candidate {
    Vec2 point;
    Vec2 direction;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) candidates.push_back({vertices[i], vertices[j] - vertices[i]});
    for (const auto& r : rays) candidates.push_back({vertices[i], r});
  }

  std::vector<HalfPlane> out;
  for (const auto& c : candidates) {
    if (c.direction.is_zero()) continue;
    const Vec2 left{-c.direction.y, c.direction.x};
    for (const Vec2& n : {left, -left}) {
      const QuadScalar offset = dot(c.point, n);
      const bool valid = std::all_of(vertices.begin(), vertices.end(), [&](const Vec2& v) { return dot(v, n) >= offset; }) &&
                         std::all_of(rays.begin(), rays.end(), [&](const Vec2& r) { return dot(r, n).sign() >= 0; });
      if (!valid) continue;
      const QuadScalar lead = abs(n.x.is_zero() ? n.y : n.x);
      HalfPlane h{QuadScalar(1) / lead * n, offset / lead};
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HalfPlane& a, const HalfPlane& b) { return angle_order(a.normal, b.normal) < 0; });
  return out;
}

std::optional<Polyhedron2> intersect_halfplane(const Polyhedron2& p, const HalfPlane& h) {
  std::vector<HalfPlane> hrep = p.hrep();
  hrep.push_back(h);
  try {
    return vrep_from_hrep(hrep);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

std::optional<Vec2> feasible_point(const std::vector<HalfPlane>& hrep) {
  try {
    const Polyhedron2 p = vrep_from_hrep(hrep);
    Vec2 c;
    for (const auto& v : p.vertices()) c += v;
    c = QuadScalar(1) / QuadScalar(static_cast<long long>(p.vertices().size())) * c;
    for (const auto& r : p.rays()) c += r;
    return c;
  } catch (const InfeasibleError&) {
    return std::nullopt;
  } catch (const NotPointedError&) {
    return parallel_feasible_point(hrep);
  }
}

QuadScalar area(const Polyhedron2& p) {
  if (!p.bounded()) throw PreconditionError("area of an unbounded polyhedron");
  const auto& v = p.vertices();
  QuadScalar twice;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return twice / QuadScalar(2);
}

}  // namespace quasitoric
