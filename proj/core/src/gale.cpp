#include "quasitoric/gale.hpp"

#include <algorithm>

#include "quasitoric/errors.hpp"
#include "quasitoric/polyhedron.hpp"

namespace quasitoric {

namespace {

Matrix coordinate_matrix(const VectorConfig& v) {
  Matrix m(2);
  for (const auto& u : v.vectors) {
    m[0].push_back(u.x);
    m[1].push_back(u.y);
  }
  return m;
}

Vec2 sum(const VectorConfig& v) {
  Vec2 s;
  for (const auto& u : v.vectors) s += u;
  return s;
}

void require_planar(const PointConfig& p) {
  if (p.m != 1) throw UnsupportedError("only point configurations in C (m = 1) are supported here");
}

}  // namespace

void VectorConfig::validate() const {
  if (vectors.size() < 2) throw PreconditionError("a vector configuration needs at least two vectors");
  if (rank(coordinate_matrix(*this)) != 2) throw PreconditionError("configuration does not span the plane");
  for (int g : ghosts)
    if (g < 1 || g > size()) throw PreconditionError("ghost label " + std::to_string(g) + " out of range");
}

std::vector<IndexSet> Triangulation::maximal() const {
  std::vector<IndexSet> out;
  for (const auto& s : subsets) {
    const bool dominated = std::any_of(subsets.begin(), subsets.end(), [&](const IndexSet& o) {
      return o.size() > s.size() && std::includes(o.begin(), o.end(), s.begin(), s.end());
    });
    if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

IndexSet Triangulation::unused_labels(int d) const {
  IndexSet out;
  for (int i = 1; i <= d; ++i) {
    const bool used = std::any_of(subsets.begin(), subsets.end(), [&](const IndexSet& s) { return s.count(i) > 0; });
    if (!used) out.insert(i);
  }
  return out;
}

PointConfig PointConfig::planar(std::vector<ComplexK> pts) {
  PointConfig p;
  p.m = 1;
  for (auto& z : pts) p.points.push_back({std::move(z)});
  return p;
}

bool is_balanced(const VectorConfig& v) { return sum(v).is_zero(); }

bool is_odd(const VectorConfig& v) { return (v.size() - rank(coordinate_matrix(v))) % 2 == 1; }

VectorConfig augment_ghosts(const VectorConfig& v) {
  v.validate();
  VectorConfig out = v;
  const auto append_ghost = [&](Vec2 u) {
    out.vectors.push_back(std::move(u));
    out.ghosts.insert(out.size());
  };
  const Vec2 s = sum(v);
  if (!s.is_zero()) append_ghost(-s);
  if ((out.size() - 2) % 2 == 0) {
    // A zero-sum triple from the configuration itself keeps the Z-span.
    for (std::size_t i = 0; i < v.vectors.size(); ++i) {
      for (std::size_t j = i + 1; j < v.vectors.size(); ++j) {
        if (cross(v.vectors[i], v.vectors[j]).is_zero()) continue;
        append_ghost(v.vectors[i]);
        append_ghost(v.vectors[j]);
        append_ghost(-(v.vectors[i] + v.vectors[j]));
        return out;
      }
    }
  }
  return out;
}

Matrix relation_basis(const VectorConfig& v) {
  v.validate();
  if (!is_balanced(v)) throw PreconditionError("relation_basis needs a balanced configuration (sum of vectors = 0)");
  const int d = v.size();
  Matrix constraints = coordinate_matrix(v);
  Row last(d, QuadScalar(0));
  last[d - 1] = 1;
  constraints.push_back(std::move(last));
  Matrix rest = kernel_basis(constraints, d);
  std::reverse(rest.begin(), rest.end());
  Matrix out;
  out.emplace_back(d, QuadScalar(1));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

PointConfig gale_dual_from_relations(const Matrix& relations) {
  if (relations.size() < 3 || relations.size() % 2 == 0)
    throw PreconditionError("Gale dual needs an odd number (>= 3) of relation rows");
  const int m = static_cast<int>(relations.size() - 1) / 2;
  const std::size_t d = relations[0].size();
  PointConfig out;
  out.m = m;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<ComplexK> coords;
    for (int t = 0; t < m; ++t) coords.push_back({relations[1 + 2 * t][j], relations[2 + 2 * t][j]});
    out.points.push_back(std::move(coords));
  }
  return out;
}

PointConfig gale_dual(const VectorConfig& v) {
  if (!is_odd(v)) throw PreconditionError("Gale dual needs an odd configuration");
  return gale_dual_from_relations(relation_basis(v));
}

VirtualChamber chamber_from_triangulation(const Triangulation& t, int d) {
  if (d < 4) throw PreconditionError("chamber_from_triangulation needs d >= 4");
  VirtualChamber out;
  for (const auto& s : t.maximal()) {
    if (s.size() != 2) throw PreconditionError("triangulation maximal elements must have two labels");
    IndexSet complement;
    for (int i = 1; i <= d; ++i)
      if (!s.count(i)) complement.insert(i);
    out.subsets.push_back(std::move(complement));
  }
  return out;
}

PolytopalityResult is_polytopal(const PointConfig& lambda, const VirtualChamber& chamber) {
  require_planar(lambda);
  std::vector<HalfPlane> hrep;
  for (const auto& s : chamber.subsets) {
    if (s.size() != 3) throw UnsupportedError("chamber element is not a triangle");
    std::vector<Vec2> tri;
    for (int label : s) {
      if (label < 1 || label > lambda.size()) throw PreconditionError("chamber label out of range");
      tri.push_back(lambda.at(label - 1).as_vec());
    }
    const int orientation = cross(tri[1] - tri[0], tri[2] - tri[0]).sign();
    // A flat triangle has empty interior.
    if (orientation == 0) return {};
    if (orientation < 0) std::swap(tri[1], tri[2]);
    for (int e = 0; e < 3; ++e) {
      const Vec2& a = tri[e];
      const Vec2 edge = tri[(e + 1) % 3] - a;
      const Vec2 inward{-edge.y, edge.x};
      hrep.push_back({inward, dot(a, inward)});
    }
  }
  Polyhedron2 common;
  try {
    common = vrep_from_hrep(hrep);
  } catch (const InfeasibleError&) {
    return {};
  }
  if (common.dimension() != 2) return {};
  Vec2 c;
  for (const auto& v : common.vertices()) c += v;
  c = QuadScalar(1) / QuadScalar(static_cast<long long>(common.vertices().size())) * c;
  return {true, c};
}

bool affine_equivalent(const PointConfig& lambda, const PointConfig& other) {
  require_planar(lambda);
  require_planar(other);
  if (lambda.size() != other.size()) throw PreconditionError("affine_equivalent: configurations differ in size");
  const int n = lambda.size();
  if (n == 0) return true;
  const auto p = [&](int j) { return lambda.at(j).as_vec(); };
  const auto q = [&](int j) { return other.at(j).as_vec(); };

  for (int j = 1; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const Vec2 dp1 = p(j) - p(0), dp2 = p(k) - p(0);
      const QuadScalar det = cross(dp1, dp2);
      if (det.is_zero()) continue;
      const Vec2 dq1 = q(j) - q(0), dq2 = q(k) - q(0);
      if (cross(dq1, dq2).is_zero()) return false;
      // A = [dq1 dq2] [dp1 dp2]^{-1}
      const auto apply = [&](const Vec2& w) {
        const QuadScalar s = cross(w, dp2) / det;
        const QuadScalar t = cross(dp1, w) / det;
        return s * dq1 + t * dq2;
      };
      for (int l = 0; l < n; ++l)
        if (apply(p(l) - p(0)) + q(0) != q(l)) return false;
      return true;
    }
  }

  // Collinear (or coincident) points: compare affine parameters along the line.
  int j = 1;
  while (j < n && p(j) == p(0)) ++j;
  if (j == n) {
    for (int l = 1; l < n; ++l)
      if (q(l) != q(0)) return false;
    return true;
  }
  const Vec2 w = p(j) - p(0);
  const Vec2 w2 = q(j) - q(0);
  if (w2.is_zero()) return false;
  for (int l = 0; l < n; ++l) {
    const QuadScalar s = dot(p(l) - p(0), w) / dot(w, w);
    if (q(0) + s * w2 != q(l)) return false;
  }
  return true;
}

PointConfig conjugate(const PointConfig& lambda) {
  PointConfig out = lambda;
  for (auto& pt : out.points)
    for (auto& z : pt) z = z.conj();
  return out;
}

}  // namespace quasitoric
