#include "quasitoric/hirzebruch.hpp"

namespace quasitoric::hirzebruch {

std::vector<HalfPlane> trapezoid_hrep(const ParamSpec& a) {
  return {{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}, {{-1, a.value}, -1}};
}

Polyhedron2 trapezoid(const ParamSpec& a) { return vrep_from_hrep(trapezoid_hrep(a)); }

Polyhedron2 strip() { return vrep_from_hrep({{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}}); }

Vec2 cut_direction(const ParamSpec& a) { return {-1, a.value}; }

QuadScalar cut_level() { return -1; }

Polyhedron2 triangle(const ParamSpec& a) {
  return vrep_from_hrep({{{1, 0}, 0}, {{0, -1}, -1}, {{-1, a.value}, -1}});
}

Vec2 triangle_corner(const ParamSpec& a) { return {0, -a.value.inverse()}; }

Vec2 blowup_direction() { return {0, 1}; }

QuadScalar blowup_amount(const ParamSpec& a) { return a.value.inverse(); }

Quasilattice quasilattice(const ParamSpec& a) { return Quasilattice::hirzebruch(a); }

VectorConfig primal_config(const ParamSpec& a) { return {{{1, 0}, {0, 1}, {0, -1}, {-1, a.value}}, {}}; }

VectorConfig vector_config(const ParamSpec& a) { return augment_ghosts(primal_config(a)); }

Triangulation triangulation() { return {{{1, 2}, {2, 4}, {3, 4}, {1, 3}, {1}, {2}, {3}, {4}, {}}}; }

PolytopeTriple triple(const ParamSpec& a) { return PolytopeTriple(trapezoid(a), quasilattice(a)); }

PolytopeTriple presymplectic_triple(const ParamSpec& a) {
  return PolytopeTriple(trapezoid(a), quasilattice(a), {{{0, -a.value}, -2 * a.value}});
}

MomentMap moment_map(const ParamSpec& a) {
  MomentMap m;
  m.components = moment_map_coeffs(presymplectic_triple(a), relation_basis(vector_config(a)));
  const QuadScalar expected = -(1 + a.value);
  for (std::size_t j = 0; j < m.components.size(); ++j) {
    const Row& b = m.components[j].coefficients;
    if (b == Row{1, 0, a.value, 1, 0} && m.components[j].constant == expected) {
      m.warnings.push_back("component " + std::to_string(j + 1) + " has constant -(1+a) = " + expected.to_string() +
                           "; the variant '-1+a' would contradict the level set |z1|^2 + a|z3|^2 + |z4|^2 = 1+a");
    }
  }
  return m;
}

LVMDatum lvm_datum(const ParamSpec& a) {
  return LVMDatum(gale_dual(vector_config(a)), chamber_from_triangulation(triangulation(), 5), a);
}

}  // namespace quasitoric::hirzebruch
