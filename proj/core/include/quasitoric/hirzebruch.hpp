#pragma once

// Builders for the generalized Hirzebruch family F_a, a > 0.

#include "quasitoric/cut.hpp"
#include "quasitoric/delzant.hpp"
#include "quasitoric/fan.hpp"
#include "quasitoric/foliation.hpp"
#include "quasitoric/gale.hpp"

namespace quasitoric::hirzebruch {

// P_a: x >= 0, y >= 0, -y >= -1, -x + a y >= -1 (facet normals in this order).
std::vector<HalfPlane> trapezoid_hrep(const ParamSpec& a);
Polyhedron2 trapezoid(const ParamSpec& a);

// [0, inf) x [0, 1]
Polyhedron2 strip();
// The cut x = a y + 1 keeps <mu, (-1, a)> >= -1.
Vec2 cut_direction(const ParamSpec& a);
QuadScalar cut_level();

// T_a with vertices (0, -1/a), (0, 1), (a+1, 1).
Polyhedron2 triangle(const ParamSpec& a);
Vec2 triangle_corner(const ParamSpec& a);
// Chopping the corner (0, -1/a) by 1/a along (0, 1) leaves P_a.
Vec2 blowup_direction();
QuadScalar blowup_amount(const ParamSpec& a);

Quasilattice quasilattice(const ParamSpec& a);

// V'_a = ((1,0), (0,1), (0,-1), (-1,a)) and V_a = V'_a plus the ghost (0,-a).
VectorConfig primal_config(const ParamSpec& a);
VectorConfig vector_config(const ParamSpec& a);
// {{1,2},{2,4},{3,4},{1,3},{1},{2},{3},{4},{}}
Triangulation triangulation();

PolytopeTriple triple(const ParamSpec& a);
// The triple with the extra half-plane -a y >= -2a.
PolytopeTriple presymplectic_triple(const ParamSpec& a);

// Moment map of presymplectic_triple with relation_basis(V_a), plus a
// warning about the sign of the third constant.
MomentMap moment_map(const ParamSpec& a);

LVMDatum lvm_datum(const ParamSpec& a);

}  // namespace quasitoric::hirzebruch
