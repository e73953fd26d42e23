#pragma once

// Symplectic cuts in a direction nu that need not be rational, and blow-ups
// as corner chops, on moment polyhedra and on explicit moment maps.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quasitoric/polyhedron.hpp"
#include "quasitoric/quasilattice.hpp"

namespace quasitoric {

struct CutResult {
  Polyhedron2 kept_piece;    // <mu, nu> >= level
  Polyhedron2 other_piece;   // <mu, nu> <= level
  Polyhedron2 reduced_face;  // <mu, nu> == level
  Vec2 nu;
  QuadScalar level;
  Quasilattice augmented_quasilattice;
  // augmented / original; nullopt when the original is not a lattice and
  // does not contain nu.
  std::optional<GroupDesc> gamma;

  // mu lies in P with <mu, nu> > level.
  bool in_open_region(const Vec2& mu) const;
};

// Throws DomainError ("nothing to cut") unless the line <mu, nu> = c meets
// the interior of P.
CutResult cut_polyhedron(const Polyhedron2& p, const Quasilattice& q, const Vec2& nu, const QuadScalar& c);

/// Moment maps on C x S^2 and C x S^2 x C, with S^2 = {|v|^2 + z^2 = 1}:
///   Phi_Y(u, [v:z])       = -|u|^2 + a (z+1)/2
///   nu_-(u, [v:z], w)     = Phi_Y - |w|^2
/// The circle acts on (u, v, w) with weights (-1, a, -1).
struct CutMomentMaps {
  QuadScalar a;
  Row weights;
};

CutMomentMaps cut_moment_maps(const ParamSpec& a);

// Throw DomainError when |v|^2 + z^2 is off 1 by more than tol.
double eval_phi(const CutMomentMaps& maps, std::complex<double> u, std::complex<double> v, double z, double tol);
double eval_nu_minus(const CutMomentMaps& maps, std::complex<double> u, std::complex<double> v, double z,
                     std::complex<double> w, double tol);

// Squared-modulus versions; the sphere condition is checked exactly.
QuadScalar eval_phi_exact(const CutMomentMaps& maps, const QuadScalar& u_sq, const QuadScalar& v_sq, const QuadScalar& z);
QuadScalar eval_nu_minus_exact(const CutMomentMaps& maps, const QuadScalar& u_sq, const QuadScalar& v_sq,
                               const QuadScalar& z, const QuadScalar& w_sq);

/// A point of C x S^2 given by |u|^2 and the height z in [-1, 1].
struct SpherePoint {
  QuadScalar u_sq;
  QuadScalar z;
};

struct DecompositionReport {
  int checked = 0;
  int open_region = 0;
  int reduced_face = 0;
  int other_piece = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// For each sample, the toric image (|u|^2, (z+1)/2) must lie in the kept
// piece off the cut edge iff Phi_Y > -1, on the reduced face iff Phi_Y = -1,
// and in the other piece iff Phi_Y < -1.
DecompositionReport cut_decomposition_check(const CutResult& r, const ParamSpec& a, const std::vector<SpherePoint>& samples);

// P cut by <mu, nu> >= <vertex, nu> + epsilon. epsilon = 0 returns P.
// Throws PreconditionError if vertex is not a vertex of P or epsilon < 0,
// and DomainError ("amount too large") when the chop removes another vertex
// or cuts into a recession ray.
Polyhedron2 blowup_corner(const Polyhedron2& p, const Vec2& vertex, const Vec2& nu, const QuadScalar& epsilon);

}  // namespace quasitoric
