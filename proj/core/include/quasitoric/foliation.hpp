#pragma once

// LVM data for the family: the open set U(T*) in CP^4, the actions of
// C_Lambda and its conjugate, the projection to F_a and its equivalence
// relation, and the leaf classification tables.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quasitoric/gale.hpp"

namespace quasitoric {

using Complex = std::complex<double>;

/// Homogeneous coordinates [z1 : ... : zn], not all zero.
struct ProjPoint {
  std::vector<Complex> z;

  // Throws DomainError if every coordinate is zero.
  explicit ProjPoint(std::vector<Complex> coords);
  // Divided by the first coordinate of largest modulus.
  ProjPoint normalized() const;
  int size() const { return static_cast<int>(z.size()); }
};

/// (Lambda, T*) together with the parameter a.
struct LVMDatum {
  PointConfig lambda;
  VirtualChamber chamber;
  ParamSpec a;

  // Throws PreconditionError unless lambda has 5 points and is affinely
  // equivalent to (i, 1, 1+ia, i, 0), and every chamber element contains 5.
  LVMDatum(PointConfig lambda, VirtualChamber chamber, ParamSpec a);
};

// (i, 1, 1+ia, i, 0)
PointConfig standard_lambda(const ParamSpec& a);

bool in_U(const ProjPoint& z, const VirtualChamber& chamber, double tol);

// z_j -> exp(2 pi i Lambda_j t) z_j, renormalized; the conjugate action
// uses conj(Lambda_j).
ProjPoint act_c_lambda(Complex t, const ProjPoint& z, const PointConfig& lambda);
ProjPoint act_conjugate(Complex t, const ProjPoint& z, const PointConfig& lambda);

enum class LeafTopology { torus_T2, cylinder_S1xR, torus_T3 };
std::string to_string(LeafTopology t);

struct LeafReport {
  ParamSpec a;
  LeafTopology generic_leaf = LeafTopology::torus_T2;
  LeafTopology generic_closure = LeafTopology::torus_T2;
  std::string leaf_z2z3_nonzero;  // complex structure of leaves with z2 z3 != 0
  std::string leaf_z2_or_z3_zero;
  std::optional<Integer> covering_degree;  // q when a = p/q
  std::vector<std::string> notes;
};

LeafReport classify_leaves(const ParamSpec& a);

// (z1/z5, ..., z4/z5). Throws DomainError if |z5| <= tol after
// normalization.
std::vector<Complex> project(const ProjPoint& z, double tol = 1e-9);

/// Outcome of the F_a equivalence test. `residual` is the largest distance
/// from the nearest exact solution found.
struct Equivalence {
  bool equivalent = false;
  double residual = 0;
};

// w' = g.w for some g = (e^{2 pi i u}, e^{2 pi i v}, e^{2 pi i (v+au)}, e^{2 pi i u}),
// u, v in C. Zero coordinates must match and drop the corresponding
// conditions.
Equivalence equivalent_in_Fa(const std::vector<Complex>& w, const std::vector<Complex>& w2, const ParamSpec& a, double tol);

struct InvarianceReport {
  int checks = 0;
  int failures = 0;
  double max_residual = 0;

  bool ok() const { return failures == 0; }
};

InvarianceReport verify_projection_invariance(const LVMDatum& datum, const std::vector<ProjPoint>& samples,
                                              const std::vector<Complex>& t_values, double tol);

// Smallest t in 1..max_t at which the real-flow phases (t, a t) are
// integral, or nullopt.
std::optional<int> phase_return_time(const ParamSpec& a, int max_t);
// min over t in 1..max_t of the distance of (t, a t) to Z^2.
double min_phase_distance(const ParamSpec& a, int max_t);

}  // namespace quasitoric
