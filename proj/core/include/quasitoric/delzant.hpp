#pragma once

// The generalized Delzant construction as data: level-set equations,
// moment-map components, the phase map of the cutting group N, and the
// quasitorus D = R^2/Q.
//
// Facets are indexed 0..d-1 in hrep order; rendered coordinates z1..zd are
// 1-based. Moment-map components follow
//   Psi_j(z) = sum_i b^j_i (|z_i|^2 + lambda_i).

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quasitoric/polyhedron.hpp"
#include "quasitoric/quasilattice.hpp"

namespace quasitoric {

/// (P, {X_1..X_d}, Q), optionally with extra half-planes appended after the
/// facets of P. Their normals and offsets extend the X_i and lambda_i.
class PolytopeTriple {
 public:
  // Throws PreconditionError if P is not a simple 2-dimensional polyhedron
  // or some normal is not in Q.
  PolytopeTriple(Polyhedron2 p, Quasilattice q, std::vector<HalfPlane> extra = {});

  const Polyhedron2& polytope() const { return p_; }
  const Quasilattice& quasilattice() const { return q_; }
  const std::vector<HalfPlane>& extra() const { return extra_; }

  int size() const { return static_cast<int>(p_.hrep().size() + extra_.size()); }
  std::vector<Vec2> normals() const;
  std::vector<QuadScalar> offsets() const;

 private:
  Polyhedron2 p_;
  Quasilattice q_;
  std::vector<HalfPlane> extra_;
};

/// sum_i coefficients[i] |z_{i+1}|^2 = constant
struct LevelEquation {
  Row coefficients;
  QuadScalar constant;

  std::string render() const;
};

/// Linear phase map params -> sum_k params[k] * rows[k]; the group element
/// is (exp(2 pi i phase_1), ..., exp(2 pi i phase_d)).
struct PhaseMap {
  Matrix rows;
  std::vector<std::string> params;

  Row phases(std::span<const QuadScalar> values) const;
  // All phases are integers.
  bool acts_trivially(std::span<const QuadScalar> values) const;
  std::string render() const;
};

struct DivisorOrder {
  int facet = 0;
  Integer order;
};

struct QuasifoldPresentation {
  int d = 0;
  Matrix relations;
  Row constants;
  std::vector<LevelEquation> level_equations;
  PhaseMap group;
  std::optional<GroupDesc> gamma;
  std::string quasitorus;
  std::vector<DivisorOrder> divisor_orders;
};

// Relations from relation_basis when the normals sum to zero, otherwise the
// reduced echelon basis of the kernel of the normal matrix.
QuasifoldPresentation presentation(const PolytopeTriple& t);

struct MomentComponent {
  Row coefficients;
  QuadScalar constant;  // sum_i b_i lambda_i

  std::string render() const;
};

struct MomentMap {
  std::vector<MomentComponent> components;
  std::vector<std::string> warnings;
};

// Throws PreconditionError on a size mismatch or a row that does not
// annihilate the normals.
std::vector<MomentComponent> moment_map_coeffs(const PolytopeTriple& t, const Matrix& relations);

std::vector<double> eval_moment_map(std::span<const MomentComponent> coeffs, std::span<const std::complex<double>> z);
Row eval_moment_map_exact(std::span<const MomentComponent> coeffs, std::span<const QuadScalar> squared_moduli);
bool level_set_member(std::span<const MomentComponent> coeffs, std::span<const std::complex<double>> z, double tol);
bool level_set_member_exact(std::span<const MomentComponent> coeffs, std::span<const QuadScalar> squared_moduli);

// (r, s) -> r b^3 + s b^2. Requires at least three rows, the first all ones.
PhaseMap residual_action_weights(const PolytopeTriple& t, const Matrix& relations);

// |z_i|^2 = <mu, X_i> - lambda_i, the point of the level set over mu.
Row squared_moduli_at(const PolytopeTriple& t, const Vec2& mu);

}  // namespace quasitoric
