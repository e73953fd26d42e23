#pragma once

/**
 * @file quasilattice.hpp
 * @brief Quasilattices: Z-spans of R-spanning vectors in Q(sqrt(d))^2.
 *
 * Membership is decided exactly. Each Q(sqrt(d)) coordinate splits into its
 * rational and sqrt(d) parts, turning "v is an integer combination of the
 * generators" into an integer linear system over Q, which is then decided
 * through a Hermite normal form.
 *
 * Two quasilattices are equal when they have the same elements; generator
 * lists are only presentations (Q_a can be given by three or four vectors).
 */

#include <optional>
#include <string>
#include <vector>

#include "quasitoric/linalg.hpp"

namespace quasitoric {

class Quasilattice {
 public:
  // Throws PreconditionError unless some pair of generators is linearly
  // independent.
  explicit Quasilattice(std::vector<Vec2> generators, std::optional<ParamSpec> param = std::nullopt);

  // Z^2 with generators (1,0), (0,1).
  static Quasilattice integer_lattice();
  // Q_a = span_Z{(1,0), (0,1), (-1,a)} = Z x (Z + aZ), tagged with a.
  static Quasilattice hirzebruch(const ParamSpec& a);

  const std::vector<Vec2>& generators() const { return generators_; }
  const std::optional<ParamSpec>& param() const { return param_; }

  bool contains(const Vec2& v) const;

 private:
  std::vector<Vec2> generators_;
  std::optional<ParamSpec> param_;
};

bool member(const Quasilattice& q, const Vec2& v);

// Both quasilattices contain each other's generators.
bool membership_equivalent(const Quasilattice& a, const Quasilattice& b);

// Rank of Q as an abelian group (rank over Q of the rational coordinate
// matrix of the generators). Q is discrete iff this rank is 2.
int group_rank(const Quasilattice& q);
bool is_lattice(const Quasilattice& q);

// A Z-basis of a lattice. Throws PreconditionError if q is not discrete.
std::pair<Vec2, Vec2> lattice_basis(const Quasilattice& q);

// Some positive multiple of g lies in q (g != 0).
bool ray_meets(const Quasilattice& q, const Vec2& g);

/// Primitive generator data for a ray of a lattice: coordinates (m, n) of
/// the first nonzero lattice point on the ray, in the basis of
/// lattice_basis(), and the factor `label` with g = label * primitive.
struct PrimitiveRay {
  Integer m;
  Integer n;
  Vec2 primitive;
  QuadScalar label;
};

// nullopt when the ray misses every nonzero lattice point. Throws
// PreconditionError if q is not a lattice.
std::optional<PrimitiveRay> primitive_ray(const Quasilattice& q, const Vec2& g);

Quasilattice augment(const Quasilattice& q, const Vec2& nu);

enum class GroupKind { trivial, finite_cyclic, dense_cyclic };

/// A cyclic group of rotations of the circle. The generator turns by
/// 2*pi*rotation; `order` is 1, q, or 0 (infinite).
struct GroupDesc {
  GroupKind kind = GroupKind::trivial;
  Integer order = 1;
  QuadScalar rotation;

  std::string describe() const;
};

std::string to_string(GroupKind kind);

// Gamma_a = Q_a / Z^2 for a quasilattice tagged with its parameter.
// Throws UnsupportedError for untagged quasilattices.
GroupDesc gamma_quotient(const Quasilattice& q);

// (L + Z nu) / L for a lattice L: cyclic, generated by the class of nu.
// The rotation is the second basis coordinate of nu (the circle factor
// acted on by Gamma in the strip picture).
GroupDesc extension_quotient(const Quasilattice& lattice, const Vec2& nu);

}  // namespace quasitoric
