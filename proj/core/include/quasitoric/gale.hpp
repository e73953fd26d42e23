#pragma once

/**
 * @file gale.hpp
 * @brief Triangulated vector configurations and their Gale duals.
 *
 * Index sets use the 1-based labels customary for configurations: the
 * vectors of a configuration of size d are labelled 1..d.
 *
 * A balanced configuration V (sum zero) has the all-ones vector among its
 * relations. Dropping that row from a relation basis and reading the
 * remaining columns as complex numbers gives a point configuration, its
 * Gale dual, well defined up to a real affine automorphism.
 */

#include <optional>
#include <set>
#include <vector>

#include "quasitoric/linalg.hpp"

namespace quasitoric {

using IndexSet = std::set<int>;

struct VectorConfig {
  std::vector<Vec2> vectors;
  IndexSet ghosts;  // labels of ghost vectors

  // Throws PreconditionError unless there are >= 2 vectors spanning the
  // plane and every ghost label is in range.
  void validate() const;
  int size() const { return static_cast<int>(vectors.size()); }
};

struct Triangulation {
  std::vector<IndexSet> subsets;

  // Elements not strictly contained in another element, in input order.
  std::vector<IndexSet> maximal() const;
  // Labels in 1..d that appear in no element.
  IndexSet unused_labels(int d) const;
};

/// d points in C^m; points[j][t] is coordinate t of point j+1.
struct PointConfig {
  int m = 1;
  std::vector<std::vector<ComplexK>> points;

  int size() const { return static_cast<int>(points.size()); }
  // Point j (0-based) of an m = 1 configuration.
  const ComplexK& at(int j) const { return points.at(j).at(0); }

  static PointConfig planar(std::vector<ComplexK> pts);
  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

struct VirtualChamber {
  std::vector<IndexSet> subsets;
};

bool is_balanced(const VectorConfig& v);
// card(V) - dim span(V) is odd.
bool is_odd(const VectorConfig& v);

// Appends ghost vectors until the configuration is balanced and odd:
// -sum(V) when the sum is nonzero, then, if the count is still even, the
// zero-sum triple (u, w, -u-w) built from the first independent pair.
VectorConfig augment_ghosts(const VectorConfig& v);

// Rows span Rel(V) = {x : sum_j x_j v_j = 0}. Row 0 is all ones; the other
// rows are the reduced echelon basis of the relations with last entry 0,
// listed with decreasing pivot column. Throws PreconditionError if V is
// not balanced.
Matrix relation_basis(const VectorConfig& v);

// Point j has coordinate t equal to b^{2t}_j + i b^{2t+1}_j (rows counted
// from 1). Requires V balanced and odd.
PointConfig gale_dual(const VectorConfig& v);
PointConfig gale_dual_from_relations(const Matrix& relations);

// { {1..d} \ s : s maximal in T }
VirtualChamber chamber_from_triangulation(const Triangulation& t, int d);

/// Result of the polytopality test. `witness` lies in the interior of
/// every chamber triangle when the test succeeds.
struct PolytopalityResult {
  bool polytopal = false;
  std::optional<Vec2> witness;
};

// The open triangles conv{Lambda_i : i in s}, s in the chamber, have a
// common point. Requires m = 1 and triangles (|s| = 3).
PolytopalityResult is_polytopal(const PointConfig& lambda, const VirtualChamber& chamber);

// Some invertible real-affine map of C = R^2 carries lambda to other
// pointwise. Requires m = 1 and equal sizes.
bool affine_equivalent(const PointConfig& lambda, const PointConfig& other);

PointConfig conjugate(const PointConfig& lambda);

}  // namespace quasitoric
