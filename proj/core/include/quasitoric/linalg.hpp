#pragma once

// Small exact linear-algebra toolkit over Q(sqrt(d)) and over the integers.

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "quasitoric/scalar.hpp"

namespace quasitoric {

struct Vec2 {
  QuadScalar x;
  QuadScalar y;

  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const QuadScalar& k, const Vec2& v) { return {k * v.x, k * v.y}; }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  friend bool operator==(const Vec2&, const Vec2&) = default;
  // Lexicographic.
  friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

inline QuadScalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
// det [a b] = a.x b.y - a.y b.x
inline QuadScalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

std::ostream& operator<<(std::ostream& os, const Vec2& v);

// Exact comparison of the polar angles of two nonzero vectors, in [0, 2pi).
std::strong_ordering angle_order(const Vec2& a, const Vec2& b);

// b is a positive multiple of a (both nonzero).
bool same_direction(const Vec2& a, const Vec2& b);

/// A complex number with exact real and imaginary parts.
struct ComplexK {
  QuadScalar re;
  QuadScalar im;

  friend bool operator==(const ComplexK&, const ComplexK&) = default;
  ComplexK conj() const { return {re, -im}; }
  Vec2 as_vec() const { return {re, im}; }
};

using Row = std::vector<QuadScalar>;
using Matrix = std::vector<Row>;

struct RowEchelon {
  Matrix rows;               // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;   // pivot column of each row
};

RowEchelon rref(Matrix m);
int rank(const Matrix& m);

// Basis of {x : m x = 0}, returned in reduced row echelon form (leading 1s,
// increasing pivot columns). `columns` is needed when m has no rows.
Matrix kernel_basis(const Matrix& m, int columns);

// m * v
Row multiply(const Matrix& m, std::span<const QuadScalar> v);

// Field d shared by every entry (0 if all rational). Throws ContextError.
std::int64_t common_field(const Matrix& m);

// Rational coordinates of a vector over Q(sqrt(d)): each entry contributes
// its r part, and also its s part when d != 0.
std::vector<Rational> rational_coordinates(std::span<const QuadScalar> v, std::int64_t d);

// Integer linear systems --------------------------------------------------

using IntMatrix = std::vector<std::vector<Integer>>;

/// Column-style Hermite normal form A U = H with U unimodular, H lower
/// echelon. pivot_rows[k] is the row of the k-th pivot, which sits in
/// column k; columns past the last pivot are zero.
struct HermiteForm {
  IntMatrix h;
  std::vector<int> pivot_rows;
  int rank() const { return static_cast<int>(pivot_rows.size()); }
};

HermiteForm column_hermite_form(IntMatrix a);

// Integer solution y of H y = b for the echelon form (not of the original
// A), or nullopt when none exists.
std::optional<std::vector<Integer>> solve_echelon(const HermiteForm& hf, std::span<const Integer> b);

// Does A n = b have an integer solution n? A and b are rational; both are
// scaled to integers first.
bool integer_solvable(const std::vector<std::vector<Rational>>& a, std::span<const Rational> b);

int rational_rank(const std::vector<std::vector<Rational>>& a);

}  // namespace quasitoric
