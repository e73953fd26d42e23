#pragma once

/**
 * @file scalar.hpp
 * @brief Exact arithmetic in a real quadratic field Q(sqrt(d)).
 *
 * A QuadScalar is r + s*sqrt(d) with r, s arbitrary-precision rationals and
 * d a squarefree integer > 1. Rationals are the sub-case s = 0 and are
 * stored with d = 0, so a rational value is compatible with every field.
 * Combining two irrational values with different d raises ContextError.
 *
 * The representation is canonical: s == 0 implies d == 0, and both rational
 * parts are in lowest terms. Structural equality is numeric equality.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasitoric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(int v) : r_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long v) : r_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long long v) : r_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)

  // r + s*sqrt(d). d must be squarefree and > 1 whenever s != 0.
  QuadScalar(Rational r, Rational s, std::int64_t d);

  static QuadScalar fraction(long long num, long long den);
  // sqrt(n) for n >= 0; square factors are pulled out, so sqrt(8) = 2*sqrt(2)
  // and sqrt(9) = 3.
  static QuadScalar sqrt(std::int64_t n);

  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }
  // 0 for rational values.
  std::int64_t d() const { return d_; }

  bool is_rational() const { return s_ == 0; }
  bool is_zero() const { return r_ == 0 && s_ == 0; }
  bool is_integer() const;
  int sign() const;
  double to_double() const;

  QuadScalar conjugate() const;
  // r^2 - d*s^2, the field norm.
  Rational norm() const;
  QuadScalar inverse() const;

  // Largest integer <= value.
  Integer floor() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.d_ == b.d_;
  }
  friend std::strong_ordering operator<=>(const QuadScalar& a, const QuadScalar& b);

  // "3/2", "sqrt(2)", "1+sqrt(2)", "-1/2+3/4*sqrt(5)".
  std::string to_string() const;

 private:
  void canonicalize();

  Rational r_{0};
  Rational s_{0};
  std::int64_t d_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

// Free-function spellings of the core operations.
inline QuadScalar add(const QuadScalar& x, const QuadScalar& y) { return x + y; }
inline QuadScalar mul(const QuadScalar& x, const QuadScalar& y) { return x * y; }
inline QuadScalar neg(const QuadScalar& x) { return -x; }
inline QuadScalar inv(const QuadScalar& x) { return x.inverse(); }
inline int sign(const QuadScalar& x) { return x.sign(); }
inline bool is_rational(const QuadScalar& x) { return x.is_rational(); }
inline double to_float(const QuadScalar& x) { return x.to_double(); }
inline QuadScalar abs(const QuadScalar& x) { return x.sign() < 0 ? -x : x; }

// True iff n > 1 and no prime square divides n.
bool is_squarefree(std::int64_t n);

// The d shared by a and b (0 if both rational). Throws ContextError when
// both are irrational in different fields.
std::int64_t common_field(std::int64_t a, std::int64_t b);

// Parses the text syntax "p/q", "r+s*sqrt(d)", "sqrt(d)" (with optional
// signs, spaces, and integer/decimal-free rationals). Throws DomainError.
QuadScalar parse_scalar(std::string_view text);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// The positive parameter a of the family, with its reduced fraction when
/// rational.
struct ParamSpec {
  QuadScalar value;
  bool rational = false;
  Integer p = 0;  // valid when rational
  Integer q = 1;  // valid when rational; q >= 1

  // Throws DomainError unless value > 0.
  static ParamSpec from(const QuadScalar& value);
  static ParamSpec parse(std::string_view text) { return from(parse_scalar(text)); }

  bool is_integer() const { return rational && q == 1; }
};

}  // namespace quasitoric
