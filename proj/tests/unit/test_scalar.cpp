#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/scalar.hpp"

namespace {

using namespace quasitoric;

const QuadScalar r2 = QuadScalar::sqrt(2);

TEST(Scalar, ConjugatePairMultipliesToNorm) {
  EXPECT_EQ((QuadScalar(1) + r2) * (QuadScalar(1) - r2), QuadScalar(-1));
}

TEST(Scalar, InverseRationalizesDenominator) {
  EXPECT_EQ(inv(r2), QuadScalar(Rational(0), Rational(1, 2), 2));
  EXPECT_THROW(inv(QuadScalar(0)), DomainError);
}

TEST(Scalar, AdditionIsComponentwise) {
  const QuadScalar x(Rational(3, 2), Rational(0), 2);
  const QuadScalar y(Rational(0), Rational(2), 2);
  EXPECT_EQ(x + y, QuadScalar(Rational(3, 2), Rational(2), 2));
}

TEST(Scalar, Sign) {
  EXPECT_EQ(sign(QuadScalar(1) - r2), -1);
  EXPECT_EQ(sign(QuadScalar(3) - QuadScalar(2) * r2), 1);
  EXPECT_EQ(sign(QuadScalar(0)), 0);
  // 99/70 is a convergent of sqrt(2) from above.
  EXPECT_EQ(sign(QuadScalar::fraction(99, 70) - r2), 1);
  EXPECT_EQ(sign(QuadScalar::fraction(140, 99) - r2), -1);
}

TEST(Scalar, Canonicalization) {
  EXPECT_FALSE(is_rational(r2));
  const QuadScalar four_halves(Rational(4, 2), Rational(0), 2);
  EXPECT_TRUE(is_rational(four_halves));
  EXPECT_EQ(four_halves, QuadScalar(2));
  EXPECT_EQ(four_halves.d(), 0);
  EXPECT_EQ(QuadScalar::sqrt(8), QuadScalar(2) * r2);
  EXPECT_EQ(QuadScalar::sqrt(9), QuadScalar(3));
  EXPECT_NEAR(to_float(QuadScalar(1) + r2), 2.41421356237, 1e-10);
}

TEST(Scalar, MixedFieldsAreRejected) {
  EXPECT_THROW(r2 + QuadScalar::sqrt(3), ContextError);
  EXPECT_THROW((void)(r2 < QuadScalar::sqrt(3)), ContextError);
  EXPECT_NO_THROW(r2 + QuadScalar::fraction(1, 3));
  EXPECT_THROW(QuadScalar(Rational(1), Rational(1), 4), DomainError);
}

TEST(Scalar, Floor) {
  EXPECT_EQ(r2.floor(), 1);
  EXPECT_EQ((-r2).floor(), -2);
  EXPECT_EQ(QuadScalar::fraction(-3, 2).floor(), -2);
  EXPECT_EQ(QuadScalar(5).floor(), 5);
  EXPECT_EQ((QuadScalar(100) * r2).floor(), 141);
}

TEST(Scalar, ToStringAndParseRoundTrip) {
  EXPECT_EQ(r2.to_string(), "sqrt(2)");
  EXPECT_EQ((QuadScalar(1) + r2).to_string(), "1+sqrt(2)");
  EXPECT_EQ(QuadScalar::fraction(3, 2).to_string(), "3/2");
  for (const char* text : {"3/2", "sqrt(2)", "1+sqrt(2)", "-1/2+3/4*sqrt(5)", "-sqrt(3)", "7"})
    EXPECT_EQ(parse_scalar(text).to_string(), text);
  EXPECT_EQ(parse_scalar(" 2 * sqrt(2) "), QuadScalar(2) * r2);
  EXPECT_EQ(parse_scalar("sqrt(8)"), QuadScalar(2) * r2);
  EXPECT_THROW(parse_scalar("abc"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar(""), ParseError);
}

TEST(Scalar, ParamSpec) {
  const auto a = ParamSpec::parse("6/4");
  EXPECT_TRUE(a.rational);
  EXPECT_EQ(a.p, 3);
  EXPECT_EQ(a.q, 2);
  EXPECT_FALSE(a.is_integer());
  EXPECT_TRUE(ParamSpec::parse("3").is_integer());
  EXPECT_FALSE(ParamSpec::parse("sqrt(2)").rational);
  EXPECT_THROW(ParamSpec::parse("0"), DomainError);
  EXPECT_THROW(ParamSpec::parse("1-sqrt(2)"), DomainError);
}

TEST(Scalar, Squarefree) {
  EXPECT_TRUE(is_squarefree(2));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_FALSE(is_squarefree(1));
}

// Field axioms and order compatibility on random elements of Q(sqrt(2)).
TEST(ScalarProperty, FieldAndOrderLaws) {
  gen::Engine e(0x5ca1a7);
  for (int i = 0; i < 300; ++i) {
    const QuadScalar x = gen::scalar(e, 2), y = gen::scalar(e, 2), z = gen::scalar(e, 2);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x - x, QuadScalar(0));
    if (!x.is_zero()) EXPECT_EQ(x * inv(x), QuadScalar(1));
    EXPECT_EQ(x.norm(), (x * x.conjugate()).r());
    // The exact order agrees with floating evaluation away from ties.
    const double dx = x.to_double(), dy = y.to_double();
    if (std::abs(dx - dy) > 1e-9) EXPECT_EQ(x < y, dx < dy);
    if (x < y) EXPECT_TRUE(x + z < y + z);
    if (x < y && z.sign() > 0) EXPECT_TRUE(x * z < y * z);
    EXPECT_EQ(parse_scalar(x.to_string()), x);
    const Integer f = x.floor();
    EXPECT_LE(QuadScalar(Rational(f)), x);
    EXPECT_GT(QuadScalar(Rational(f + 1)), x);
  }
}

TEST(Scalar, Streams) {
  std::ostringstream os;
  os << QuadScalar::fraction(-1, 3);
  EXPECT_EQ(os.str(), "-1/3");
}

}  // namespace
