#include "quasitoric/scalar.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "quasitoric/errors.hpp"

namespace quasitoric {

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

Float to_float_hp(const Rational& q) {
  return Float(boost::multiprecision::numerator(q)) / Float(boost::multiprecision::denominator(q));
}

int rational_sign(const Rational& q) { return q.sign(); }

}  // namespace

bool is_squarefree(std::int64_t n) {
  if (n <= 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

std::int64_t common_field(std::int64_t a, std::int64_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw ContextError("cannot combine elements of Q(sqrt(" + std::to_string(a) + ")) and Q(sqrt(" +
                     std::to_string(b) + "))");
}

QuadScalar::QuadScalar(Rational r, Rational s, std::int64_t d) : r_(std::move(r)), s_(std::move(s)), d_(d) {
  if (s_ != 0 && !is_squarefree(d_)) {
    throw DomainError("field parameter d = " + std::to_string(d_) + " is not a squarefree integer > 1");
  }
  canonicalize();
}

QuadScalar QuadScalar::fraction(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  return QuadScalar(Rational(num, den));
}

QuadScalar QuadScalar::sqrt(std::int64_t n) {
  if (n < 0) throw DomainError("sqrt of a negative integer");
  std::int64_t outside = 1;
  std::int64_t inside = n;
  for (std::int64_t p = 2; p * p <= inside; ++p) {
    while (inside % (p * p) == 0) {
      inside /= p * p;
      outside *= p;
    }
  }
  if (inside <= 1) return QuadScalar(Rational(outside * inside));
  return QuadScalar(Rational(0), Rational(outside), inside);
}

void QuadScalar::canonicalize() {
  if (s_ == 0) d_ = 0;
}

bool QuadScalar::is_integer() const {
  return s_ == 0 && boost::multiprecision::denominator(r_) == 1;
}

int QuadScalar::sign() const {
  const int sr = rational_sign(r_);
  const int ss = rational_sign(s_);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  // Opposite signs: the larger of r^2 and s^2 d wins. Equality would make d
  // a rational square.
  return r_ * r_ > s_ * s_ * d_ ? sr : ss;
}

double QuadScalar::to_double() const {
  if (s_ == 0) return static_cast<double>(to_float_hp(r_));
  const Float root = boost::multiprecision::sqrt(Float(d_));
  const Float r = to_float_hp(r_);
  const Float s = to_float_hp(s_);
  if (r_.sign() * s_.sign() >= 0) return static_cast<double>(r + s * root);
  // r and s*sqrt(d) cancel; divide the exact norm by the conjugate instead.
  return static_cast<double>(to_float_hp(norm()) / (r - s * root));
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar out = *this;
  out.s_ = -out.s_;
  return out;
}

Rational QuadScalar::norm() const { return r_ * r_ - s_ * s_ * d_; }

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  const Rational n = norm();
  QuadScalar out;
  out.r_ = r_ / n;
  out.s_ = -s_ / n;
  out.d_ = d_;
  out.canonicalize();
  return out;
}

Integer QuadScalar::floor() const {
  const double approx = to_double();
  Integer m(static_cast<long long>(std::floor(approx)));
  while (*this < QuadScalar(Rational(m))) --m;
  while (*this >= QuadScalar(Rational(m + 1))) ++m;
  return m;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar out = *this;
  out.r_ = -out.r_;
  out.s_ = -out.s_;
  return out;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  d_ = common_field(d_, o.d_);
  r_ += o.r_;
  s_ += o.s_;
  canonicalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  d_ = common_field(d_, o.d_);
  r_ -= o.r_;
  s_ -= o.s_;
  canonicalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  const std::int64_t d = common_field(d_, o.d_);
  Rational r = r_ * o.r_;
  if (d != 0) r += s_ * o.s_ * d;
  Rational s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  d_ = d;
  canonicalize();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const QuadScalar& a, const QuadScalar& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string rational_to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const QuadScalar x = parse_scalar(text);
  if (!x.is_rational()) throw ParseError("expected a rational number, got '" + std::string(text) + "'");
  return x.r();
}

std::string QuadScalar::to_string() const {
  if (s_ == 0) return rational_to_string(r_);
  std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string irr;
  if (s_ == 1) {
    irr = radical;
  } else if (s_ == -1) {
    irr = "-" + radical;
  } else {
    irr = rational_to_string(s_) + "*" + radical;
  }
  if (r_ == 0) return irr;
  if (s_ > 0) return rational_to_string(r_) + "+" + irr;
  return rational_to_string(r_) + irr;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.to_string(); }

namespace {

// expr := term (('+'|'-') term)*
// term := unary (('*'|'/') unary)*
// unary := ('+'|'-') unary | primary
// primary := integer | 'sqrt' '(' integer ')' | '(' expr ')'
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  QuadScalar parse() {
    QuadScalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadScalar expr() {
    QuadScalar value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  QuadScalar term() {
    QuadScalar value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        QuadScalar divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  QuadScalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  QuadScalar primary() {
    if (accept('(')) {
      QuadScalar value = expr();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    skip_space();
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      const Integer n = integer();
      if (!accept(')')) fail("missing ')'");
      if (n > Integer(std::numeric_limits<std::int64_t>::max())) fail("radicand too large");
      return QuadScalar::sqrt(static_cast<std::int64_t>(n));
    }
    return QuadScalar(Rational(integer()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

ParamSpec ParamSpec::from(const QuadScalar& value) {
  if (value.sign() <= 0) throw DomainError("parameter a must be positive, got " + value.to_string());
  ParamSpec spec;
  spec.value = value;
  spec.rational = value.is_rational();
  if (spec.rational) {
    spec.p = boost::multiprecision::numerator(value.r());
    spec.q = boost::multiprecision::denominator(value.r());
  }
  return spec;
}

}  // namespace quasitoric
