#include "quasitoric/linalg.hpp"

#include <numeric>

#include "quasitoric/errors.hpp"

namespace quasitoric {

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << "(" << v.x << ", " << v.y << ")"; }

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Vec2& v) {
  const int sy = v.y.sign();
  if (sy > 0 || (sy == 0 && v.x.sign() > 0)) return 0;
  return 1;
}

}  // namespace

std::strong_ordering angle_order(const Vec2& a, const Vec2& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha <=> hb;
  const int c = cross(a, b).sign();
  if (c > 0) return std::strong_ordering::less;
  if (c < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool same_direction(const Vec2& a, const Vec2& b) {
  return cross(a, b).is_zero() && dot(a, b).sign() > 0;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  if (m.empty()) return out;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const QuadScalar lead = m[r][c];
    for (auto& e : m[r]) e /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const QuadScalar f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix kernel_basis(const Matrix& m, int columns) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(columns, false);
  for (int p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Row v(columns, QuadScalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis)).rows;
}

Row multiply(const Matrix& m, std::span<const QuadScalar> v) {
  Row out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != v.size()) throw PreconditionError("matrix/vector dimension mismatch");
    QuadScalar acc;
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

std::int64_t common_field(const Matrix& m) {
  std::int64_t d = 0;
  for (const auto& row : m)
    for (const auto& e : row) d = common_field(d, e.d());
  return d;
}

std::vector<Rational> rational_coordinates(std::span<const QuadScalar> v, std::int64_t d) {
  std::vector<Rational> out;
  out.reserve(v.size() * (d == 0 ? 1 : 2));
  for (const auto& e : v) {
    common_field(d, e.d());
    out.push_back(e.r());
    if (d != 0) out.push_back(e.s());
  }
  return out;
}

namespace {

// g = x*a + y*b
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

void swap_columns(IntMatrix& h, int i, int j) {
  for (auto& row : h) std::swap(row[i], row[j]);
}

}  // namespace

HermiteForm column_hermite_form(IntMatrix a) {
  HermiteForm out;
  out.h = std::move(a);
  IntMatrix& h = out.h;
  if (h.empty()) return out;
  const int rows = static_cast<int>(h.size());
  const int cols = static_cast<int>(h[0].size());
  int c = 0;
  for (int i = 0; i < rows && c < cols; ++i) {
    for (int j = c + 1; j < cols; ++j) {
      if (h[i][j] == 0) continue;
      if (h[i][c] == 0) {
        swap_columns(h, c, j);
        continue;
      }
      Integer x, y;
      const Integer g = extended_gcd(h[i][c], h[i][j], x, y);
      const Integer p = h[i][c] / g;
      const Integer q = h[i][j] / g;
      // [col_c col_j] <- [col_c col_j] * [[x, -q], [y, p]], determinant 1.
      for (int k = 0; k < rows; ++k) {
        const Integer vc = h[k][c];
        const Integer vj = h[k][j];
        h[k][c] = x * vc + y * vj;
        h[k][j] = -q * vc + p * vj;
      }
    }
    if (h[i][c] != 0) {
      if (h[i][c] < 0)
        for (int k = 0; k < rows; ++k) h[k][c] = -h[k][c];
      out.pivot_rows.push_back(i);
      ++c;
    }
  }
  return out;
}

std::optional<std::vector<Integer>> solve_echelon(const HermiteForm& hf, std::span<const Integer> b) {
  const IntMatrix& h = hf.h;
  const int rows = static_cast<int>(h.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(h[0].size());
  std::vector<Integer> y(cols, 0);
  std::size_t next_pivot = 0;
  int known = 0;  // y[0..known) are fixed
  for (int i = 0; i < rows; ++i) {
    Integer acc = 0;
    for (int j = 0; j < known; ++j) acc += h[i][j] * y[j];
    const Integer rest = b[i] - acc;
    if (next_pivot < hf.pivot_rows.size() && hf.pivot_rows[next_pivot] == i) {
      const Integer& lead = h[i][known];
      if (rest % lead != 0) return std::nullopt;
      y[known] = rest / lead;
      ++known;
      ++next_pivot;
    } else if (rest != 0) {
      return std::nullopt;
    }
  }
  return y;
}

namespace {

struct ScaledSystem {
  IntMatrix a;
  std::vector<Integer> b;
};

ScaledSystem scale_to_integers(const std::vector<std::vector<Rational>>& a, std::span<const Rational> b) {
  ScaledSystem out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer l = 1;
    for (const auto& e : a[i]) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(e));
    if (!b.empty()) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(b[i]));
    std::vector<Integer> row;
    row.reserve(a[i].size());
    for (const auto& e : a[i]) row.push_back(boost::multiprecision::numerator(Rational(e * l)));
    out.a.push_back(std::move(row));
    if (!b.empty()) out.b.push_back(boost::multiprecision::numerator(Rational(b[i] * l)));
  }
  return out;
}

}  // namespace

bool integer_solvable(const std::vector<std::vector<Rational>>& a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw PreconditionError("integer_solvable: dimension mismatch");
  ScaledSystem s = scale_to_integers(a, b);
  const HermiteForm hf = column_hermite_form(std::move(s.a));
  return solve_echelon(hf, s.b).has_value();
}

int rational_rank(const std::vector<std::vector<Rational>>& a) {
  ScaledSystem s = scale_to_integers(a, {});
  return column_hermite_form(std::move(s.a)).rank();
}

}  // namespace quasitoric
