#include "quasitoric/quasilattice.hpp"

#include <algorithm>

#include "quasitoric/errors.hpp"

namespace quasitoric {

namespace {

std::int64_t field_of(const std::vector<Vec2>& vs) {
  std::int64_t d = 0;
  for (const auto& v : vs) d = common_field(common_field(d, v.x.d()), v.y.d());
  return d;
}

std::vector<Rational> coords(const Vec2& v, std::int64_t d) {
  const QuadScalar xy[] = {v.x, v.y};
  return rational_coordinates(xy, d);
}

// Rational coordinate vectors as the columns of a matrix.
std::vector<std::vector<Rational>> column_matrix(const std::vector<Vec2>& columns, std::int64_t d) {
  const std::size_t rows = d == 0 ? 2 : 4;
  std::vector<std::vector<Rational>> m(rows);
  for (const auto& v : columns) {
    const auto c = coords(v, d);
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(c[i]);
  }
  return m;
}

Vec2 from_coords(const std::vector<Rational>& c, std::int64_t d) {
  if (d == 0) return {QuadScalar(c[0]), QuadScalar(c[1])};
  return {QuadScalar(c[0], c[1], d), QuadScalar(c[2], c[3], d)};
}

}  // namespace

Quasilattice::Quasilattice(std::vector<Vec2> generators, std::optional<ParamSpec> param)
    : generators_(std::move(generators)), param_(std::move(param)) {
  bool spans = false;
  for (std::size_t i = 0; i < generators_.size() && !spans; ++i)
    for (std::size_t j = i + 1; j < generators_.size() && !spans; ++j)
      spans = !cross(generators_[i], generators_[j]).is_zero();
  if (!spans) throw PreconditionError("quasilattice generators do not span the plane");
}

Quasilattice Quasilattice::integer_lattice() { return Quasilattice({{1, 0}, {0, 1}}); }

Quasilattice Quasilattice::hirzebruch(const ParamSpec& a) {
  return Quasilattice({{1, 0}, {0, 1}, {-1, a.value}}, a);
}

bool Quasilattice::contains(const Vec2& v) const {
  std::vector<Vec2> all = generators_;
  all.push_back(v);
  const std::int64_t d = field_of(all);
  return integer_solvable(column_matrix(generators_, d), coords(v, d));
}

bool member(const Quasilattice& q, const Vec2& v) { return q.contains(v); }

bool membership_equivalent(const Quasilattice& a, const Quasilattice& b) {
  const auto inside = [](const Quasilattice& from, const Quasilattice& into) {
    return std::all_of(from.generators().begin(), from.generators().end(),
                       [&](const Vec2& g) { return into.contains(g); });
  };
  return inside(a, b) && inside(b, a);
}

int group_rank(const Quasilattice& q) {
  return rational_rank(column_matrix(q.generators(), field_of(q.generators())));
}

bool is_lattice(const Quasilattice& q) { return group_rank(q) == 2; }

std::pair<Vec2, Vec2> lattice_basis(const Quasilattice& q) {
  const std::int64_t d = field_of(q.generators());
  const auto m = column_matrix(q.generators(), d);
  Integer scale = 1;
  for (const auto& row : m)
    for (const auto& e : row) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(e));
  IntMatrix scaled;
  for (const auto& row : m) {
    std::vector<Integer> r;
    for (const auto& e : row) r.push_back(boost::multiprecision::numerator(Rational(e * scale)));
    scaled.push_back(std::move(r));
  }
  const HermiteForm hf = column_hermite_form(std::move(scaled));
  if (hf.rank() != 2) throw PreconditionError("quasilattice is not discrete; it has no lattice basis");
  std::vector<Vec2> basis;
  for (int col = 0; col < 2; ++col) {
    std::vector<Rational> c;
    for (const auto& row : hf.h) c.push_back(Rational(row[col]) / scale);
    basis.push_back(from_coords(c, d));
  }
  // Orient the basis positively so determinants read naturally.
  if (cross(basis[0], basis[1]).sign() < 0) basis[1] = -basis[1];
  return {basis[0], basis[1]};
}

bool ray_meets(const Quasilattice& q, const Vec2& g) {
  if (g.is_zero()) throw PreconditionError("ray generator is zero");
  std::vector<Vec2> all = q.generators();
  all.push_back(g);
  const std::int64_t d = field_of(all);
  // t*g with t = t1 + t2*sqrt(d) ranges over the rational span of these.
  std::vector<Vec2> scaled_ray{g};
  if (d != 0) scaled_ray.push_back(QuadScalar::sqrt(d) * g);
  const auto ray_m = column_matrix(scaled_ray, d);
  const auto gen_m = column_matrix(q.generators(), d);
  auto joint = ray_m;
  for (std::size_t i = 0; i < joint.size(); ++i) joint[i].insert(joint[i].end(), gen_m[i].begin(), gen_m[i].end());
  // The two rational subspaces meet nontrivially, and any rational point of
  // the intersection scales to an integer one.
  return rational_rank(ray_m) + rational_rank(gen_m) > rational_rank(joint);
}

std::optional<PrimitiveRay> primitive_ray(const Quasilattice& q, const Vec2& g) {
  if (g.is_zero()) throw PreconditionError("ray generator is zero");
  const auto [b1, b2] = lattice_basis(q);
  const QuadScalar det = cross(b1, b2);
  const QuadScalar alpha = cross(g, b2) / det;
  const QuadScalar beta = cross(b1, g) / det;
  PrimitiveRay out;
  if (alpha.is_zero() || beta.is_zero()) {
    out.m = alpha.sign();
    out.n = beta.sign();
    out.label = abs(alpha.is_zero() ? beta : alpha);
  } else {
    const QuadScalar ratio = alpha / beta;
    if (!ratio.is_rational()) return std::nullopt;
    Integer num = boost::multiprecision::numerator(ratio.r());
    Integer den = boost::multiprecision::denominator(ratio.r());
    QuadScalar c = beta / QuadScalar(Rational(den));
    if (c.sign() < 0) {
      num = -num;
      den = -den;
      c = -c;
    }
    out.m = num;
    out.n = den;
    out.label = c;
  }
  out.primitive = QuadScalar(Rational(out.m)) * b1 + QuadScalar(Rational(out.n)) * b2;
  return out;
}

Quasilattice augment(const Quasilattice& q, const Vec2& nu) {
  if (nu.is_zero()) throw PreconditionError("cannot augment by the zero vector");
  std::vector<Vec2> gens = q.generators();
  gens.push_back(nu);
  return Quasilattice(std::move(gens));
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::trivial:
      return "trivial";
    case GroupKind::finite_cyclic:
      return "finite_cyclic";
    case GroupKind::dense_cyclic:
      return "dense_cyclic";
  }
  return "unknown";
}

std::string GroupDesc::describe() const {
  const std::string turn = "rotations by integer multiples of 2*pi*(" + rotation.to_string() + ")";
  switch (kind) {
    case GroupKind::trivial:
      return "trivial group";
    case GroupKind::finite_cyclic:
      return "Z/" + order.str() + "Z, " + turn;
    case GroupKind::dense_cyclic:
      return "infinite cyclic, dense in S^1, " + turn;
  }
  return {};
}

GroupDesc gamma_quotient(const Quasilattice& q) {
  if (!q.param()) throw UnsupportedError("gamma_quotient needs a quasilattice tagged with its parameter a");
  const ParamSpec& a = *q.param();
  GroupDesc g;
  g.rotation = a.value;
  if (!a.rational) {
    g.kind = GroupKind::dense_cyclic;
    g.order = 0;
  } else if (a.q == 1) {
    g.kind = GroupKind::trivial;
    g.order = 1;
  } else {
    g.kind = GroupKind::finite_cyclic;
    g.order = a.q;
  }
  return g;
}

GroupDesc extension_quotient(const Quasilattice& lattice, const Vec2& nu) {
  const auto [b1, b2] = lattice_basis(lattice);
  const QuadScalar det = cross(b1, b2);
  const QuadScalar alpha = cross(nu, b2) / det;
  const QuadScalar beta = cross(b1, nu) / det;
  GroupDesc g;
  g.rotation = beta;
  if (!alpha.is_rational() || !beta.is_rational()) {
    g.kind = GroupKind::dense_cyclic;
    g.order = 0;
    return g;
  }
  g.order = boost::multiprecision::lcm(boost::multiprecision::denominator(alpha.r()),
                                       boost::multiprecision::denominator(beta.r()));
  g.kind = g.order == 1 ? GroupKind::trivial : GroupKind::finite_cyclic;
  return g;
}

}  // namespace quasitoric
