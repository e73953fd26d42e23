#include "quasitoric/delzant.hpp"

#include <cmath>
#include <sstream>

#include "quasitoric/errors.hpp"
#include "quasitoric/gale.hpp"
#include "render.hpp"

namespace quasitoric {

namespace {

std::vector<std::string> squared_names(int d) {
  std::vector<std::string> out;
  for (int i = 1; i <= d; ++i) out.push_back("|z" + std::to_string(i) + "|^2");
  return out;
}

std::vector<std::string> param_names(std::size_t k) {
  if (k == 2) return {"r", "s"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

QuadScalar pairing(const Row& b, std::span<const QuadScalar> v) {
  QuadScalar acc;
  for (std::size_t i = 0; i < b.size(); ++i) acc += b[i] * v[i];
  return acc;
}

void require_annihilates(const Row& b, const std::vector<Vec2>& normals) {
  if (b.size() != normals.size())
    throw PreconditionError("relation row has " + std::to_string(b.size()) + " entries, expected " +
                            std::to_string(normals.size()));
  Vec2 acc;
  for (std::size_t i = 0; i < b.size(); ++i) acc += b[i] * normals[i];
  if (!acc.is_zero()) throw PreconditionError("relation row does not annihilate the facet normals");
}

}  // namespace

PolytopeTriple::PolytopeTriple(Polyhedron2 p, Quasilattice q, std::vector<HalfPlane> extra)
    : p_(std::move(p)), q_(std::move(q)), extra_(std::move(extra)) {
  if (p_.dimension() != 2) throw PreconditionError("polytope triple needs a 2-dimensional polyhedron");
  if (!p_.simple()) throw PreconditionError("polytope triple needs a simple polyhedron");
  const auto xs = normals();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!q_.contains(xs[i])) {
      std::ostringstream msg;
      msg << "normal X" << i + 1 << " = " << xs[i] << " is not in the quasilattice";
      throw PreconditionError(msg.str());
    }
  }
}

std::vector<Vec2> PolytopeTriple::normals() const {
  std::vector<Vec2> out;
  for (const auto& h : p_.hrep()) out.push_back(h.normal);
  for (const auto& h : extra_) out.push_back(h.normal);
  return out;
}

std::vector<QuadScalar> PolytopeTriple::offsets() const {
  std::vector<QuadScalar> out;
  for (const auto& h : p_.hrep()) out.push_back(h.offset);
  for (const auto& h : extra_) out.push_back(h.offset);
  return out;
}

std::string LevelEquation::render() const {
  return detail::linear_form(coefficients, squared_names(static_cast<int>(coefficients.size()))) + " = " +
         constant.to_string();
}

Row PhaseMap::phases(std::span<const QuadScalar> values) const {
  if (values.size() != rows.size()) throw PreconditionError("phase map expects " + std::to_string(rows.size()) + " parameters");
  Row out(rows.empty() ? 0 : rows[0].size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += values[k] * rows[k][i];
  return out;
}

bool PhaseMap::acts_trivially(std::span<const QuadScalar> values) const {
  for (const auto& ph : phases(values))
    if (!ph.is_integer()) return false;
  return true;
}

std::string PhaseMap::render() const {
  if (rows.empty()) return "()";
  std::string out = "(";
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    Row column;
    for (const auto& row : rows) column.push_back(row[i]);
    if (i > 0) out += ", ";
    const std::string phase = detail::linear_form(column, params);
    out += phase == "0" ? "1" : "exp(2*pi*i*(" + phase + "))";
  }
  return out + ")";
}

QuasifoldPresentation presentation(const PolytopeTriple& t) {
  const auto xs = t.normals();
  const auto lambda = t.offsets();
  QuasifoldPresentation out;
  out.d = t.size();

  VectorConfig v{xs, {}};
  if (is_balanced(v)) {
    out.relations = relation_basis(v);
  } else {
    Matrix m(2);
    for (const auto& x : xs) {
      m[0].push_back(x.x);
      m[1].push_back(x.y);
    }
    out.relations = kernel_basis(m, out.d);
  }
  for (const auto& b : out.relations) {
    QuadScalar c = -pairing(b, lambda);
    out.level_equations.push_back({b, c});
    out.constants.push_back(std::move(c));
  }
  out.group = {out.relations, param_names(out.relations.size())};

  const Quasilattice& q = t.quasilattice();
  if (q.param()) {
    out.gamma = gamma_quotient(q);
    out.quasitorus = out.gamma->kind == GroupKind::trivial ? "S^1 x S^1" : "S^1 x (S^1/Gamma), Gamma = " + out.gamma->describe();
  } else if (is_lattice(q)) {
    out.quasitorus = "S^1 x S^1";
  } else {
    out.quasitorus = "R^2/Q, Q of rank " + std::to_string(group_rank(q));
  }

  if (is_lattice(q)) {
    const auto& facets = t.polytope().hrep();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const auto prim = primitive_ray(q, facets[i].normal);
      if (!prim || !prim->label.is_integer()) continue;
      const Integer order = boost::multiprecision::numerator(prim->label.r());
      if (order > 1) out.divisor_orders.push_back({static_cast<int>(i), order});
    }
  }
  return out;
}

std::string MomentComponent::render() const {
  std::string out = detail::linear_form(coefficients, squared_names(static_cast<int>(coefficients.size())));
  if (constant.is_zero()) return out;
  const QuadScalar magnitude = abs(constant);
  const bool compound = !magnitude.is_rational() && !magnitude.r().is_zero();
  out += constant.sign() > 0 ? " + " : " - ";
  out += compound ? "(" + magnitude.to_string() + ")" : magnitude.to_string();
  return out;
}

std::vector<MomentComponent> moment_map_coeffs(const PolytopeTriple& t, const Matrix& relations) {
  const auto xs = t.normals();
  const auto lambda = t.offsets();
  std::vector<MomentComponent> out;
  for (const auto& b : relations) {
    require_annihilates(b, xs);
    out.push_back({b, pairing(b, lambda)});
  }
  return out;
}

std::vector<double> eval_moment_map(std::span<const MomentComponent> coeffs, std::span<const std::complex<double>> z) {
  std::vector<double> out;
  for (const auto& c : coeffs) {
    if (c.coefficients.size() != z.size()) throw PreconditionError("moment map expects " + std::to_string(c.coefficients.size()) + " coordinates");
    double acc = c.constant.to_double();
    for (std::size_t i = 0; i < z.size(); ++i) acc += c.coefficients[i].to_double() * std::norm(z[i]);
    out.push_back(acc);
  }
  return out;
}

Row eval_moment_map_exact(std::span<const MomentComponent> coeffs, std::span<const QuadScalar> squared_moduli) {
  Row out;
  for (const auto& c : coeffs) {
    if (c.coefficients.size() != squared_moduli.size())
      throw PreconditionError("moment map expects " + std::to_string(c.coefficients.size()) + " coordinates");
    out.push_back(pairing(c.coefficients, squared_moduli) + c.constant);
  }
  return out;
}

bool level_set_member(std::span<const MomentComponent> coeffs, std::span<const std::complex<double>> z, double tol) {
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
  for (double r : eval_moment_map(coeffs, z))
    if (std::abs(r) > tol) return false;
  return true;
}

bool level_set_member_exact(std::span<const MomentComponent> coeffs, std::span<const QuadScalar> squared_moduli) {
  for (const auto& r : eval_moment_map_exact(coeffs, squared_moduli))
    if (!r.is_zero()) return false;
  return true;
}

PhaseMap residual_action_weights(const PolytopeTriple& t, const Matrix& relations) {
  if (relations.size() < 3) throw PreconditionError("residual action needs at least three relation rows");
  for (const auto& e : relations[0])
    if (e != QuadScalar(1)) throw PreconditionError("first relation row must be all ones");
  const auto xs = t.normals();
  for (const auto& b : relations) require_annihilates(b, xs);
  return {{relations[2], relations[1]}, {"r", "s"}};
}

Row squared_moduli_at(const PolytopeTriple& t, const Vec2& mu) {
  const auto xs = t.normals();
  const auto lambda = t.offsets();
  Row out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(dot(mu, xs[i]) - lambda[i]);
  return out;
}

}  // namespace quasitoric
