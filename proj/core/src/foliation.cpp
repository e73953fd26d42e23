#include "quasitoric/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quasitoric/errors.hpp"

namespace quasitoric {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

Complex to_complex(const ComplexK& c) { return {c.re.to_double(), c.im.to_double()}; }

ProjPoint act(Complex t, const ProjPoint& z, const PointConfig& lambda, bool conjugated) {
  if (lambda.m != 1 || lambda.size() != z.size())
    throw PreconditionError("action needs a planar configuration with one point per coordinate");
  std::vector<Complex> out(z.z.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    Complex l = to_complex(lambda.at(static_cast<int>(j)));
    if (conjugated) l = std::conj(l);
    out[j] = std::exp(Complex(0, two_pi) * l * t) * z.z[j];
  }
  return ProjPoint(std::move(out)).normalized();
}

// w' = exp(2 pi i mu) w
Complex phase_log(Complex w, Complex w2) {
  const Complex ratio = w2 / w;
  return {std::arg(ratio) / two_pi, -std::log(std::abs(ratio)) / two_pi};
}

double distance_to_integers(double x) { return std::abs(x - std::round(x)); }

// Distance from x to the nearest element of Z + aZ, searching the aZ part
// over a bounded window when a is irrational.
double distance_to_span(double x, const ParamSpec& a) {
  if (a.rational) {
    const double q = static_cast<double>(a.q);
    return distance_to_integers(q * x) / q;
  }
  const double av = a.value.to_double();
  const long bound = static_cast<long>(std::ceil(std::abs(x) / std::min(1.0, av))) + 2;
  double best = distance_to_integers(x);
  for (long n = -bound; n <= bound; ++n) best = std::min(best, distance_to_integers(x - static_cast<double>(n) * av));
  return best;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<Complex> coords) : z(std::move(coords)) {
  if (std::all_of(z.begin(), z.end(), [](Complex c) { return c == Complex(0); }))
    throw DomainError("homogeneous coordinates are all zero");
}

ProjPoint ProjPoint::normalized() const {
  std::size_t k = 0;
  for (std::size_t j = 1; j < z.size(); ++j)
    if (std::abs(z[j]) > std::abs(z[k])) k = j;
  std::vector<Complex> out = z;
  const Complex scale = z[k];
  for (auto& c : out) c /= scale;
  return ProjPoint(std::move(out));
}

LVMDatum::LVMDatum(PointConfig l, VirtualChamber c, ParamSpec param)
    : lambda(std::move(l)), chamber(std::move(c)), a(std::move(param)) {
  if (lambda.m != 1 || lambda.size() != 5) throw PreconditionError("LVM datum needs five points in C");
  if (!affine_equivalent(lambda, standard_lambda(a)))
    throw PreconditionError("point configuration is not affinely equivalent to (i, 1, 1+ia, i, 0)");
  for (const auto& s : chamber.subsets)
    if (!s.count(5)) throw PreconditionError("every chamber element must contain the label 5");
}

PointConfig standard_lambda(const ParamSpec& a) {
  return PointConfig::planar({{0, 1}, {1, 0}, {1, a.value}, {0, 1}, {0, 0}});
}

bool in_U(const ProjPoint& z, const VirtualChamber& chamber, double tol) {
  const ProjPoint n = z.normalized();
  return std::any_of(chamber.subsets.begin(), chamber.subsets.end(), [&](const IndexSet& s) {
    return std::all_of(s.begin(), s.end(), [&](int label) {
      if (label < 1 || label > n.size()) throw PreconditionError("chamber label out of range");
      return std::abs(n.z[label - 1]) > tol;
    });
  });
}

ProjPoint act_c_lambda(Complex t, const ProjPoint& z, const PointConfig& lambda) { return act(t, z, lambda, false); }

ProjPoint act_conjugate(Complex t, const ProjPoint& z, const PointConfig& lambda) { return act(t, z, lambda, true); }

std::string to_string(LeafTopology t) {
  switch (t) {
    case LeafTopology::torus_T2:
      return "torus_T2";
    case LeafTopology::cylinder_S1xR:
      return "cylinder_S1xR";
    case LeafTopology::torus_T3:
      return "torus_T3";
  }
  return "unknown";
}

LeafReport classify_leaves(const ParamSpec& a) {
  LeafReport r;
  r.a = a;
  if (a.rational) {
    r.generic_leaf = LeafTopology::torus_T2;
    r.generic_closure = LeafTopology::torus_T2;
    r.leaf_z2z3_nonzero = a.q == 1 ? "C/(Z+iZ)" : "C/(Z+i" + a.q.str() + "Z)";
    r.leaf_z2_or_z3_zero = "C/(Z+iZ)";
    r.covering_degree = a.q;
    r.notes.push_back("the generic leaf winds " + a.q.str() + " time(s) around a leaf with z2 = 0");
  } else {
    r.generic_leaf = LeafTopology::cylinder_S1xR;
    r.generic_closure = LeafTopology::torus_T3;
    r.leaf_z2z3_nonzero = "C*";
    r.leaf_z2_or_z3_zero = "compact complex torus";
  }
  r.notes.push_back("leaf complex structures depend on the choice of Gale dual; the leaf space F_a does not");
  return r;
}

std::vector<Complex> project(const ProjPoint& z, double tol) {
  const ProjPoint n = z.normalized();
  const Complex last = n.z.back();
  if (std::abs(last) <= tol) throw DomainError("last homogeneous coordinate vanishes: point is outside U(T*)");
  std::vector<Complex> out;
  for (std::size_t j = 0; j + 1 < n.z.size(); ++j) out.push_back(n.z[j] / last);
  return out;
}

Equivalence equivalent_in_Fa(const std::vector<Complex>& w, const std::vector<Complex>& w2, const ParamSpec& a, double tol) {
  if (w.size() != 4 || w2.size() != 4) throw PreconditionError("points of F_a have four coordinates");
  std::optional<Complex> mu[4];
  for (int j = 0; j < 4; ++j) {
    const bool zero = std::abs(w[j]) <= tol;
    const bool zero2 = std::abs(w2[j]) <= tol;
    if (zero != zero2) return {false, std::numeric_limits<double>::infinity()};
    if (!zero) mu[j] = phase_log(w[j], w2[j]);
  }
  double residual = 0;
  if (mu[0] && mu[3]) {
    const Complex d = *mu[0] - *mu[3];
    residual = std::max({residual, distance_to_integers(d.real()), std::abs(d.imag())});
  }
  const std::optional<Complex> mu_u = mu[0] ? mu[0] : mu[3];
  // With u or v unconstrained, the third coordinate can always be matched.
  if (mu_u && mu[1] && mu[2]) {
    const Complex x = *mu[2] - *mu[1] - a.value.to_double() * *mu_u;
    residual = std::max({residual, distance_to_span(x.real(), a), std::abs(x.imag())});
  }
  return {residual < tol, residual};
}

InvarianceReport verify_projection_invariance(const LVMDatum& datum, const std::vector<ProjPoint>& samples,
                                              const std::vector<Complex>& t_values, double tol) {
  InvarianceReport report;
  for (const auto& z : samples) {
    const auto base = project(z, tol);
    for (const Complex t : t_values) {
      for (const bool conjugated : {false, true}) {
        const ProjPoint moved = conjugated ? act_conjugate(t, z, datum.lambda) : act_c_lambda(t, z, datum.lambda);
        const Equivalence e = equivalent_in_Fa(base, project(moved, tol), datum.a, tol);
        ++report.checks;
        if (!e.equivalent) ++report.failures;
        report.max_residual = std::max(report.max_residual, e.residual);
      }
    }
  }
  return report;
}

std::optional<int> phase_return_time(const ParamSpec& a, int max_t) {
  for (int t = 1; t <= max_t; ++t)
    if ((a.value * t).is_integer()) return t;
  return std::nullopt;
}

double min_phase_distance(const ParamSpec& a, int max_t) {
  double best = std::numeric_limits<double>::infinity();
  for (int t = 1; t <= max_t; ++t) {
    const QuadScalar at = a.value * t;
    const double frac = (at - QuadScalar(Rational(at.floor()))).to_double();
    best = std::min(best, std::min(frac, 1.0 - frac));
  }
  return best;
}

}  // namespace quasitoric
