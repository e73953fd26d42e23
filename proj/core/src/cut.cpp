#include "quasitoric/cut.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quasitoric/errors.hpp"

namespace quasitoric {

namespace {

bool on_sphere(std::complex<double> v, double z, double tol) { return std::abs(std::norm(v) + z * z - 1.0) <= tol; }

std::string describe(const SpherePoint& s) {
  std::ostringstream os;
  os << "(|u|^2=" << s.u_sq << ", z=" << s.z << ")";
  return os.str();
}

}  // namespace

bool CutResult::in_open_region(const Vec2& mu) const {
  return kept_piece.contains(mu) && dot(mu, nu) > level;
}

CutResult cut_polyhedron(const Polyhedron2& p, const Quasilattice& q, const Vec2& nu, const QuadScalar& c) {
  if (nu.is_zero()) throw PreconditionError("cut direction is zero");
  const HalfPlane keep{nu, c};
  const HalfPlane drop{-nu, -c};
  const auto kept = intersect_halfplane(p, keep);
  const auto other = intersect_halfplane(p, drop);
  if (!kept || !other || kept->dimension() != 2 || other->dimension() != 2)
    throw DomainError("nothing to cut: the cut line misses the interior of the polyhedron");
  auto face_hrep = p.hrep();
  face_hrep.push_back(keep);
  face_hrep.push_back(drop);

  std::optional<GroupDesc> gamma;
  if (is_lattice(q)) {
    gamma = extension_quotient(q, nu);
  } else if (q.contains(nu)) {
    gamma = GroupDesc{GroupKind::trivial, 1, QuadScalar(0)};
  }
  return CutResult{*kept, *other, vrep_from_hrep(face_hrep), nu, c, augment(q, nu), gamma};
}

CutMomentMaps cut_moment_maps(const ParamSpec& a) { return {a.value, {QuadScalar(-1), a.value, QuadScalar(-1)}}; }

double eval_phi(const CutMomentMaps& maps, std::complex<double> u, std::complex<double> v, double z, double tol) {
  if (!on_sphere(v, z, tol)) throw DomainError("point is off the sphere |v|^2 + z^2 = 1");
  return -std::norm(u) + maps.a.to_double() * (z + 1.0) / 2.0;
}

double eval_nu_minus(const CutMomentMaps& maps, std::complex<double> u, std::complex<double> v, double z,
                     std::complex<double> w, double tol) {
  return eval_phi(maps, u, v, z, tol) - std::norm(w);
}

QuadScalar eval_phi_exact(const CutMomentMaps& maps, const QuadScalar& u_sq, const QuadScalar& v_sq, const QuadScalar& z) {
  if (u_sq.sign() < 0 || v_sq.sign() < 0) throw DomainError("squared moduli must be nonnegative");
  if (v_sq + z * z != QuadScalar(1)) throw DomainError("point is off the sphere |v|^2 + z^2 = 1");
  return -u_sq + maps.a * (z + 1) / QuadScalar(2);
}

QuadScalar eval_nu_minus_exact(const CutMomentMaps& maps, const QuadScalar& u_sq, const QuadScalar& v_sq,
                               const QuadScalar& z, const QuadScalar& w_sq) {
  if (w_sq.sign() < 0) throw DomainError("squared moduli must be nonnegative");
  return eval_phi_exact(maps, u_sq, v_sq, z) - w_sq;
}

DecompositionReport cut_decomposition_check(const CutResult& r, const ParamSpec& a, const std::vector<SpherePoint>& samples) {
  const CutMomentMaps maps = cut_moment_maps(a);
  DecompositionReport report;
  for (const auto& s : samples) {
    ++report.checked;
    const QuadScalar phi = eval_phi_exact(maps, s.u_sq, QuadScalar(1) - s.z * s.z, s.z);
    const Vec2 image{s.u_sq, (s.z + 1) / QuadScalar(2)};
    const bool on_face = r.reduced_face.contains(image);
    const bool open = r.in_open_region(image);
    const bool other = r.other_piece.contains(image) && !on_face;
    const int side = (phi + 1).sign();
    const bool agrees = (side > 0 && open && !on_face && !other) || (side == 0 && on_face && !open) ||
                        (side < 0 && other && !open);
    if (side > 0) ++report.open_region;
    if (side == 0) ++report.reduced_face;
    if (side < 0) ++report.other_piece;
    if (!agrees) report.mismatches.push_back("sample " + describe(s) + " with Phi_Y = " + phi.to_string());
  }
  return report;
}

Polyhedron2 blowup_corner(const Polyhedron2& p, const Vec2& vertex, const Vec2& nu, const QuadScalar& epsilon) {
  const auto& vs = p.vertices();
  if (std::find(vs.begin(), vs.end(), vertex) == vs.end()) {
    std::ostringstream msg;
    msg << "blow-up point " << vertex << " is not a vertex";
    throw PreconditionError(msg.str());
  }
  if (epsilon.sign() < 0) throw PreconditionError("blow-up amount must be nonnegative");
  if (nu.is_zero()) throw PreconditionError("blow-up direction is zero");
  if (epsilon.is_zero()) return p;
  const QuadScalar c = dot(vertex, nu) + epsilon;
  for (const auto& w : vs) {
    if (w != vertex && dot(w, nu) <= c) {
      std::ostringstream msg;
      msg << "amount too large: the chop also removes vertex " << w;
      throw DomainError(msg.str());
    }
  }
  for (const auto& ray : p.rays())
    if (dot(ray, nu).sign() < 0) throw DomainError("amount too large: the chop cuts into an unbounded direction");
  const auto out = intersect_halfplane(p, {nu, c});
  if (!out) throw DomainError("amount too large: nothing remains");
  return *out;
}

}  // namespace quasitoric
