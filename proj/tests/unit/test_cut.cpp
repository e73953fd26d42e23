#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/hirzebruch.hpp"

namespace {

using namespace quasitoric;

const QuadScalar r2 = QuadScalar::sqrt(2);

CutResult cut_strip(const ParamSpec& a) {
  return cut_polyhedron(hirzebruch::strip(), Quasilattice::integer_lattice(), hirzebruch::cut_direction(a), hirzebruch::cut_level());
}

TEST(Cut, StripBySqrt2) {
  const auto r = cut_strip(ParamSpec::parse("sqrt(2)"));
  EXPECT_EQ(r.kept_piece.vertices(), (std::vector<Vec2>{{0, 0}, {1, 0}, {QuadScalar(1) + r2, 1}, {0, 1}}));
  EXPECT_EQ(r.reduced_face.dimension(), 1);
  EXPECT_EQ(r.reduced_face.vertices(), (std::vector<Vec2>{{1, 0}, {QuadScalar(1) + r2, 1}}));
  EXPECT_FALSE(r.other_piece.bounded());
  ASSERT_TRUE(r.gamma.has_value());
  EXPECT_EQ(r.gamma->kind, GroupKind::dense_cyclic);
  EXPECT_TRUE(membership_equivalent(r.augmented_quasilattice, Quasilattice::hirzebruch(ParamSpec::parse("sqrt(2)"))));
}

TEST(Cut, ClassicalAndOrbifoldCases) {
  const auto r2cut = cut_strip(ParamSpec::parse("2"));
  EXPECT_TRUE(same_vrep(r2cut.kept_piece, hirzebruch::trapezoid(ParamSpec::parse("2"))));
  EXPECT_EQ(r2cut.gamma->kind, GroupKind::trivial);
  const auto r32 = cut_strip(ParamSpec::parse("3/2"));
  EXPECT_EQ(r32.gamma->kind, GroupKind::finite_cyclic);
  EXPECT_EQ(r32.gamma->order, 2);
}

TEST(Cut, NothingToCut) {
  EXPECT_THROW(cut_polyhedron(hirzebruch::strip(), Quasilattice::integer_lattice(), {0, 1}, 5), DomainError);
  EXPECT_THROW(cut_polyhedron(hirzebruch::strip(), Quasilattice::integer_lattice(), {0, 0}, 0), PreconditionError);
}

TEST(Cut, OpenRegion) {
  const auto a = ParamSpec::parse("sqrt(2)");
  const auto r = cut_strip(a);
  EXPECT_TRUE(r.in_open_region({Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(r.in_open_region({1, 0}));
  EXPECT_FALSE(r.in_open_region({5, 0}));
}

TEST(Cut, MomentMapValues) {
  const auto ar = ParamSpec::parse("sqrt(2)");
  const auto maps = cut_moment_maps(ar);
  EXPECT_EQ(maps.weights, (Row{-1, r2, -1}));
  EXPECT_EQ(eval_phi_exact(maps, 0, 0, 1), r2);
  EXPECT_EQ(eval_phi_exact(maps, 0, 0, -1), QuadScalar(0));
  EXPECT_NEAR(eval_phi(maps, 0, 0, 1.0, 1e-12), std::sqrt(2.0), 1e-12);
  EXPECT_THROW(eval_phi_exact(maps, 0, 1, 1), DomainError);
  EXPECT_THROW(eval_phi(maps, 0, 1.0, 1.0, 1e-9), DomainError);

  const auto m2 = cut_moment_maps(ParamSpec::parse("2"));
  EXPECT_EQ(eval_phi_exact(m2, 1, 1, 0), QuadScalar(0));
  EXPECT_EQ(eval_nu_minus_exact(m2, 1, 1, 0, 1), QuadScalar(-1));
  EXPECT_NEAR(eval_nu_minus(m2, 1.0, 1.0, 0.0, 1.0, 1e-12), -1.0, 1e-12);
}

TEST(Cut, DecompositionSamples) {
  const auto a = ParamSpec::parse("sqrt(2)");
  const auto r = cut_strip(a);
  // Phi_Y = -1/2 + sqrt(2)/2, on the cut (|u|^2 = a + 1 at z = 1), and below it.
  const std::vector<SpherePoint> samples{{Rational(1, 2), 0}, {1 + a.value, 1}, {5, 0}};
  const auto rep = cut_decomposition_check(r, a, samples);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.open_region, 1);
  EXPECT_EQ(rep.reduced_face, 1);
  EXPECT_EQ(rep.other_piece, 1);
}

TEST(CutProperty, DecompositionOnRandomSamples) {
  gen::Engine e(161803);
  for (const char* text : {"2", "3/2", "sqrt(2)", "1+sqrt(2)"}) {
    const auto a = ParamSpec::parse(text);
    const auto r = cut_strip(a);
    std::vector<SpherePoint> samples;
    for (int i = 0; i < 60; ++i) {
      const QuadScalar z(Rational(gen::integer(e, -4, 4), 4));
      QuadScalar u = QuadScalar(Rational(gen::integer(e, 0, 16), 4));
      // Every fourth sample sits exactly on the cut.
      if (i % 4 == 0) u = a.value * (z + 1) / QuadScalar(2) + 1;
      samples.push_back({u, z});
    }
    const auto rep = cut_decomposition_check(r, a, samples);
    EXPECT_TRUE(rep.ok()) << text << ": " << (rep.mismatches.empty() ? "" : rep.mismatches[0]);
    EXPECT_GE(rep.reduced_face, 15);
  }
}

// Cutting a bounded polygon through its interior splits the area exactly,
// and the two pieces share exactly the endpoints of the reduced face.
TEST(CutProperty, PiecesAreComplementary) {
  gen::Engine e(27182818);
  int cuts = 0;
  for (int i = 0; i < 60; ++i) {
    const auto p = vrep_from_hrep(gen::bounded_polygon(e, i % 2 ? 2 : 0, 5));
    const Vec2 nu = gen::integer_vec(e, 3);
    if (nu.is_zero()) continue;
    const auto c = *feasible_point(p.hrep());
    const QuadScalar level = dot(c, nu);
    const auto r = cut_polyhedron(p, Quasilattice::integer_lattice(), nu, level);
    ++cuts;
    EXPECT_EQ(area(r.kept_piece) + area(r.other_piece), area(p));
    std::vector<Vec2> shared;
    for (const auto& v : r.kept_piece.vertices())
      if (std::find(r.other_piece.vertices().begin(), r.other_piece.vertices().end(), v) != r.other_piece.vertices().end())
        shared.push_back(v);
    auto face = r.reduced_face.vertices();
    std::sort(shared.begin(), shared.end());
    std::sort(face.begin(), face.end());
    EXPECT_EQ(shared, face);
    ASSERT_TRUE(r.gamma.has_value());
  }
  EXPECT_GT(cuts, 40);
}

TEST(Cut, BlowupOfTriangle) {
  for (const char* text : {"2", "sqrt(2)", "3/2"}) {
    const auto a = ParamSpec::parse(text);
    const auto t = hirzebruch::triangle(a);
    EXPECT_EQ(t.vertices(), (std::vector<Vec2>{{0, -a.value.inverse()}, {a.value + 1, 1}, {0, 1}}));
    const auto b = blowup_corner(t, hirzebruch::triangle_corner(a), hirzebruch::blowup_direction(), hirzebruch::blowup_amount(a));
    EXPECT_TRUE(same_vrep(b, hirzebruch::trapezoid(a))) << text;
  }
}

TEST(Cut, BlowupEdgeCases) {
  const auto a = ParamSpec::parse("2");
  const auto t = hirzebruch::triangle(a);
  const auto corner = hirzebruch::triangle_corner(a);
  EXPECT_TRUE(same_vrep(blowup_corner(t, corner, {0, 1}, 0), t));
  EXPECT_THROW(blowup_corner(t, {5, 5}, {0, 1}, 1), PreconditionError);
  EXPECT_THROW(blowup_corner(t, corner, {0, 1}, -1), PreconditionError);
  EXPECT_THROW(blowup_corner(t, corner, {0, 1}, QuadScalar::fraction(3, 2)), DomainError);
  EXPECT_THROW(blowup_corner(hirzebruch::strip(), {0, 0}, {1, 1}, 1), DomainError);
}

// Chopping a random vertex by a small amount removes exactly that vertex,
// adds two, and stays inside the original polygon.
TEST(CutProperty, BlowupsChopOneCorner) {
  gen::Engine e(1234);
  for (int i = 0; i < 30; ++i) {
    const auto p = vrep_from_hrep(gen::bounded_polygon(e, 2, 5));
    const auto& vs = p.vertices();
    const std::size_t k = static_cast<std::size_t>(gen::integer(e, 0, static_cast<long long>(vs.size()) - 1));
    // Sum of the inward facet normals at vs[k]: strictly inside its normal cone.
    Vec2 nu;
    for (int f : p.facets_at(k)) nu += p.hrep()[f].normal;
    QuadScalar gap(-1);
    for (const auto& w : vs)
      if (w != vs[k] && (gap.sign() < 0 || dot(w - vs[k], nu) < gap)) gap = dot(w - vs[k], nu);
    const auto b = blowup_corner(p, vs[k], nu, gap / QuadScalar(3));
    EXPECT_EQ(b.vertices().size(), vs.size() + 1);
    for (const auto& v : b.vertices()) EXPECT_TRUE(p.contains(v));
    EXPECT_LT(area(b), area(p));
    EXPECT_FALSE(b.contains(vs[k]));
  }
}

}  // namespace
