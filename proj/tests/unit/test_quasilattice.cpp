#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/quasilattice.hpp"

namespace {

using namespace quasitoric;

const QuadScalar r2 = QuadScalar::sqrt(2);

Quasilattice qa(const char* a) { return Quasilattice::hirzebruch(ParamSpec::parse(a)); }

TEST(Quasilattice, Membership) {
  EXPECT_TRUE(member(qa("sqrt(2)"), {1, QuadScalar(3) - QuadScalar(2) * r2}));
  EXPECT_TRUE(oracle::brute_force_member(qa("sqrt(2)").generators(), {1, QuadScalar(3) - QuadScalar(2) * r2}, 4));
  EXPECT_FALSE(member(qa("sqrt(2)"), {Rational(1, 2), 0}));
  EXPECT_TRUE(member(qa("3/2"), {0, Rational(1, 2)}));
  EXPECT_FALSE(member(qa("3/2"), {0, Rational(1, 3)}));
  EXPECT_FALSE(member(qa("sqrt(2)"), {0, QuadScalar::sqrt(2) / QuadScalar(2)}));
}

TEST(Quasilattice, NeedsSpanningGenerators) {
  EXPECT_THROW(Quasilattice({{1, 0}, {2, 0}}), PreconditionError);
}

TEST(Quasilattice, Rank) {
  EXPECT_EQ(group_rank(qa("2")), 2);
  EXPECT_EQ(group_rank(qa("3/2")), 2);
  EXPECT_EQ(group_rank(qa("sqrt(2)")), 3);
  EXPECT_TRUE(is_lattice(qa("5/3")));
  EXPECT_FALSE(is_lattice(qa("1+sqrt(2)")));
  EXPECT_THROW(lattice_basis(qa("sqrt(2)")), PreconditionError);
}

TEST(Quasilattice, GammaQuotient) {
  EXPECT_EQ(gamma_quotient(qa("2")).kind, GroupKind::trivial);
  const auto g = gamma_quotient(qa("3/2"));
  EXPECT_EQ(g.kind, GroupKind::finite_cyclic);
  EXPECT_EQ(g.order, 2);
  const auto h = gamma_quotient(qa("sqrt(2)"));
  EXPECT_EQ(h.kind, GroupKind::dense_cyclic);
  EXPECT_EQ(h.order, 0);
  EXPECT_EQ(h.rotation, r2);
  EXPECT_THROW(gamma_quotient(Quasilattice::integer_lattice()), UnsupportedError);
}

TEST(Quasilattice, Augment) {
  const auto z2 = Quasilattice::integer_lattice();
  EXPECT_TRUE(membership_equivalent(augment(z2, {-1, r2}), qa("sqrt(2)")));
  EXPECT_TRUE(membership_equivalent(augment(z2, {-1, 2}), z2));
  EXPECT_TRUE(membership_equivalent(augment(qa("sqrt(2)"), {0, 1}), qa("sqrt(2)")));
  EXPECT_FALSE(membership_equivalent(qa("sqrt(2)"), z2));
}

TEST(Quasilattice, ExtensionQuotient) {
  const auto z2 = Quasilattice::integer_lattice();
  EXPECT_EQ(extension_quotient(z2, {-1, 2}).kind, GroupKind::trivial);
  const auto g = extension_quotient(z2, {-1, Rational(3, 2)});
  EXPECT_EQ(g.kind, GroupKind::finite_cyclic);
  EXPECT_EQ(g.order, 2);
  EXPECT_EQ(extension_quotient(z2, {-1, r2}).kind, GroupKind::dense_cyclic);
}

TEST(Quasilattice, PrimitiveRay) {
  const auto z2 = Quasilattice::integer_lattice();
  const auto r = primitive_ray(z2, {2, 4});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->primitive, (Vec2{1, 2}));
  EXPECT_EQ(r->label, QuadScalar(2));
  EXPECT_FALSE(primitive_ray(z2, {-1, r2}).has_value());
  EXPECT_TRUE(ray_meets(z2, {Rational(1, 3), Rational(2, 3)}));
  EXPECT_FALSE(ray_meets(z2, {1, r2}));
  EXPECT_TRUE(ray_meets(qa("sqrt(2)"), {-1, r2}));
}

// Exact membership agrees with a bounded brute-force search on vectors that
// are either combinations with small coefficients or random perturbations.
TEST(QuasilatticeProperty, MatchesBruteForce) {
  gen::Engine e(0xbadc0de);
  const char* params[] = {"sqrt(2)", "3/2", "2", "1+sqrt(2)", "5/3"};
  for (int i = 0; i < 250; ++i) {
    const auto q = qa(params[i % 5]);
    const auto& g = q.generators();
    Vec2 v;
    for (const auto& gi : g) v += QuadScalar(gen::integer(e, -3, 3)) * gi;
    if (e() % 2) v.y += QuadScalar(Rational(1, gen::integer(e, 2, 5)));
    EXPECT_EQ(member(q, v), oracle::brute_force_member(g, v, 8)) << params[i % 5] << " " << v;
  }
}

}  // namespace
