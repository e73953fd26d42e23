#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/hirzebruch.hpp"

namespace {

using namespace quasitoric;

const QuadScalar r2 = QuadScalar::sqrt(2);

PointConfig planar(std::vector<Vec2> pts) {
  std::vector<ComplexK> c;
  for (const auto& p : pts) c.push_back({p.x, p.y});
  return PointConfig::planar(std::move(c));
}

std::vector<std::vector<Vec2>> chamber_triangles(const PointConfig& l, const VirtualChamber& c) {
  std::vector<std::vector<Vec2>> out;
  for (const auto& s : c.subsets) {
    std::vector<Vec2> t;
    for (int j : s) t.push_back(l.at(j - 1).as_vec());
    out.push_back(t);
  }
  return out;
}

VirtualChamber standard_chamber() { return chamber_from_triangulation(hirzebruch::triangulation(), 5); }

TEST(Gale, BalancedAndOdd) {
  const auto a = ParamSpec::parse("2");
  EXPECT_FALSE(is_balanced(hirzebruch::primal_config(a)));
  EXPECT_TRUE(is_balanced(hirzebruch::vector_config(a)));
  EXPECT_TRUE(is_odd(hirzebruch::vector_config(a)));
  const VectorConfig tri{{{1, 0}, {0, 1}, {-1, -1}}, {}};
  EXPECT_TRUE(is_balanced(tri));
  EXPECT_TRUE(is_odd(tri));
  EXPECT_THROW((VectorConfig{{{1, 0}, {-1, 0}}, {}}.validate()), PreconditionError);
}

TEST(Gale, AugmentGhosts) {
  for (const char* text : {"2", "3/2", "sqrt(2)"}) {
    const auto a = ParamSpec::parse(text);
    const auto v = augment_ghosts(hirzebruch::primal_config(a));
    EXPECT_EQ(v.vectors, hirzebruch::vector_config(a).vectors);
    EXPECT_EQ(v.ghosts, IndexSet{5});
  }
  const VectorConfig tri{{{1, 0}, {0, 1}, {-1, -1}}, {}};
  EXPECT_EQ(augment_ghosts(tri).vectors, tri.vectors);
  // Balanced with even count: a zero-sum triple restores odd parity.
  const VectorConfig cross{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {}};
  const auto fixed = augment_ghosts(cross);
  EXPECT_TRUE(is_balanced(fixed));
  EXPECT_TRUE(is_odd(fixed));
  EXPECT_EQ(fixed.size(), 7);
  EXPECT_EQ(fixed.ghosts, (IndexSet{5, 6, 7}));
}

TEST(Gale, RelationBasisOfVa) {
  const auto a = ParamSpec::parse("sqrt(2)");
  const Matrix expected{{1, 1, 1, 1, 1}, {0, 1, 1, 0, 0}, {1, 0, a.value, 1, 0}};
  EXPECT_EQ(relation_basis(hirzebruch::vector_config(a)), expected);
  const VectorConfig tri{{{1, 0}, {0, 1}, {-1, -1}}, {}};
  EXPECT_EQ(relation_basis(tri), (Matrix{{1, 1, 1}}));
  EXPECT_THROW(relation_basis(hirzebruch::primal_config(a)), PreconditionError);
}

TEST(Gale, RelationBasisAnnihilatesAndIsIndependent) {
  const auto v = hirzebruch::vector_config(ParamSpec::parse("2"));
  const auto b = relation_basis(v);
  EXPECT_EQ(oracle::rank(b), 3);
  for (const auto& row : b) {
    Vec2 s;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v.vectors[j];
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Gale, DualOfVa) {
  for (const char* text : {"2", "sqrt(2)", "3/2"}) {
    const auto a = ParamSpec::parse(text);
    EXPECT_EQ(gale_dual(hirzebruch::vector_config(a)), standard_lambda(a)) << text;
  }
  const auto l2 = gale_dual(hirzebruch::vector_config(ParamSpec::parse("2")));
  EXPECT_EQ(l2.at(2), (ComplexK{1, 2}));
  EXPECT_EQ(l2.at(4), (ComplexK{0, 0}));
  EXPECT_THROW(gale_dual(hirzebruch::primal_config(ParamSpec::parse("2"))), PreconditionError);
}

TEST(Gale, Chamber) {
  const auto c = standard_chamber();
  const std::set<IndexSet> got(c.subsets.begin(), c.subsets.end());
  const std::set<IndexSet> expected{{3, 4, 5}, {1, 3, 5}, {1, 2, 5}, {2, 4, 5}};
  EXPECT_EQ(got, expected);
  // Complements of the chamber recover the maximal simplices.
  std::set<IndexSet> back;
  for (const auto& s : c.subsets) {
    IndexSet comp;
    for (int j = 1; j <= 5; ++j)
      if (!s.count(j)) comp.insert(j);
    back.insert(comp);
  }
  const auto max = hirzebruch::triangulation().maximal();
  EXPECT_EQ(back, std::set<IndexSet>(max.begin(), max.end()));
  EXPECT_EQ(hirzebruch::triangulation().unused_labels(5), IndexSet{5});
  const auto c4 = chamber_from_triangulation(Triangulation{{{1, 2}, {3, 4}, {1}, {}}}, 4);
  EXPECT_EQ(c4.subsets, (std::vector<IndexSet>{{3, 4}, {1, 2}}));
}

TEST(Gale, Polytopal) {
  const auto a = ParamSpec::parse("sqrt(2)");
  const auto l = standard_lambda(a);
  const auto r = is_polytopal(l, standard_chamber());
  ASSERT_TRUE(r.polytopal);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(oracle::open_triangles_meet(chamber_triangles(l, standard_chamber())));
  for (const auto& t : chamber_triangles(l, standard_chamber())) {
    // Strictly inside: all three orientations share a sign.
    const int s0 = cross(t[1] - t[0], *r.witness - t[0]).sign();
    const int s1 = cross(t[2] - t[1], *r.witness - t[1]).sign();
    const int s2 = cross(t[0] - t[2], *r.witness - t[2]).sign();
    EXPECT_TRUE(s0 != 0 && s0 == s1 && s1 == s2);
  }
}

TEST(Gale, PolytopalityIsTranslationInvariant) {
  const auto l = standard_lambda(ParamSpec::parse("3/2"));
  PointConfig moved = l;
  for (auto& p : moved.points) p[0] = {p[0].re + 5, p[0].im - QuadScalar::fraction(7, 3)};
  EXPECT_EQ(is_polytopal(l, standard_chamber()).polytopal, is_polytopal(moved, standard_chamber()).polytopal);
}

// The configuration (i, 1, 1+i, -10+i, 0) stays polytopal: the point
// (1/1000, 1/100) is strictly inside all four chamber triangles.
TEST(Gale, FarMovedFourthPointStaysPolytopal) {
  const auto l = planar({{0, 1}, {1, 0}, {1, 1}, {-10, 1}, {0, 0}});
  EXPECT_TRUE(oracle::open_triangles_meet(chamber_triangles(l, standard_chamber())));
  EXPECT_TRUE(is_polytopal(l, standard_chamber()).polytopal);
}

TEST(Gale, DegenerateTriangleIsNotPolytopal) {
  // Lambda_3, Lambda_4, Lambda_5 are collinear.
  const auto l = planar({{0, 1}, {1, 0}, {0, 2}, {0, 1}, {0, 0}});
  EXPECT_FALSE(is_polytopal(l, standard_chamber()).polytopal);
  EXPECT_FALSE(oracle::open_triangles_meet(chamber_triangles(l, standard_chamber())));
}

TEST(Gale, DisjointTrianglesAreNotPolytopal) {
  const auto l = planar({{0, 0}, {1, 0}, {0, 1}, {10, 10}, {11, 10}, {10, 11}});
  EXPECT_FALSE(is_polytopal(l, VirtualChamber{{{1, 2, 3}, {4, 5, 6}}}).polytopal);
}

TEST(Gale, AffineEquivalence) {
  const auto a = ParamSpec::parse("sqrt(2)");
  const auto l = standard_lambda(a);
  EXPECT_TRUE(affine_equivalent(l, l));
  PointConfig doubled = l;
  for (auto& p : doubled.points) p[0] = {QuadScalar(2) * p[0].re, QuadScalar(2) * p[0].im};
  EXPECT_TRUE(affine_equivalent(l, doubled));
  EXPECT_TRUE(affine_equivalent(l, conjugate(l)));
  EXPECT_EQ(conjugate(l).at(0), (ComplexK{0, -1}));
  // Conjugating only the third point is not a real-affine image.
  const auto partial = planar({{0, 1}, {1, 0}, {1, -a.value}, {0, 1}, {0, 0}});
  EXPECT_FALSE(affine_equivalent(l, partial));
  EXPECT_FALSE(affine_equivalent(l, standard_lambda(ParamSpec::parse("2"))));
}

// relation_basis annihilates random balanced configurations, has full
// rank d - 2, starts with the all-ones row, and, for five vectors, gives
// Gale duals invariant under an invertible linear change of the primal
// vectors.
TEST(GaleProperty, RelationBasisOnRandomConfigs) {
  gen::Engine e(4242);
  for (int i = 0; i < 60; ++i) {
    const auto v = gen::balanced_config(e, i % 2 ? 2 : 0, static_cast<int>(gen::integer(e, 3, 6)));
    const auto b = relation_basis(v);
    EXPECT_EQ(static_cast<int>(b.size()), v.size() - 2);
    EXPECT_EQ(oracle::rank(b), v.size() - 2);
    EXPECT_EQ(b[0], Row(v.size(), QuadScalar(1)));
    for (const auto& row : b) {
      Vec2 s;
      for (int j = 0; j < v.size(); ++j) s += row[j] * v.vectors[j];
      EXPECT_TRUE(s.is_zero());
    }
    if (v.size() != 5) continue;
    VectorConfig w = v;
    for (auto& u : w.vectors) u = {u.x + QuadScalar(2) * u.y, u.y};
    EXPECT_TRUE(affine_equivalent(gale_dual(v), gale_dual(w)));
  }
}

TEST(GaleProperty, AugmentGhostsPostcondition) {
  gen::Engine e(777);
  for (int i = 0; i < 60; ++i) {
    VectorConfig v;
    const int n = static_cast<int>(gen::integer(e, 2, 6));
    do {
      v.vectors.clear();
      for (int k = 0; k < n; ++k) {
        Vec2 u;
        while (u.is_zero()) u = gen::integer_vec(e, 3);
        v.vectors.push_back(u);
      }
    } while (oracle::rank({{v.vectors[0].x, v.vectors[1].x}, {v.vectors[0].y, v.vectors[1].y}}) < 2);
    const auto g = augment_ghosts(v);
    EXPECT_TRUE(is_balanced(g));
    EXPECT_TRUE(is_odd(g));
    EXPECT_TRUE(std::equal(v.vectors.begin(), v.vectors.end(), g.vectors.begin()));
    EXPECT_EQ(static_cast<int>(g.ghosts.size()), g.size() - v.size());
    EXPECT_EQ(augment_ghosts(g).vectors, g.vectors);
  }
}

}  // namespace
