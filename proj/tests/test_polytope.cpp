#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "permsplit/lpm.hpp"
#include "permsplit/polytope.hpp"
#include "test_helpers.hpp"

namespace permsplit {
namespace {

using testing::I;
using testing::P;
using testing::perms;
using testing::S;
using testing::sets;

std::set<RationalPoint> points_of(const std::vector<Permutation>& ps) {
  std::set<RationalPoint> out;
  for (const auto& p : ps) out.emplace(p);
  return out;
}

TEST(Permutahedron, Vertices) {
  EXPECT_EQ(permutahedron_vertices(1), perms({"1"}));
  EXPECT_EQ(permutahedron_vertices(3).size(), 6u);
  EXPECT_EQ(permutahedron_vertices(4).size(), 24u);
}

TEST(Permutahedron, Facets) {
  const auto three = permutahedron_facets(3);
  EXPECT_EQ(three.size(), 7u);
  EXPECT_EQ(three.back().sense, Sense::kEqual);
  EXPECT_EQ(three.back().level, Rational(6));
  const auto four = permutahedron_facets(4);
  EXPECT_EQ(std::count_if(four.begin(), four.end(), [](const auto& c) { return c.sense == Sense::kAtLeast; }), 14);
  const auto it = std::find_if(four.begin(), four.end(), [](const auto& c) { return c.support == S({1, 2}); });
  ASSERT_NE(it, four.end());
  EXPECT_EQ(it->sense, Sense::kAtLeast);
  EXPECT_EQ(it->level, Rational(3));
}

TEST(Permutahedron, Edges) {
  EXPECT_EQ(permutahedron_edges(3).size(), 6u);
  EXPECT_EQ(permutahedron_edges(4).size(), 36u);
  const auto edges = permutahedron_edges(3);
  EXPECT_NE(std::find(edges.begin(), edges.end(), std::pair{P("123"), P("213")}), edges.end());
}

TEST(Faces2D, Counts) {
  const auto three = faces_2d(3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].shape, FaceShape::kHexagon);
  EXPECT_EQ(three[0].min, P("123"));
  EXPECT_EQ(three[0].max, P("321"));
  const auto four = faces_2d(4);
  EXPECT_EQ(std::count_if(four.begin(), four.end(), [](const Face2D& f) { return f.shape == FaceShape::kHexagon; }), 8);
  EXPECT_EQ(std::count_if(four.begin(), four.end(), [](const Face2D& f) { return f.shape == FaceShape::kSquare; }), 6);
  for (const auto& f : four) {
    EXPECT_EQ(f.vertices.size(), f.shape == FaceShape::kHexagon ? 6u : 4u);
    EXPECT_TRUE(bruhat_leq(f.min, f.max));
  }
}

TEST(FlagPolytope, UniformFlag) {
  std::vector<SetMatroid> flag;
  for (int k = 1; k <= 3; ++k) flag.push_back(uniform_matroid(k, 3));
  const auto vertices = flag_polytope_vertices(flag);
  EXPECT_EQ(std::set<RationalPoint>(vertices.begin(), vertices.end()), points_of(permutahedron_vertices(3)));
  EXPECT_NE(std::find(vertices.begin(), vertices.end(), RationalPoint(P("321"))), vertices.end());
}

TEST(FlagPolytope, ExampleTwo) {
  const auto flag = flag_of_interval(I("1324", "3412")).constituents;
  const auto vertices = flag_polytope_vertices(flag);
  EXPECT_EQ(vertices.size(), 10u);
  EXPECT_NE(std::find(vertices.begin(), vertices.end(), RationalPoint(P("3412"))), vertices.end());
  EXPECT_NE(std::find(vertices.begin(), vertices.end(), RationalPoint(P("1324"))), vertices.end());
}

TEST(FlagPolytope, NonBipFlag) {
  const std::vector<SetMatroid> flag{matroid_from_bases(3, sets({"1", "3"})), matroid_from_bases(3, sets({"12", "23"})),
                                     uniform_matroid(3, 3)};
  const auto vertices = flag_polytope_vertices(flag);
  EXPECT_EQ(std::set<RationalPoint>(vertices.begin(), vertices.end()), points_of(perms({"123", "321"})));
}

TEST(FlagPolytope, RejectsNonQuotient) {
  const std::vector<SetMatroid> flag{matroid_from_bases(3, sets({"3"})), matroid_from_bases(3, sets({"12"}))};
  EXPECT_THROW(flag_polytope_vertices(flag), DomainError);
}

TEST(IsBip, Examples) {
  const auto all = permutahedron_vertices(4);
  EXPECT_EQ(is_bip(all), I("1234", "4321"));
  EXPECT_FALSE(is_bip(perms({"123", "321"})));
  EXPECT_EQ(is_bip(bruhat_interval(P("1324"), P("3412"))), I("1324", "3412"));
  const std::vector<RationalPoint> fractional{RationalPoint({Rational(1, 2), Rational(5, 2)})};
  EXPECT_THROW(is_bip(fractional), DomainError);
}

TEST(EnumerateVertices, Pi3) {
  const auto found = enumerate_vertices(permutahedron_facets(3), 3);
  EXPECT_EQ(found.status, EnumerationStatus::kOk);
  EXPECT_EQ(std::set<RationalPoint>(found.vertices.begin(), found.vertices.end()), points_of(permutahedron_vertices(3)));
}

TEST(EnumerateVertices, GoodCut) {
  auto constraints = permutahedron_facets(4);
  constraints.push_back(LinearConstraint{S({1, 2}), Sense::kAtMost, Rational(4)});
  const auto found = enumerate_vertices(constraints, 4);
  EXPECT_EQ(std::set<RationalPoint>(found.vertices.begin(), found.vertices.end()),
            points_of(bruhat_interval(P("1234"), P("3142"))));
}

// The cut x1+x2 <= 5 passes through the diagonal of the square [3142,4231]:
// every vertex stays a permutation, but the cell is no Bruhat interval.
TEST(EnumerateVertices, SquareDiagonalCut) {
  auto constraints = permutahedron_facets(4);
  constraints.push_back(LinearConstraint{S({1, 2}), Sense::kAtMost, Rational(5)});
  const auto found = enumerate_vertices(constraints, 4);
  EXPECT_EQ(found.vertices.size(), 16u);
  std::vector<Permutation> ps;
  for (const auto& v : found.vertices) {
    ASSERT_TRUE(v.as_permutation());
    ps.push_back(*v.as_permutation());
  }
  EXPECT_FALSE(is_bip(ps));
}

TEST(EnumerateVertices, HalfIntegerCutCreatesVertices) {
  auto constraints = permutahedron_facets(4);
  constraints.push_back(LinearConstraint{S({1, 2}), Sense::kAtMost, Rational(9, 2)});
  const auto found = enumerate_vertices(constraints, 4);
  const auto fresh = std::count_if(found.vertices.begin(), found.vertices.end(),
                                   [](const RationalPoint& p) { return !p.as_permutation(); });
  EXPECT_EQ(fresh, 8);
  EXPECT_NE(std::find(found.vertices.begin(), found.vertices.end(),
                      RationalPoint({Rational(1), Rational(7, 2), Rational(2), Rational(7, 2)})),
            found.vertices.end());
}

TEST(EnumerateVertices, EmptyAndUnbounded) {
  auto constraints = permutahedron_facets(3);
  constraints.push_back(LinearConstraint{S({1}), Sense::kAtMost, Rational(0)});
  const auto empty = enumerate_vertices(constraints, 3);
  EXPECT_EQ(empty.status, EnumerationStatus::kNoVertices);
  EXPECT_TRUE(empty.vertices.empty());
  const std::vector<LinearConstraint> half_plane{LinearConstraint{S({1}), Sense::kAtLeast, Rational(0)}};
  EXPECT_EQ(enumerate_vertices(half_plane, 2).status, EnumerationStatus::kNoVertices);
}

TEST(AffineDimension, Examples) {
  const auto vertices = enumerate_vertices(permutahedron_facets(4), 4).vertices;
  EXPECT_EQ(affine_dimension(vertices), 3);
  const std::vector<RationalPoint> segment{RationalPoint(P("123")), RationalPoint(P("321"))};
  EXPECT_EQ(affine_dimension(segment), 1);
}

}  // namespace
}  // namespace permsplit
