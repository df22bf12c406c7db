#include <gtest/gtest.h>

#include "permsplit/lpm.hpp"
#include "permsplit/splits.hpp"
#include "permsplit/verify/oracles.hpp"
#include "test_helpers.hpp"

namespace permsplit {
namespace {

using testing::I;
using testing::S;

SplitHyperplane H(int n, std::initializer_list<int> support, long level) {
  return SplitHyperplane(n, Subset::of(support), level);
}

TEST(SplitHyperplane, CanonicalForm) {
  EXPECT_EQ(H(5, {1, 2, 3}, 7), H(5, {4, 5}, 8));
  EXPECT_EQ(to_string(H(5, {1, 2, 3}, 7)), "x4+x5=8");
  EXPECT_EQ(H(4, {1, 2}, 4), H(4, {3, 4}, 6));
  EXPECT_EQ(H(4, {3, 4}, 6).support(), S({1, 2}));
  EXPECT_EQ(to_string(SplitHyperplane(4, S({1, 2}), Rational(9, 2))), "x1+x2=9/2");
}

TEST(SplitHyperplane, Validation) {
  EXPECT_THROW(H(4, {}, 1), DomainError);
  EXPECT_THROW(H(4, {1, 2, 3, 4}, 10), DomainError);
  EXPECT_THROW(H(4, {1, 2}, 2), DomainError);
  EXPECT_THROW(H(4, {1, 2}, 8), DomainError);
  EXPECT_NO_THROW(H(4, {1, 2}, 3));
}

TEST(TheoremHyperplanes, Counts) {
  const std::vector<SplitHyperplane> three{H(3, {1}, 2), H(3, {3}, 2)};
  EXPECT_EQ(theorem_hyperplanes(3), three);
  std::vector<SplitHyperplane> four{H(4, {1, 2}, 4), H(4, {1, 2}, 6), H(4, {1}, 2),
                                    H(4, {1}, 3),    H(4, {4}, 2),    H(4, {4}, 3)};
  std::sort(four.begin(), four.end());
  EXPECT_EQ(theorem_hyperplanes(4), four);
  EXPECT_EQ(theorem_hyperplanes(5).size(), 10u);
}

TEST(TheoremHyperplanes, Tags) {
  const auto t1 = classify(H(4, {1, 2}, 4));
  ASSERT_TRUE(t1);
  EXPECT_EQ(t1->family, HyperplaneFamily::kT1);
  EXPECT_EQ(t1->parameter, 2);
  const auto t2 = classify(H(4, {1, 2}, 6));
  ASSERT_TRUE(t2);
  EXPECT_EQ(t2->family, HyperplaneFamily::kT2);
  const auto t3 = classify(H(4, {4}, 3));
  ASSERT_TRUE(t3);
  EXPECT_EQ(t3->family, HyperplaneFamily::kT3);
  EXPECT_EQ(t3->coordinate, 4);
  EXPECT_EQ(t3->parameter, 3);
  // j = 1 of T1 is x1 = 2, tagged as T3
  EXPECT_EQ(classify(H(5, {1}, 2))->family, HyperplaneFamily::kT3);
  EXPECT_FALSE(classify(H(4, {1, 2}, 5)));
}

TEST(CheckSplit, KnownVerdicts) {
  const auto square = check_split(H(4, {1, 2}, 5));
  EXPECT_EQ(square.verdict, SplitVerdict::kBadSquare);
  ASSERT_TRUE(square.offending_face);
  EXPECT_EQ(square.offending_face->shape, FaceShape::kSquare);

  const auto hexagon = check_split(H(4, {3}, 3));
  EXPECT_EQ(hexagon.verdict, SplitVerdict::kBadHexagon);
  ASSERT_TRUE(hexagon.offending_face);
  EXPECT_EQ(hexagon.offending_face->shape, FaceShape::kHexagon);

  const auto good = check_split(H(4, {1}, 2));
  EXPECT_EQ(good.verdict, SplitVerdict::kGoodSplit);
  ASSERT_TRUE(good.cells);
  EXPECT_EQ(good.cells->identity_cell, I("1234", "2431"));
  EXPECT_EQ(good.cells->longest_cell, I("2134", "4321"));
  EXPECT_TRUE(good.lpfm.first);
  EXPECT_TRUE(good.lpfm.second);
}

TEST(CheckSplit, HexagonOfFigure) {
  // x3 = 3 meets a hexagon strictly without separating its min and max
  const SplitHyperplane h = H(4, {3}, 3);
  const auto report = check_split(h);
  ASSERT_TRUE(report.offending_face);
  const auto& face = *report.offending_face;
  EXPECT_FALSE(h.side(face.min) * h.side(face.max) < 0);
  bool below = false;
  bool above = false;
  for (const auto& v : face.vertices) {
    below |= h.side(v) < 0;
    above |= h.side(v) > 0;
  }
  EXPECT_TRUE(below && above);
}

TEST(CheckSplit, BoundaryLevelsAreNotSplits) {
  EXPECT_EQ(check_split(H(4, {1, 2}, 3)).verdict, SplitVerdict::kNotASplit);
  EXPECT_EQ(check_split(H(4, {1}, 4)).verdict, SplitVerdict::kNotASplit);
}

TEST(CheckSplit, AgreesWithVertexPartition) {
  const oracle::ReachabilityOrder order(4);
  for (std::uint32_t bits = 1; bits + 1 < 16; ++bits) {
    const Subset s = Subset::from_bits(bits);
    const auto [lo, hi] = support_range(4, s.size());
    for (long level = lo; level <= hi; ++level) {
      const SplitHyperplane h(4, s, level);
      EXPECT_EQ(check_split(h).verdict == SplitVerdict::kGoodSplit, oracle::is_good_split(order, s, level))
          << to_string(h);
    }
  }
}

TEST(PredictedCells, Examples) {
  const auto t1 = predicted_cells(H(4, {1, 2}, 4));
  ASSERT_TRUE(t1);
  EXPECT_EQ(t1->identity_cell, I("1234", "3142"));
  EXPECT_EQ(t1->longest_cell, I("1324", "4321"));
  const auto t3 = predicted_cells(H(4, {1}, 2));
  ASSERT_TRUE(t3);
  EXPECT_EQ(t3->identity_cell, I("1234", "2431"));
  EXPECT_EQ(t3->longest_cell, I("2134", "4321"));
  const auto last = predicted_cells(H(4, {4}, 3));
  ASSERT_TRUE(last);
  EXPECT_EQ(last->identity_cell, I("1234", "4213"));
  EXPECT_EQ(last->longest_cell, I("1243", "4321"));
  EXPECT_FALSE(predicted_cells(H(4, {1, 2}, 5)));
}

TEST(PredictedCells, MatchCheckSplit) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& h : theorem_hyperplanes(n)) {
      const auto report = check_split(h);
      ASSERT_EQ(report.verdict, SplitVerdict::kGoodSplit) << to_string(h);
      EXPECT_EQ(predicted_cells(h), report.cells) << to_string(h);
    }
  }
}

TEST(GoodSplits, CellShapes) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& h : exhaustive_scan(n)) {
      const auto cells = *check_split(h).cells;
      EXPECT_EQ(cells.identity_cell.lo(), Permutation::identity(n));
      EXPECT_EQ(cells.longest_cell.hi(), Permutation::longest(n));
      const auto low = flag_of_interval(cells.identity_cell);
      const auto high = flag_of_interval(cells.longest_cell);
      for (int k = 0; k < n; ++k) {
        const auto a = is_lpm(low.constituents[k]);
        const auto b = is_lpm(high.constituents[k]);
        ASSERT_TRUE(a && b);
        EXPECT_TRUE(is_schubert(*a)) << to_string(h);
        EXPECT_TRUE(is_dual_schubert(*b)) << to_string(h);
      }
    }
  }
}

TEST(DualHyperplane, Examples) {
  EXPECT_EQ(dual_hyperplane(H(4, {1, 2}, 4)), H(4, {1, 2}, 6));
  EXPECT_EQ(dual_hyperplane(H(4, {1}, 2)), H(4, {1}, 3));
  EXPECT_EQ(dual_hyperplane(H(4, {4}, 2)), H(4, {4}, 3));
  EXPECT_EQ(dual_hyperplane(H(5, {1}, 3)), H(5, {1}, 3));
  EXPECT_THROW(dual_hyperplane(H(4, {1, 2}, 5)), DomainError);
}

TEST(DualHyperplane, Involution) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& h : exhaustive_scan(n)) EXPECT_EQ(dual_hyperplane(dual_hyperplane(h)), h);
  }
}

TEST(ExhaustiveScan, EqualsTheorem) {
  for (int n = 3; n <= 5; ++n) EXPECT_EQ(exhaustive_scan(n), theorem_hyperplanes(n));
  EXPECT_EQ(exhaustive_scan(3).size(), 2u);
  EXPECT_EQ(exhaustive_scan(4).size(), 6u);
  EXPECT_EQ(exhaustive_scan(5).size(), 10u);
}

TEST(ExhaustiveScan, HalfIntegersAddNothing) {
  for (int n = 3; n <= 5; ++n) EXPECT_EQ(exhaustive_scan(n, ScanLevels::kHalfIntegers), exhaustive_scan(n));
}

TEST(ExhaustiveScan, SortedBySupportThenLevel) {
  const auto scan = exhaustive_scan(5);
  EXPECT_TRUE(std::is_sorted(scan.begin(), scan.end()));
  EXPECT_EQ(to_string(scan.front()), "x1=2");
  EXPECT_EQ(to_string(scan.back()), "x4+x5=8");
}

}  // namespace
}  // namespace permsplit
