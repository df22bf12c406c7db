#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "permsplit/json_io.hpp"
#include "permsplit/subdivision.hpp"
#include "test_helpers.hpp"

namespace permsplit {
namespace {

using testing::I;

SplitHyperplane H(int n, std::initializer_list<int> support, long level) {
  return SplitHyperplane(n, Subset::of(support), level);
}

std::vector<BruhatInterval> intervals(const Subdivision& s) {
  std::vector<BruhatInterval> out;
  for (const auto& c : s.cells) out.push_back(c.interval);
  return out;
}

TEST(SubdivisionFromHyperplanes, FiveCells) {
  const auto outcome = subdivision_from_hyperplanes(4, {H(4, {1, 2}, 6), H(4, {1}, 2), H(4, {4}, 3)});
  ASSERT_TRUE(outcome.accepted());
  EXPECT_EQ(intervals(*outcome.subdivision),
            (std::vector<BruhatInterval>{I("1234", "2413"), I("1243", "2431"), I("2134", "4213"), I("2143", "4231"),
                                         I("2413", "4321")}));
  for (const auto& c : outcome.subdivision->cells) {
    EXPECT_TRUE(c.lpfm);
    EXPECT_EQ(c.signs.size(), 3u);
  }
}

TEST(SubdivisionFromHyperplanes, NewVertex) {
  const auto outcome = subdivision_from_hyperplanes(4, {H(4, {1, 2}, 6), H(4, {4}, 2)});
  ASSERT_FALSE(outcome.accepted());
  ASSERT_TRUE(outcome.rejection);
  EXPECT_EQ(outcome.rejection->reason, RejectionReason::kNewVertex);
  ASSERT_TRUE(outcome.rejection->witness);
  EXPECT_FALSE(outcome.rejection->witness->as_permutation());
}

TEST(SubdivisionFromHyperplanes, SingleSplitMatchesCheckSplit) {
  const auto outcome = subdivision_from_hyperplanes(4, {H(4, {1}, 2)});
  ASSERT_TRUE(outcome.accepted());
  const auto cells = *check_split(H(4, {1}, 2)).cells;
  EXPECT_EQ(intervals(*outcome.subdivision), (std::vector<BruhatInterval>{cells.identity_cell, cells.longest_cell}));
  EXPECT_EQ(outcome.subdivision->cells[0].signs, "-");
}

TEST(SubdivisionFromHyperplanes, RejectsBadSplits) {
  EXPECT_THROW(subdivision_from_hyperplanes(4, {H(4, {1, 2}, 5)}), DomainError);
  EXPECT_THROW(subdivision_from_hyperplanes(5, {H(4, {1}, 2)}), DomainError);
}

TEST(SubdivisionFromHyperplanes, N3Rejection) {
  const auto outcome = subdivision_from_hyperplanes(3, {H(3, {1}, 2), H(3, {3}, 2)});
  ASSERT_TRUE(outcome.rejection);
  EXPECT_EQ(outcome.rejection->reason, RejectionReason::kNewVertex);
  EXPECT_EQ(*outcome.rejection->witness, RationalPoint({Rational(2), Rational(2), Rational(2)}));
}

TEST(BuildPoset, Four) {
  const auto poset = build_poset(4);
  EXPECT_EQ(poset.elements.size(), 17u);
  EXPECT_EQ(poset.minimal().size(), 6u);
  for (int i : poset.minimal()) EXPECT_EQ(poset.elements[i].hyperplanes.size(), 1u);
  // two five-cell elements plus three three-cell elements with no refinement
  EXPECT_EQ(poset.maximal().size(), 5u);
  const auto top = poset.top_rank();
  ASSERT_EQ(top.size(), 2u);
  for (int i : top) EXPECT_EQ(poset.elements[i].cells.size(), 5u);
}

TEST(BuildPoset, Three) {
  const auto poset = build_poset(3);
  EXPECT_EQ(poset.elements.size(), 2u);
  EXPECT_TRUE(poset.covers.empty());
}

TEST(BuildPoset, TilesAndMonotone) {
  const auto poset = build_poset(4);
  for (const auto& e : poset.elements) {
    std::set<Permutation> covered;
    for (const auto& c : e.cells) {
      for (const auto& p : bruhat_interval(c.interval)) covered.insert(p);
    }
    EXPECT_EQ(covered.size(), 24u);
    for (const auto& h : e.hyperplanes) {
      const auto single = subdivision_from_hyperplanes(4, {h});
      ASSERT_TRUE(single.accepted());
      EXPECT_TRUE(refines(e, *single.subdivision));
    }
  }
}

TEST(Refines, Examples) {
  const auto fine = *subdivision_from_hyperplanes(4, {H(4, {1, 2}, 6), H(4, {1}, 2), H(4, {4}, 3)}).subdivision;
  const auto h2 = *subdivision_from_hyperplanes(4, {H(4, {1, 2}, 6)}).subdivision;
  const auto h3 = *subdivision_from_hyperplanes(4, {H(4, {1}, 2)}).subdivision;
  EXPECT_TRUE(refines(fine, fine));
  EXPECT_TRUE(refines(fine, h2));
  EXPECT_FALSE(refines(h2, fine));
  EXPECT_FALSE(refines(h2, h3));
  EXPECT_FALSE(refines(h3, h2));
}

TEST(ExportPoset, DotSourcesAndSinks) {
  const auto dot = export_poset(build_poset(4), PosetFormat::kDot);
  std::set<std::string> nodes;
  std::set<std::string> heads;
  std::set<std::string> tails;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    const auto arrow = line.find(" -> ");
    if (arrow != std::string::npos) {
      tails.insert(line.substr(2, arrow - 2));
      heads.insert(line.substr(arrow + 4, line.find(';') - arrow - 4));
    } else if (line.find("[label=") != std::string::npos) {
      nodes.insert(line.substr(2, line.find(' ', 2) - 2));
    }
  }
  int sources = 0;
  int sinks = 0;
  for (const auto& n : nodes) {
    sources += !heads.contains(n);
    sinks += !tails.contains(n);
  }
  EXPECT_EQ(nodes.size(), 17u);
  EXPECT_EQ(sources, 6);
  EXPECT_EQ(sinks, 5);
}

TEST(ExportPoset, EmptyPoset) {
  SubdivisionPoset empty;
  empty.n = 4;
  EXPECT_EQ(export_poset(empty, PosetFormat::kDot), "digraph subdivisions_4 {\n  node [shape=box];\n}\n");
}

TEST(ExportPoset, JsonRoundTrip) {
  const auto poset = build_poset(4);
  const auto text = export_poset(poset, PosetFormat::kJson);
  const auto back = poset_from_json(Json::parse(text));
  EXPECT_EQ(back.elements, poset.elements);
  EXPECT_EQ(back.covers, poset.covers);
  EXPECT_EQ(export_poset(back, PosetFormat::kJson), text);
}

}  // namespace
}  // namespace permsplit
