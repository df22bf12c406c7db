#include <gtest/gtest.h>

#include "permsplit/lpm.hpp"
#include "permsplit/verify/oracles.hpp"
#include "test_helpers.hpp"

namespace permsplit {
namespace {

using testing::I;
using testing::S;
using testing::sets;

LatticePathMatroid M(int n, std::initializer_list<int> upper, std::initializer_list<int> lower) {
  return LatticePathMatroid(n, Subset::of(upper), Subset::of(lower));
}

TEST(LatticePathMatroid, Construction) {
  const auto m = M(8, {1, 2, 4, 6}, {3, 5, 6, 8});
  EXPECT_EQ(m.rank(), 4);
  try {
    M(4, {2, 4}, {1, 2});
    FAIL() << "expected a Gale failure";
  } catch (const GaleOrderError& e) {
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_THROW(M(4, {1}, {1, 2}), DomainError);
  EXPECT_THROW(M(3, {1}, {4}), DomainError);
}

TEST(LpmBases, Examples) {
  EXPECT_EQ(lpm_bases(M(8, {1, 2, 4, 6}, {3, 5, 6, 8})).size(), 45u);
  EXPECT_EQ(lpm_bases(M(4, {1, 2}, {2, 4})), sets({"12", "13", "14", "23", "24"}));
  EXPECT_EQ(lpm_bases(LatticePathMatroid::uniform(3, 6)).size(), 20u);
  EXPECT_EQ(lpm_bases(LatticePathMatroid::uniform(0, 3)), std::vector<Subset>{Subset()});
}

TEST(LpmBases, MatchesOracles) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (Subset u : k_subsets(n, k)) {
        for (Subset l : k_subsets(n, k)) {
          if (!gale_leq(u, l)) continue;
          const auto bases = lpm_bases(LatticePathMatroid(n, u, l));
          EXPECT_EQ(bases, oracle::gale_filter_bases(n, u, l));
          EXPECT_EQ(static_cast<long long>(bases.size()), oracle::lattice_path_count(n, u, l));
        }
      }
    }
  }
}

TEST(GoodPairs, FigureExample) {
  std::vector<GoodPair> with_four;
  for (const auto& p : good_pairs(M(8, {1, 2, 4, 7}, {3, 5, 6, 8}))) {
    if (p.u == 4) with_four.push_back(p);
  }
  ASSERT_EQ(with_four.size(), 3u);
  EXPECT_EQ(with_four[0].l, 3);
  EXPECT_EQ(with_four[1].l, 5);
  EXPECT_EQ(with_four[2].l, 6);
  EXPECT_EQ(with_four[1].j, 3);
  EXPECT_EQ(with_four[1].i, 2);
}

TEST(ElementaryQuotient, Examples) {
  const auto m = M(8, {1, 2, 4, 7}, {3, 5, 6, 8});
  const auto q = elementary_quotient(m, 4, 5);
  EXPECT_EQ(q, M(8, {1, 2, 7}, {3, 6, 8}));
  EXPECT_EQ(elementary_quotient(q, 7, 6), M(8, {1, 2}, {3, 8}));
  EXPECT_THROW(elementary_quotient(m, 4, 8), DomainError);
  EXPECT_FALSE(is_good_pair(m, 4, 8));
}

TEST(QuotientChain, Examples) {
  const auto high = M(8, {1, 2, 4, 7}, {3, 5, 6, 8});
  const auto one = quotient_chain(M(8, {1, 2, 7}, {3, 6, 8}), high);
  ASSERT_TRUE(one);
  ASSERT_EQ(one->size(), 1u);
  EXPECT_EQ(one->front().pair.u, 4);
  EXPECT_EQ(one->front().pair.l, 5);

  const auto two = quotient_chain(M(8, {1, 2}, {3, 8}), high);
  ASSERT_TRUE(two);
  ASSERT_EQ(two->size(), 2u);
  EXPECT_EQ((*two)[0].pair.u, 4);
  EXPECT_EQ((*two)[0].pair.l, 5);
  EXPECT_EQ((*two)[1].pair.u, 7);
  EXPECT_EQ((*two)[1].pair.l, 6);
  EXPECT_EQ((*two)[1].result, M(8, {1, 2}, {3, 8}));

  EXPECT_FALSE(quotient_chain(M(4, {3, 4}, {3, 4}), M(4, {1, 2}, {1, 2})));
}

TEST(QuotientChain, AgreesWithQuotientTest) {
  const int n = 5;
  std::vector<LatticePathMatroid> all;
  for (int k = 0; k <= n; ++k) {
    for (Subset u : k_subsets(n, k)) {
      for (Subset l : k_subsets(n, k)) {
        if (gale_leq(u, l)) all.emplace_back(n, u, l);
      }
    }
  }
  for (const auto& low : all) {
    for (const auto& high : all) {
      if (low.rank() > high.rank()) continue;
      const auto chain = quotient_chain(low, high);
      EXPECT_EQ(chain.has_value(), is_quotient(to_set_matroid(low), to_set_matroid(high)));
      if (chain) {
        EXPECT_EQ(static_cast<int>(chain->size()), high.rank() - low.rank());
        if (!chain->empty()) EXPECT_EQ(chain->back().result, low);
      }
    }
  }
}

TEST(Schubert, Examples) {
  EXPECT_TRUE(is_schubert(M(4, {1, 3}, {3, 4})));
  EXPECT_TRUE(is_dual_schubert(M(4, {1, 2}, {2, 4})));
  EXPECT_FALSE(is_schubert(M(4, {1, 2}, {2, 4})));
  EXPECT_TRUE(is_schubert(LatticePathMatroid::uniform(2, 5)));
  EXPECT_TRUE(is_dual_schubert(LatticePathMatroid::uniform(2, 5)));
}

TEST(IsLpm, Examples) {
  const auto u23 = is_lpm(matroid_from_bases(3, sets({"12", "13", "23"})));
  ASSERT_TRUE(u23);
  EXPECT_EQ(*u23, M(3, {1, 2}, {2, 3}));
  EXPECT_FALSE(is_lpm(matroid_from_bases(4, sets({"12", "14", "23", "34"}))));
  const auto fig = M(8, {1, 2, 4, 6}, {3, 5, 6, 8});
  const auto back = is_lpm(to_set_matroid(fig));
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, fig);
}

TEST(LpfmInterval, ExampleTwo) {
  const LPFMFlag flag({M(4, {2}, {4}), M(4, {1, 2}, {2, 4}), M(4, {1, 2, 4}, {2, 3, 4})});
  EXPECT_EQ(flag.constituents().size(), 4u);
  EXPECT_EQ(lpfm_interval(flag), I("1324", "3412"));
}

TEST(LpfmInterval, UniformFlag) {
  std::vector<LatticePathMatroid> uniform;
  for (int k = 1; k <= 5; ++k) uniform.push_back(LatticePathMatroid::uniform(k, 5));
  EXPECT_EQ(lpfm_interval(LPFMFlag(uniform)), I("12345", "54321"));
}

TEST(LpfmInterval, SchubertFlagStartsAtIdentity) {
  // L_i = {n-i+1, ..., n}
  const LPFMFlag flag({M(4, {2}, {4}), M(4, {2, 3}, {3, 4}), M(4, {1, 2, 3}, {2, 3, 4})});
  EXPECT_EQ(lpfm_interval(flag), I("1234", "2431"));
}

TEST(LpfmFlag, RejectsNonQuotients) {
  EXPECT_THROW(LPFMFlag({M(3, {3}, {3}), M(3, {1, 2}, {1, 2})}), DomainError);
  EXPECT_THROW(LPFMFlag({M(3, {1, 2}, {2, 3}), M(3, {1}, {3})}), DomainError);
}

TEST(FlagOfInterval, Examples) {
  const auto whole = flag_of_interval(I("123", "321"));
  EXPECT_TRUE(whole.lpfm);
  ASSERT_EQ(whole.constituents.size(), 3u);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(whole.constituents[k - 1], uniform_matroid(k, 3));

  const auto two = flag_of_interval(I("1324", "3412"));
  EXPECT_TRUE(two.lpfm);
  EXPECT_EQ(two.constituents[0], to_set_matroid(M(4, {2}, {4})));
  EXPECT_EQ(two.constituents[1], to_set_matroid(M(4, {1, 2}, {2, 4})));
  EXPECT_EQ(two.constituents[2], to_set_matroid(M(4, {1, 2, 4}, {2, 3, 4})));
  EXPECT_EQ(two.constituents[3], uniform_matroid(4, 4));

  const auto schubert = flag_of_interval(I("1234", "2431"));
  EXPECT_TRUE(schubert.lpfm);
  EXPECT_EQ(schubert.constituents[0].bases(), sets({"2", "3", "4"}));
  EXPECT_EQ(schubert.constituents[1].bases(), sets({"23", "24", "34"}));
  EXPECT_EQ(schubert.constituents[2].bases(), sets({"123", "124", "134", "234"}));
  for (int k = 0; k < 3; ++k) {
    const auto lpm = is_lpm(schubert.constituents[k]);
    ASSERT_TRUE(lpm);
    EXPECT_TRUE(is_schubert(*lpm));
  }
}

}  // namespace
}  // namespace permsplit
