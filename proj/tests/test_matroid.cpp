#include <gtest/gtest.h>

#include "permsplit/matroid.hpp"
#include "test_helpers.hpp"

namespace permsplit {
namespace {

using testing::S;
using testing::sets;

RationalMatrix rank_four_matrix(int rows) {
  const std::vector<std::vector<Rational>> all{{1, 0, 1, 0, 1, 1, 1},
                                               {0, 1, 1, 0, 2, 2, 1},
                                               {0, 0, 0, 1, 1, 2, 1},
                                               {0, 0, 0, 0, 0, 0, 1}};
  return RationalMatrix(all).top_rows(rows);
}

TEST(MatroidFromBases, Uniform) {
  const auto m = matroid_from_bases(3, sets({"12", "13", "23"}));
  EXPECT_EQ(m, uniform_matroid(2, 3));
  EXPECT_EQ(m.rank(), 2);
}

TEST(MatroidFromBases, ExchangeWitness) {
  try {
    matroid_from_bases(4, sets({"12", "34"}));
    FAIL() << "expected an exchange failure";
  } catch (const ExchangeAxiomError& e) {
    EXPECT_EQ(e.first(), S({1, 2}));
    EXPECT_EQ(e.second(), S({3, 4}));
    EXPECT_EQ(e.element(), 1);
  }
}

TEST(MatroidFromBases, RejectsBadInput) {
  EXPECT_THROW(matroid_from_bases(3, {}), DomainError);
  EXPECT_THROW(matroid_from_bases(3, sets({"1", "12"})), DomainError);
  EXPECT_THROW(matroid_from_bases(2, sets({"3"})), DomainError);
}

TEST(MatroidFromBases, SingletonBases) {
  const auto m = matroid_from_bases(4, sets({"2", "3", "4"}));
  EXPECT_TRUE(m.is_loop(1));
  EXPECT_EQ(m.rank(), 1);
}

TEST(Circuits, Examples) {
  EXPECT_EQ(circuits(uniform_matroid(2, 3)), sets({"123"}));
  EXPECT_EQ(circuits(matroid_from_bases(3, sets({"1", "3"}))), sets({"2", "13"}));
  EXPECT_TRUE(circuits(uniform_matroid(4, 4)).empty());
}

TEST(Flats, Examples) {
  EXPECT_EQ(flats(uniform_matroid(2, 3)), (std::vector<Subset>{Subset(), S({1}), S({2}), S({3}), S({1, 2, 3})}));
  EXPECT_EQ(flats(uniform_matroid(3, 3)).size(), 8u);
  const auto rank_zero = matroid_from_bases(3, {Subset()});
  EXPECT_EQ(flats(rank_zero), (std::vector<Subset>{S({1, 2, 3})}));
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual_matroid(uniform_matroid(2, 3)), uniform_matroid(1, 3));
  const auto m = matroid_from_bases(4, sets({"12", "13", "14", "23", "24"}));
  EXPECT_EQ(dual_matroid(m), matroid_from_bases(4, sets({"34", "24", "23", "14", "13"})));
  EXPECT_EQ(dual_matroid(dual_matroid(m)), m);
}

TEST(Minors, Examples) {
  EXPECT_EQ(delete_element(uniform_matroid(2, 4), 4), uniform_matroid(2, 3));
  EXPECT_EQ(contract_element(uniform_matroid(2, 4), 4), uniform_matroid(1, 3));
  const auto m = matroid_from_bases(4, sets({"12", "13", "14", "23", "24"}));
  EXPECT_EQ(delete_element(m, 4), uniform_matroid(2, 3));
}

TEST(Minors, LoopsAndColoops) {
  const auto m = matroid_from_bases(3, sets({"1", "3"}));
  EXPECT_EQ(delete_element(m, 2), uniform_matroid(1, 2));
  EXPECT_EQ(contract_element(m, 2), uniform_matroid(1, 2));
  const auto coloop = matroid_from_bases(3, sets({"12", "13"}));
  EXPECT_EQ(delete_element(coloop, 1), uniform_matroid(1, 2));
  EXPECT_EQ(contract_element(coloop, 1), uniform_matroid(1, 2));
}

TEST(Quotient, RowTruncation) {
  const auto big = matroid_from_rational_matrix(rank_four_matrix(4));
  const auto small = matroid_from_rational_matrix(rank_four_matrix(2));
  EXPECT_EQ(big.rank(), 4);
  for (auto c : {QuotientCriterion::kCircuits, QuotientCriterion::kFlats, QuotientCriterion::kBasisExchange}) {
    EXPECT_TRUE(is_quotient(small, big, c));
    EXPECT_FALSE(is_quotient(big, small, c));
  }
}

TEST(Quotient, NonBipFlag) {
  const auto m1 = matroid_from_bases(3, sets({"1", "3"}));
  const auto m2 = matroid_from_bases(3, sets({"12", "23"}));
  for (auto c : {QuotientCriterion::kCircuits, QuotientCriterion::kFlats, QuotientCriterion::kBasisExchange}) {
    EXPECT_TRUE(is_quotient(m1, m2, c));
  }
}

TEST(Quotient, RankCannotGrow) {
  for (auto c : {QuotientCriterion::kCircuits, QuotientCriterion::kFlats, QuotientCriterion::kBasisExchange}) {
    EXPECT_FALSE(is_quotient(uniform_matroid(2, 4), uniform_matroid(1, 4), c));
    EXPECT_TRUE(is_quotient(uniform_matroid(1, 4), uniform_matroid(2, 4), c));
  }
  EXPECT_THROW(is_quotient(uniform_matroid(1, 3), uniform_matroid(1, 4)), DomainError);
}

TEST(FromMatrix, Examples) {
  std::vector<std::vector<Rational>> id(3, std::vector<Rational>(3, 0));
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  EXPECT_EQ(matroid_from_rational_matrix(RationalMatrix(id)).bases(), sets({"123"}));

  const auto top = matroid_from_rational_matrix(rank_four_matrix(2));
  EXPECT_EQ(top.rank(), 2);
  EXPECT_TRUE(top.is_loop(4));
  EXPECT_EQ(top.rank_of(S({3, 7})), 1);
  EXPECT_EQ(top.rank_of(S({5, 6})), 1);
  EXPECT_EQ(top.rank_of(S({3, 5})), 2);
  EXPECT_FALSE(top.is_basis(S({3, 7})));
  EXPECT_TRUE(top.is_basis(S({1, 2})));
}

}  // namespace
}  // namespace permsplit
