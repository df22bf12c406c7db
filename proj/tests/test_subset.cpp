#include <gtest/gtest.h>

#include "permsplit/error.hpp"
#include "test_helpers.hpp"

namespace permsplit {
namespace {

using testing::S;

TEST(Subset, BasicOperations) {
  const Subset s = S({1, 3, 4});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.min_element(), 1);
  EXPECT_EQ(s.max_element(), 4);
  EXPECT_EQ(s.complement(5), S({2, 5}));
  EXPECT_EQ(s.without(3).with(2), S({1, 2, 4}));
  EXPECT_TRUE(S({1, 4}).is_subset_of(s));
  EXPECT_EQ(Subset::interval(2, 4), S({2, 3, 4}));
  EXPECT_TRUE(Subset().empty());
}

TEST(Subset, RejectsOutOfRange) {
  EXPECT_THROW(S({0}), DomainError);
  EXPECT_THROW(S({32}), DomainError);
}

TEST(Subset, Printing) {
  EXPECT_EQ(to_string(S({1, 2, 4, 6})), "1246");
  EXPECT_EQ(to_string(Subset()), "{}");
  EXPECT_EQ(to_string(S({2, 11})), "2,11");
}

TEST(Subset, OrdersAndEnumeration) {
  EXPECT_TRUE(lex_less(S({1, 3}), S({2})));
  EXPECT_TRUE(size_lex_less(S({2}), S({1, 3})));
  EXPECT_TRUE(gale_leq(S({1, 2, 4, 6}), S({3, 5, 6, 8})));
  EXPECT_FALSE(gale_leq(S({2, 4}), S({1, 2})));
  const auto two = k_subsets(4, 2);
  ASSERT_EQ(two.size(), 6u);
  EXPECT_EQ(two.front(), S({1, 2}));
  EXPECT_EQ(two[1], S({1, 3}));
  EXPECT_EQ(two.back(), S({3, 4}));
  EXPECT_EQ(k_subsets(3, 0).size(), 1u);
}

}  // namespace
}  // namespace permsplit
