#include "bott/enumerate.hpp"
#include "bott/predicates.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace bott::enumerate {
namespace {

TEST(FamilySize, PowersOfTwo) {
  EXPECT_EQ(family_size(1), 1U);
  EXPECT_EQ(family_size(2), 2U);
  EXPECT_EQ(family_size(4), 64U);
  EXPECT_EQ(family_size(11), std::uint64_t{1} << 55);
  EXPECT_THROW(family_size(12), std::overflow_error);
  EXPECT_THROW(family_size(0), std::invalid_argument);
}

TEST(IterateFamily, Sizes) {
  EXPECT_EQ(std::distance(iterate_family(2).begin(), iterate_family(2).end()), 2);
  std::size_t count = 0;
  for ([[maybe_unused]] const auto& a : iterate_family(4)) ++count;
  EXPECT_EQ(count, 64U);
  EXPECT_TRUE((*iterate_family(5).begin()).is_zero());
}

TEST(Decode, RowMajorSlots) {
  EXPECT_EQ(decode(3, 1), BottMatrix::from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(decode(3, 2), BottMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(decode(3, 4), BottMatrix::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_THROW(decode(3, 8), std::out_of_range);
}

TEST(Decode, BijectionSmallExhaustiveLargeSampled) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    for (std::uint64_t c = 0; c < family_size(n); ++c) {
      const auto a = decode(n, c);
      ASSERT_EQ(encode(a), c);
      seen.insert(a.to_compact_string());
    }
    EXPECT_EQ(seen.size(), family_size(n));
  }
  std::mt19937_64 rng(12);
  for (std::size_t n = 5; n <= 8; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, family_size(n) - 1);
    for (int t = 0; t < 500; ++t) {
      const auto c = pick(rng);
      ASSERT_EQ(encode(decode(n, c)), c);
    }
    const auto a = bott::testing::random_matrix(n, rng);
    EXPECT_EQ(decode(n, encode(a)), a);
  }
}

TEST(ShardRange, DisjointAndCovering) {
  for (std::size_t count : {1U, 2U, 3U, 7U, 8U, 100U}) {
    std::uint64_t next = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const auto r = shard_range(5, {i, count});
      EXPECT_EQ(r.begin, next);
      EXPECT_LE(r.begin, r.end);
      next = r.end;
    }
    EXPECT_EQ(next, family_size(5));
  }
  EXPECT_THROW(shard_range(4, {2, 2}), std::invalid_argument);
  EXPECT_THROW(shard_range(4, {0, 0}), std::invalid_argument);
}

TEST(Census, SmallSizes) {
  const auto r4 = census(4);
  EXPECT_EQ(r4.total, 64U);
  EXPECT_EQ(r4.symplectic, 6U);
  EXPECT_EQ(r4.orientable, 8U);
  EXPECT_FALSE(r4.cohomologically_symplectic.has_value());

  const auto r2 = census(2);
  EXPECT_EQ(r2.symplectic, 1U);
  EXPECT_EQ(r2.orientable, 1U);
  EXPECT_EQ(census(3).symplectic, 0U);
}

TEST(Census, CountsMatchIndependentOracles) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t orientable = 0, symplectic = 0;
    bott::testing::for_each_matrix(n, [&](const BottMatrix& a) {
      orientable += bott::testing::rows_have_even_sums(a);
      symplectic += bott::testing::exhaustive_pairing_exists(a);
    });
    const auto r = census(n, {.use_oracle = true, .workers = 2});
    EXPECT_EQ(r.orientable, orientable);
    EXPECT_EQ(r.symplectic, symplectic);
    EXPECT_EQ(r.cohomologically_symplectic, symplectic);
    EXPECT_TRUE(r.mismatches.empty());
    EXPECT_EQ(Integer(r.symplectic), bott::testing::closed_form_symplectic_count(n));
    EXPECT_EQ(r.orientable, bott::testing::closed_form_orientable_count(n));
    EXPECT_LE(r.symplectic, r.orientable);
    EXPECT_LE(r.orientable, r.total);
  }
}

TEST(Census, ShardInvariant) {
  const auto one = census(6, {.use_oracle = true, .workers = 1});
  for (std::size_t workers : {2U, 8U}) {
    const auto many = census(6, {.use_oracle = true, .workers = workers});
    EXPECT_EQ(many.orientable, one.orientable);
    EXPECT_EQ(many.symplectic, one.symplectic);
    EXPECT_EQ(many.cohomologically_symplectic, one.cohomologically_symplectic);
    EXPECT_EQ(many.mismatches, one.mismatches);
  }
  // More workers than matrices leaves some shards empty.
  EXPECT_EQ(census(2, {.workers = 8}).symplectic, 1U);
}

TEST(Census, Limits) {
  EXPECT_THROW(census(9), std::invalid_argument);
  EXPECT_THROW(census(7, {.use_oracle = true}), std::invalid_argument);
  EXPECT_THROW(census(4, {.workers = 0}), std::invalid_argument);
  EXPECT_EQ(census(7, {.use_oracle = true, .limit = 7}).cohomologically_symplectic, 0U);
}

TEST(ListSymplectic, ReproducesPrintedExample) {
  auto listed = list_symplectic(4, true);
  auto expected = bott::testing::example_symplectic_4x4();
  auto key = [](const BottMatrix& a) { return a.to_compact_string(); };
  std::set<std::string> got, want;
  for (const auto& a : listed) got.insert(key(a));
  for (const auto& a : expected) want.insert(key(a));
  EXPECT_EQ(listed.size(), 5U);
  EXPECT_EQ(got, want);
}

TEST(ListSymplectic, Small) {
  const auto two = list_symplectic(2);
  ASSERT_EQ(two.size(), 1U);
  EXPECT_TRUE(two.front().is_zero());
  EXPECT_TRUE(list_symplectic(1, true).empty());
  EXPECT_EQ(list_symplectic(1).size(), 0U);
  EXPECT_THROW(list_symplectic(9), std::invalid_argument);
}

TEST(CrossValidate, EquivalenceHoldsThroughSix) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(cross_validate(n).empty()) << n;
  EXPECT_THROW(cross_validate(7), std::invalid_argument);
}

}  // namespace
}  // namespace bott::enumerate
