#include "transversal/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gtest/gtest.h"

namespace transversal {
namespace {

std::vector<Perm> AllPerms(std::uint32_t r) {
  std::vector<std::uint32_t> images(r);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

TEST(PermTest, Apply) {
  EXPECT_EQ(Perm::identity(3).apply(2), 2u);
  EXPECT_EQ(Perm::from_cycles(3, {{1, 2}}).apply(1), 2u);
  EXPECT_EQ(Perm::from_cycles(3, {{1, 2, 3}}).apply(3), 1u);
  EXPECT_THROW(Perm::identity(3).apply(0), std::out_of_range);
  EXPECT_THROW(Perm::identity(3).apply(4), std::out_of_range);
}

TEST(PermTest, ComposeAppliesLeftFactorFirst) {
  const Perm swap12 = Perm::from_cycles(3, {{1, 2}});
  const Perm cycle = Perm::from_cycles(3, {{1, 2, 3}});
  // 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
  EXPECT_EQ(compose(swap12, cycle), Perm::from_cycles(3, {{1, 3}}));
  EXPECT_EQ(compose(swap12, cycle).to_string(), "[3,2,1]");
  EXPECT_EQ(compose(Perm::identity(3), cycle), cycle);
  EXPECT_EQ(compose(cycle, inverse(cycle)), Perm::identity(3));
  EXPECT_THROW(compose(Perm::identity(2), Perm::identity(3)), std::invalid_argument);
}

TEST(PermTest, Inverse) {
  EXPECT_EQ(inverse(Perm::from_cycles(3, {{1, 2, 3}})), Perm::from_cycles(3, {{1, 3, 2}}));
  EXPECT_EQ(inverse(Perm::identity(4)), Perm::identity(4));
  EXPECT_EQ(inverse(Perm::from_cycles(3, {{1, 2}})), Perm::from_cycles(3, {{1, 2}}));
}

TEST(PermTest, FixedPoints) {
  EXPECT_EQ(Perm::identity(3).fixed_points(), (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_EQ(Perm::from_cycles(3, {{1, 2}}).fixed_points(), (std::vector<std::uint32_t>{3}));
  EXPECT_TRUE(Perm::from_cycles(3, {{1, 2, 3}}).fixed_points().empty());
}

TEST(PermTest, FromImagesRejectsNonBijections) {
  EXPECT_THROW(Perm::from_images({2, 2, 1}), std::invalid_argument);
  EXPECT_THROW(Perm::from_images({0, 1}), std::invalid_argument);
  EXPECT_THROW(Perm::from_images({1, 4, 2}), std::invalid_argument);
}

TEST(PermTest, RandomIsSeededAndUniformEnough) {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(Perm::random(6, a), Perm::random(6, b));

  std::mt19937_64 rng(99);
  std::map<Perm, int> counts;
  for (int k = 0; k < 6000; ++k) ++counts[Perm::random(3, rng)];
  EXPECT_EQ(counts.size(), 6u);
  for (const auto& [p, n] : counts) {
    EXPECT_GT(n, 850) << p.to_string();
    EXPECT_LT(n, 1150) << p.to_string();
  }
}

// Exhaustive group axioms for r <= 4.
TEST(PermPropertyTest, GroupAxiomsExhaustive) {
  for (std::uint32_t r = 1; r <= 4; ++r) {
    const auto all = AllPerms(r);
    const Perm e = Perm::identity(r);
    for (const auto& s : all) {
      EXPECT_EQ(compose(e, s), s);
      EXPECT_EQ(compose(s, e), s);
      EXPECT_EQ(s.fixed_points().size() == r, s == e);
      for (const auto& t : all) {
        EXPECT_EQ(inverse(compose(s, t)), compose(inverse(t), inverse(s)));
        for (std::uint32_t i = 1; i <= r; ++i) {
          EXPECT_EQ(compose(s, t).apply(i), t.apply(s.apply(i)));
        }
      }
    }
    for (const auto& s : all)
      for (const auto& t : all)
        for (const auto& u : all) EXPECT_EQ(compose(compose(s, t), u), compose(s, compose(t, u)));
  }
}

}  // namespace
}  // namespace transversal
