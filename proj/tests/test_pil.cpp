#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "orbit_atlas/pil.hpp"

using namespace orbit_atlas;

namespace {

std::vector<int> range(int n) {
  std::vector<int> g(n);
  std::iota(g.begin(), g.end(), 1);
  return g;
}

PilWithList pair(ListBlock sigma, std::vector<ListBlock> blocks) {
  return {std::move(sigma), canonical(Pil{std::move(blocks)})};
}

FlagEntry plain(int j) { return {j, false}; }
FlagEntry hat(int j) { return {j, true}; }

}  // namespace

TEST(EnumeratePil, Counts) {
  EXPECT_EQ(enumerate_pil(range(0)).size(), 1u);
  EXPECT_EQ(enumerate_pil(range(1)).size(), 1u);
  EXPECT_EQ(enumerate_pil(range(3)).size(), 13u);
  EXPECT_EQ(enumerate_pil(range(6)).size(), 4051u);
}

TEST(EnumeratePil, CanonicalDistinctAndValid) {
  const auto g = range(4);
  const auto all = enumerate_pil(g);
  EXPECT_EQ(std::set<Pil>(all.begin(), all.end()).size(), all.size());
  for (const Pil& p : all) {
    EXPECT_EQ(canonical(p), p);
    EXPECT_NO_THROW(check_pil(p, g));
  }
}

TEST(CheckPil, RejectsBadPartitions) {
  const auto g = range(3);
  EXPECT_THROW(check_pil(Pil{{{1, 2}}}, g), std::invalid_argument);
  EXPECT_THROW(check_pil(Pil{{{1, 2}, {2, 3}}}, g), std::invalid_argument);
  EXPECT_THROW(check_pil(Pil{{{1, 2, 3}, {}}}, g), std::invalid_argument);
}

TEST(EnumeratePilWithList, PublishedSetOfNine) {
  const std::vector<PilWithList> expected{
      pair({1}, {{1}, {2}, {3}}), pair({2}, {{1}, {2}, {3}}), pair({3}, {{1}, {2}, {3}}),
      pair({1}, {{1}, {2, 3}}),   pair({1}, {{1}, {3, 2}}),   pair({2}, {{2}, {1, 3}}),
      pair({2}, {{2}, {3, 1}}),   pair({3}, {{3}, {1, 2}}),   pair({3}, {{3}, {2, 1}}),
  };
  const auto got = enumerate_pil_with_list(3, 1);
  EXPECT_EQ(std::set<PilWithList>(got.begin(), got.end()),
            std::set<PilWithList>(expected.begin(), expected.end()));
  EXPECT_EQ(got.size(), 9u);
}

TEST(EnumeratePilWithList, Counts) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_pil_with_list(n, n).size(), static_cast<std::size_t>(test_oracle::fact(n)));
  // PIL(6, 4) pairs with i = 2; PIL(6, 3) with i = 3.
  EXPECT_EQ(enumerate_pil_with_list(6, 4).size(), 1080u);
  EXPECT_EQ(enumerate_pil_with_list(6, 3).size(), 1560u);
  EXPECT_THROW(enumerate_pil_with_list(3, 4), std::out_of_range);
}

TEST(EnumeratePilWithList, ProductFormulaUpTo7) {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(BigInt(enumerate_pil_with_list(n, k).size()),
                test_oracle::choose(n, k) * test_oracle::fact(k) * count_pil(n - k))
          << n << "," << k;
}

TEST(StdFlagToPil, Examples) {
  EXPECT_EQ(std_flag_to_pil({3, {plain(2), plain(3), plain(1)}}), (Pil{{{2, 3, 1}}}));
  EXPECT_EQ(std_flag_to_pil({2, {hat(1), plain(2)}}), (Pil{{{1}, {2}}}));
  EXPECT_THROW(std_flag_to_pil({2, {plain(1), plain(2), plain(3)}}), std::invalid_argument);
}

TEST(StdFlagToPil, BijectiveUpTo5) {
  for (int n = 1; n <= 5; ++n) {
    std::set<Pil> image;
    for (const IStandardFlag& f : enumerate_flags(n, n)) {
      const Pil p = std_flag_to_pil(f);
      EXPECT_EQ(pil_to_std_flag(p, n), f);
      image.insert(p);
    }
    const auto all = enumerate_pil(range(n));
    EXPECT_EQ(image, std::set<Pil>(all.begin(), all.end()));
  }
}

TEST(FlagToPilPair, Example) {
  const PilWithList p = flag_to_pilpair({2, {hat(1), plain(2), plain(3)}});
  EXPECT_EQ(p, pair({3}, {{3}, {1}, {2}}));
  EXPECT_EQ(p.distinguished_index(), std::optional<std::size_t>(2));
}

TEST(FlagToPilPair, TopIndexUsesEmptyList) {
  const PilWithList p = flag_to_pilpair({3, {plain(1), plain(2), plain(3)}});
  EXPECT_TRUE(p.distinguished.empty());
  EXPECT_FALSE(p.distinguished_index().has_value());
  EXPECT_EQ(p.pil, (Pil{{{1, 2, 3}}}));
}

TEST(FlagToPilPair, LengthMismatchThrows) {
  EXPECT_THROW(pilpair_to_flag(pair({3}, {{3}, {1}, {2}}), 1), std::invalid_argument);
}

TEST(FlagToPilPair, ImageSizesN4) {
  const std::size_t row4[] = {24, 36, 52, 73};
  for (int i = 1; i <= 4; ++i) {
    std::set<PilWithList> image;
    for (const auto& f : enumerate_flags(4, i)) image.insert(flag_to_pilpair(f));
    EXPECT_EQ(image.size(), row4[i - 1]);
    EXPECT_EQ(enumerate_pil_with_list(4, 4 - i).size(), row4[i - 1]);
  }
}

TEST(FlagToPilPair, RoundtripsUpTo5) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i) {
      for (const auto& f : enumerate_flags(n, i)) ASSERT_EQ(pilpair_to_flag(flag_to_pilpair(f), i), f);
      for (const auto& p : enumerate_pil_with_list(n, n - i)) ASSERT_EQ(flag_to_pilpair(pilpair_to_flag(p, i)), p);
    }
}

TEST(Partial, Examples) {
  const PartialPermutation id = decorated_to_partial({Permutation::identity(4), {4}});
  EXPECT_EQ(id.mapping, (std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}}));
  const PartialPermutation k = decorated_to_partial({Permutation({2, 1, 3}), {1, 2}});
  EXPECT_EQ(k.mapping, (std::vector<std::pair<int, int>>{{3, 3}}));

  const DecoratedPermutation empty = partial_to_decorated({2, {}});
  EXPECT_EQ(empty.w, Permutation({2, 1}));
  EXPECT_EQ(empty.delta, (std::vector<int>{1, 2}));
  const DecoratedPermutation back = partial_to_decorated({3, {{3, 3}}});
  EXPECT_EQ(back.w, Permutation({2, 1, 3}));
  EXPECT_EQ(back.delta, (std::vector<int>{1, 2}));
}

TEST(Partial, RejectsNonStrictOrNonInjective) {
  EXPECT_THROW(partial_to_decorated({2, {{1, 2}, {2, 1}}}), std::invalid_argument);
  EXPECT_THROW(partial_to_decorated({3, {{1, 2}, {2, 2}}}), std::invalid_argument);
  EXPECT_THROW(partial_to_decorated({3, {{1, 4}}}), std::invalid_argument);
}

TEST(Partial, BijectionUpTo5) {
  for (int n = 1; n <= 5; ++n) {
    std::set<PartialPermutation> image;
    for (const auto& d : enumerate_all_decorated(n)) {
      const PartialPermutation kappa = decorated_to_partial(d);
      ASSERT_EQ(partial_to_decorated(kappa), d);
      image.insert(kappa);
    }
    const auto all = enumerate_strict_partial(n);
    EXPECT_EQ(image, std::set<PartialPermutation>(all.begin(), all.end()));
    EXPECT_EQ(BigInt(all.size()), test_oracle::strict_partial_count(n));
  }
  EXPECT_EQ(enumerate_all_decorated(3).size(), 28u);
}

TEST(Counts, PilClosedFormMatchesPartitionSumAndEnumeration) {
  EXPECT_EQ(count_pil(0), 1);
  EXPECT_EQ(count_pil(4), 73);
  EXPECT_EQ(count_pil(6), 4051);
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(count_pil(n), test_oracle::pil_count_by_partitions(n));
    EXPECT_EQ(count_pil(n), BigInt(enumerate_pil(range(n)).size()));
  }
}

TEST(Counts, OrbitExamplesAndErrors) {
  EXPECT_EQ(count_orbits(6, 2), 1080);
  EXPECT_EQ(count_orbits(6, 5), 3006);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_orbits(n, n), count_pil(n));
  EXPECT_EQ(count_orbits(5, 0), 120);
  EXPECT_THROW(count_orbits(3, 4), std::out_of_range);
  EXPECT_THROW(count_orbits(0, 0), std::out_of_range);
}

TEST(Counts, EnumerationAgreesUpTo6) {
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(count_orbits(n, i), BigInt(enumerate_decorated(n, i).size()));
      EXPECT_EQ(BigInt(enumerate_decorated(n, i).size()), BigInt(enumerate_pil_with_list(n, n - i).size()));
    }
}

TEST(Counts, RecursionUpTo7) {
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_EQ(count_orbits(n + 1, i), (n + 1) * count_orbits(n, i));
}

TEST(Counts, RowSumsMatchStrictPartialUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += count_orbits(n, i);
    EXPECT_EQ(sum, test_oracle::strict_partial_count(n));
    EXPECT_EQ(sum, BigInt(enumerate_all_decorated(n).size()));
  }
}

TEST(Counts, LargeValuesAreExact) {
  // Well past 64 bits: 30 (29) ... 21 |PIL(20)|.
  BigInt lah = 0;
  for (int k = 1; k <= 20; ++k) lah += test_oracle::choose(19, k - 1) * test_oracle::fact(20) / test_oracle::fact(k);
  BigInt expected = lah;
  for (int k = 21; k <= 30; ++k) expected *= k;
  EXPECT_EQ(count_orbits(30, 20), expected);
}
