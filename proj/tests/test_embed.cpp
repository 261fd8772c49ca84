#include <gtest/gtest.h>

#include <random>

#include "soakit/construct.hpp"
#include "soakit/embed.hpp"
#include "soakit/error.hpp"
#include "soakit/strength3.hpp"
#include "support.hpp"

using namespace soakit;

TEST(Branch, ChildrenPartitionRuns) {
  const auto a = bush(3, false);
  const auto kids = branch(a, 1, 3);
  ASSERT_EQ(kids.size(), 3u);
  std::size_t total = 0;
  for (int v = 0; v < 3; ++v) {
    const auto& k = kids[v];
    EXPECT_EQ(k.branch_level, v);
    EXPECT_EQ(k.parent_column, 1u);
    EXPECT_EQ(k.array.runs(), 9u);
    EXPECT_EQ(k.array.factors(), 3u);
    EXPECT_TRUE(std::is_sorted(k.rows.begin(), k.rows.end()));
    EXPECT_TRUE(verify_oa(k.array, 2).passed());
    for (std::size_t i = 0; i < k.rows.size(); ++i) {
      EXPECT_EQ(a(k.rows[i], 1), v);
      EXPECT_EQ(k.array(i, 0), a(k.rows[i], 0));
      EXPECT_EQ(k.array(i, 1), a(k.rows[i], 2));
    }
    total += k.rows.size();
  }
  EXPECT_EQ(total, a.runs());
}

TEST(Branch, Preconditions) {
  EXPECT_THROW(branch(bush(3, false), 0, 1), ParameterError);
  EXPECT_THROW(branch(bush(3, false), 9, 3), ParameterError);
  EXPECT_THROW(branch(bush(3, false).with_cell(0, 0, 1), 0, 3), ParameterError);
}

TEST(FindExtension, FactorialHasExtension) {
  const auto a = full_factorial(2, 2);
  const auto r = find_extension(a, 2);
  ASSERT_TRUE(r.embeddable());
  EXPECT_EQ(*r.extension, (Column{0, 1, 1, 0}));
  EXPECT_FALSE(find_extension(a.with_column(*r.extension, 2), 2).embeddable());
}

TEST(FindExtension, ResultKeepsStrength) {
  for (const auto& a : {bush(2, false), bush(4, false), full_factorial(3, 3)}) {
    const auto r = find_extension(a, 3);
    ASSERT_TRUE(r.embeddable());
    EXPECT_TRUE(verify_oa(a.with_column(*r.extension, *a.symmetric_levels()), 3).passed());
  }
}

TEST(FindExtension, OddBushIsMaximal) {
  for (int s : {3, 5}) EXPECT_FALSE(find_extension(bush(s, false), 3).embeddable()) << s;
}

TEST(FindExtension, Preconditions) {
  EXPECT_THROW(find_extension(bush(3, false).with_cell(0, 0, 1), 3), ParameterError);
  const auto mixed = Array::from_rows({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}, std::vector<int>{2, 3});
  EXPECT_THROW(find_extension(mixed, 2), ParameterError);
}

TEST(FindExtension, AgreesWithBruteForce) {
  std::size_t arrays = 0, embeddable = 0;
  for (std::size_t n : {4u, 8u}) {
    for (const auto& a : testkit::strength2_binary_arrays(n)) {
      const auto fast = find_extension(a, 2);
      const auto slow = testkit::brute_force_extension(a);
      ASSERT_EQ(fast.extension, slow) << "n=" << n << " m=" << a.factors();
      ++arrays;
      embeddable += slow.has_value();
    }
  }
  EXPECT_GT(arrays, 1000u);
  EXPECT_GT(embeddable, 0u);
  EXPECT_LT(embeddable, arrays);
}

TEST(FindExtension, InvariantVerdictUnderScrambling) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    EXPECT_FALSE(find_extension(testkit::scramble(bush(3, false), rng), 3).embeddable());
    EXPECT_TRUE(find_extension(testkit::scramble(bush(4, false), rng), 3).embeddable());
  }
}

TEST(SemiEmbed, OddBushIsSemiEmbeddable) {
  for (int s : {3, 5}) {
    const auto r = is_semi_embeddable(bush(s, false), 3);
    EXPECT_TRUE(r.semi_embeddable);
    EXPECT_EQ(r.per_child.size(), static_cast<std::size_t>(s * (s + 1)));
    EXPECT_FALSE(r.short_circuit);
    EXPECT_EQ(r, serial::is_semi_embeddable(bush(s, false), 3));
  }
}

TEST(SemiEmbed, StopsAtFirstBadChild) {
  // Children of OA(64,6,4,3) are saturated OA(16,5,4,2)'s.
  const auto a = bush(4, true);
  const auto r = is_semi_embeddable(a, 3);
  EXPECT_EQ(r, serial::is_semi_embeddable(a, 3));
  EXPECT_FALSE(r.semi_embeddable);
  ASSERT_EQ(r.per_child.size(), 1u);
  EXPECT_EQ(r.per_child.back().column, 0u);
  EXPECT_EQ(r.per_child.back().level, 0);
  EXPECT_FALSE(r.per_child.back().report.embeddable());
}

TEST(SemiEmbed, RepeatedRunShortCircuit) {
  const auto a = testkit::repeated_run_oa54();
  ASSERT_TRUE(verify_oa(a, 3).passed());
  const auto r = is_semi_embeddable(a, 3);
  EXPECT_FALSE(r.semi_embeddable);
  EXPECT_EQ(r.short_circuit, ShortCircuit::RepeatedRun);
  EXPECT_TRUE(r.per_child.empty());
  EXPECT_EQ(to_string(ShortCircuit::RepeatedRun), "repeated-run");
  // Independent confirmation by search.
  bool found_bad_child = false;
  for (std::size_t c = 0; c < a.factors() && !found_bad_child; ++c)
    for (const auto& k : branch(a, c, 3))
      if (!find_extension(k.array, 2).embeddable()) found_bad_child = true;
  EXPECT_TRUE(found_bad_child);
}

TEST(SemiEmbed, BinaryShapeDoesNotShortCircuit) {
  const auto a = juxtapose(bush(2, true), bush(2, true));  // OA(16,4,2,3) = (2s^3, s+2) at s = 2
  const auto r = is_semi_embeddable(a, 3);
  EXPECT_FALSE(r.short_circuit);
  EXPECT_FALSE(r.per_child.empty());
}

TEST(SemiEmbed, ParallelMatchesSerial) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 6; ++i) {
    const auto a = testkit::scramble(i % 2 ? ovoid_oa(2) : extract_underlying_oa(fixtures()[1 + i % 2].file.array, 3), rng);
    EXPECT_EQ(is_semi_embeddable(a, 3), serial::is_semi_embeddable(a, 3));
  }
}

TEST(MaxExtension, ReachesKnownLimits) {
  const auto [a, w] = max_extension(full_factorial(2, 2), 2, 10);
  EXPECT_EQ(a.factors(), 3u);
  EXPECT_TRUE(w.exhaustive);
  EXPECT_EQ(w.columns_reached, 3u);
  const auto [b, wb] = max_extension(bush(4, false), 3, 6);
  EXPECT_EQ(b.factors(), 6u);
  EXPECT_FALSE(wb.exhaustive);
  EXPECT_TRUE(verify_oa(b, 3).passed());
}
