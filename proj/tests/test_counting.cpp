#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "perfmat/counting.hpp"
#include "perfmat/errors.hpp"
#include "perfmat/families.hpp"

namespace perfmat {
namespace {

using families::complete;
using families::complete_bipartite;
using families::cycle;
using testing::brute_even_cover_tally;
using testing::brute_perfect_matchings;
using testing::brute_permanent;
using testing::random_permutation;
using testing::random_test_graph;

Count factorial(int k) {
  Count out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

Count tally(const Graph& g, CycleMode mode) {
  return weighted_cycle_cover_count(g, mode).total;
}

TEST(PerfectMatchings, NamedGraphs) {
  EXPECT_EQ(count_perfect_matchings(complete(2)), 1);
  EXPECT_EQ(count_perfect_matchings(cycle(4)), 2);
  // K4 and Petersen values come from edge-by-edge enumeration.
  EXPECT_EQ(brute_perfect_matchings(complete(4)), 3U);
  EXPECT_EQ(count_perfect_matchings(complete(4)), 3);
  EXPECT_EQ(brute_perfect_matchings(families::petersen()), 6U);
  EXPECT_EQ(count_perfect_matchings(families::petersen()), 6);
  EXPECT_EQ(count_perfect_matchings(Graph(0)), 1);
  EXPECT_EQ(count_perfect_matchings(complete(5)), 0);
  EXPECT_EQ(count_perfect_matchings(complete(7)), 0);
}

TEST(PerfectMatchings, CompleteBipartiteIsFactorial) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(count_perfect_matchings(complete_bipartite(k, k)), factorial(k)) << k;
  }
}

TEST(PerfectMatchings, AgreesWithEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * static_cast<int>(rng() % 7);
    const Graph g = random_test_graph(n, 0.3 + 0.6 * (trial % 3) / 2.0, rng);
    ASSERT_EQ(count_perfect_matchings(g), brute_perfect_matchings(g)) << to_graph6(g);
  }
}

// The ladder P_2 x P_k has F(k+1) perfect matchings (Fibonacci, F(1)=F(2)=1).
TEST(PerfectMatchings, LadderAtMaximumOrder) {
  for (int k : {1, 2, 5, 17, 31}) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
      e.emplace_back(i, k + i);
      if (i + 1 < k) {
        e.emplace_back(i, i + 1);
        e.emplace_back(k + i, k + i + 1);
      }
    }
    Count a = 1, b = 1;  // F(1), F(2)
    for (int i = 2; i <= k; ++i) {
      Count c = a + b;
      a = b;
      b = c;
    }
    EXPECT_EQ(count_perfect_matchings(from_edge_list(2 * k, e)), b) << k;
  }
  EXPECT_EQ(count_perfect_matchings(cycle(62)), 2);
}

TEST(Permanent, NamedMatrices) {
  EXPECT_EQ(permanent_adjacency(complete(2)), 1);
  EXPECT_EQ(brute_permanent(Matrix01::adjacency(complete(4))), 9U);
  EXPECT_EQ(permanent_adjacency(complete(4)), 9);
  EXPECT_EQ(brute_permanent(Matrix01::adjacency(complete_bipartite(3, 3))), 36U);
  EXPECT_EQ(permanent_adjacency(complete_bipartite(3, 3)), 36);
  EXPECT_EQ(brute_permanent(Matrix01::adjacency(cycle(6))), 4U);
  EXPECT_EQ(permanent_adjacency(cycle(6)), 4);
  EXPECT_EQ(permanent(Matrix01::identity(5)), 1);
  EXPECT_EQ(permanent_adjacency(Graph(2)), 0);
  EXPECT_EQ(permanent(Matrix01(0)), 1);
  EXPECT_EQ(permanent(Matrix01::all_ones(12)), factorial(12));
}

TEST(Permanent, NaiveOracle) {
  EXPECT_EQ(naive_permanent(Matrix01::adjacency(complete(4))), 9);
  EXPECT_EQ(naive_permanent(Matrix01::all_ones(3)), 6);
  EXPECT_EQ(naive_permanent(Matrix01::identity(3)), 1);
  EXPECT_EQ(naive_permanent(Matrix01(0)), 1);
  EXPECT_THROW(naive_permanent(Matrix01::all_ones(11)), GuardError);
}

TEST(Permanent, RyserMatchesNaiveOnRandomMatrices) {
  std::mt19937_64 rng(77);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    Matrix01 m(n);
    const double p = 0.2 + 0.2 * (trial % 4);
    std::bernoulli_distribution bit(p);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.set(i, j, bit(rng));
    }
    ASSERT_EQ(permanent(m), naive_permanent(m)) << "trial " << trial;
  }
}

TEST(Permanent, BigIntegerAccumulatorAgrees) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    Matrix01 m(n);
    std::bernoulli_distribution bit(0.6);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.set(i, j, bit(rng));
    }
    ASSERT_EQ(detail::permanent_ryser_bigint(m), naive_permanent(m));
  }
  EXPECT_EQ(detail::permanent_ryser_bigint(Matrix01::all_ones(10)), factorial(10));
}

TEST(Counts, MultiplicativeOverDisjointUnion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph a = random_test_graph(2 * static_cast<int>(rng() % 4), 0.6, rng);
    const Graph b = random_test_graph(static_cast<int>(rng() % 7), 0.6, rng);
    const Graph u = disjoint_union(a, b);
    ASSERT_EQ(count_perfect_matchings(u),
              count_perfect_matchings(a) * count_perfect_matchings(b));
    ASSERT_EQ(permanent_adjacency(u), permanent_adjacency(a) * permanent_adjacency(b));
  }
}

TEST(Counts, RelabelingInvariant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_test_graph(static_cast<int>(rng() % 11), 0.5, rng);
    const Graph h = relabel(g, random_permutation(g.n(), rng));
    ASSERT_EQ(count_perfect_matchings(g), count_perfect_matchings(h));
    ASSERT_EQ(permanent_adjacency(g), permanent_adjacency(h));
  }
}

TEST(CycleCovers, NamedTallies) {
  EXPECT_EQ(tally(complete(4), CycleMode::even_only), 9);
  EXPECT_EQ(tally(complete(4), CycleMode::all_cycles), 9);
  EXPECT_EQ(tally(complete(3), CycleMode::all_cycles), 2);
  EXPECT_EQ(tally(complete(3), CycleMode::even_only), 0);
  EXPECT_EQ(tally(cycle(6), CycleMode::even_only), 4);
  EXPECT_EQ(tally(complete(2), CycleMode::even_only), 1);
  EXPECT_EQ(tally(complete(2), CycleMode::all_cycles), 1);
  EXPECT_EQ(tally(Graph(0), CycleMode::even_only), 1);
  EXPECT_EQ(tally(Graph(0), CycleMode::all_cycles), 1);
  EXPECT_EQ(weighted_cycle_cover_count(cycle(6), CycleMode::even_only).mode,
            CycleMode::even_only);
}

TEST(CycleCovers, MatchPermutationEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_test_graph(static_cast<int>(rng() % 9), 0.55, rng);
    ASSERT_EQ(tally(g, CycleMode::even_only), brute_even_cover_tally(g)) << to_graph6(g);
    ASSERT_EQ(tally(g, CycleMode::all_cycles), brute_permanent(Matrix01::adjacency(g)))
        << to_graph6(g);
  }
}

// The even-cycle tally counts ordered pairs of perfect matchings and the
// full tally counts permutations, on every graph up to 12 vertices sampled.
TEST(CycleCovers, ProofIdentities) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    const Graph g = random_test_graph(n, 0.25 + 0.5 * (trial % 2), rng);
    const Count perfmat = count_perfect_matchings(g);
    ASSERT_EQ(tally(g, CycleMode::even_only), perfmat * perfmat) << to_graph6(g);
    ASSERT_EQ(tally(g, CycleMode::all_cycles), permanent_adjacency(g)) << to_graph6(g);
  }
}

TEST(CycleCovers, Guard) {
  EXPECT_THROW(weighted_cycle_cover_count(cycle(15), CycleMode::all_cycles), GuardError);
  EXPECT_EQ(weighted_cycle_cover_count(cycle(15), CycleMode::all_cycles, 15).total, 2);
  EXPECT_THROW(weighted_cycle_cover_count(cycle(21), CycleMode::all_cycles, 62), GuardError);
}

TEST(CycleCovers, DenseAtGuard) {
  const Graph k14 = complete(14);
  const Count pm = count_perfect_matchings(k14);
  EXPECT_EQ(pm, 135135);  // 13!!
  EXPECT_EQ(tally(k14, CycleMode::even_only), pm * pm);
  EXPECT_EQ(tally(k14, CycleMode::all_cycles), permanent_adjacency(k14));
}

TEST(Gibson, SquareOfMatchingsBelowPermanent) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_test_graph(static_cast<int>(rng() % 15), 0.5, rng);
    const Count pm = count_perfect_matchings(g);
    ASSERT_LE(pm * pm, permanent_adjacency(g));
  }
}

Matrix01 block_sum(std::initializer_list<int> orders) {
  Matrix01 m(0);
  for (int k : orders) m = m.direct_sum(Matrix01::all_ones(k));
  return m;
}

TEST(BlockStructure, RecognisesDirectSums) {
  const Matrix01 m = block_sum({2, 3});
  EXPECT_TRUE(is_block_all_ones_up_to_permutation(m));
  EXPECT_TRUE(is_block_all_ones_up_to_permutation(Matrix01(0)));
  EXPECT_TRUE(is_block_all_ones_up_to_permutation(Matrix01::identity(4)));
  EXPECT_FALSE(is_block_all_ones_up_to_permutation(Matrix01::adjacency(cycle(6))));
  EXPECT_FALSE(is_block_all_ones_up_to_permutation(Matrix01(2)));
  EXPECT_TRUE(is_block_all_ones_up_to_permutation(
      Matrix01::adjacency(complete_bipartite(3, 3))));
  EXPECT_FALSE(is_block_all_ones_up_to_permutation(Matrix01::adjacency(complete(4))));
}

TEST(BlockStructure, InvariantUnderRowAndColumnPermutations) {
  std::mt19937_64 rng(16);
  const std::vector<Matrix01> samples = {block_sum({2, 3}), block_sum({1, 1, 4}),
                                         Matrix01::adjacency(cycle(6)),
                                         Matrix01::adjacency(families::petersen())};
  for (const Matrix01& m : samples) {
    const bool expected = is_block_all_ones_up_to_permutation(m);
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix01 shuffled =
          m.permuted(random_permutation(m.n(), rng), random_permutation(m.n(), rng));
      ASSERT_EQ(is_block_all_ones_up_to_permutation(shuffled), expected);
      ASSERT_EQ(permanent(shuffled), permanent(m));
    }
  }
}

TEST(BlockStructure, SingleFlipBreaksStructure) {
  const Matrix01 m = block_sum({2, 3});
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      Matrix01 f = m;
      f.flip(i, j);
      ASSERT_FALSE(is_block_all_ones_up_to_permutation(f)) << i << "," << j;
    }
  }
}

}  // namespace
}  // namespace perfmat
