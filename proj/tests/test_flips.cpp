#include "support/oracles.hpp"
#include "support/sequences.hpp"

#include <mwkit/flips.hpp>
#include <mwkit/generators.hpp>

#include <gtest/gtest.h>

using namespace mwkit;
using support::range_set;

namespace {

KFlip random_flip(int n, int k, Rng &rng) {
  std::vector<int> lab(n);
  for (int v = 0; v < n; ++v)
    lab[v] = rng.below(k);
  // dense relabel so every label is used
  std::vector<int> remap(k, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (remap[lab[v]] < 0)
      remap[lab[v]] = next++;
    lab[v] = remap[lab[v]];
  }
  std::vector<std::vector<bool>> t(next, std::vector<bool>(next));
  for (int a = 0; a < next; ++a)
    for (int b = a; b < next; ++b)
      t[a][b] = t[b][a] = rng.bernoulli(0.5);
  return KFlip(Partition::from_labels(lab), t);
}

// Few-neighbour count from first principles: BFS per vertex of U.
int few(const Graph &h, const VertexSet &U, int r, int d) {
  auto a = oracle::adjacency(h);
  std::vector<std::vector<int>> adj(h.n());
  for (int u = 0; u < h.n(); ++u)
    for (int v = 0; v < h.n(); ++v)
      if (a[u][v])
        adj[u].push_back(v);
  int count = 0;
  for (int u : U) {
    int inside = 0;
    for (int x : oracle::bfs_ball(adj, u, r))
      inside += std::binary_search(U.begin(), U.end(), x);
    count += inside <= d;
  }
  return count;
}

} // namespace

TEST(ApplyFlip, Examples) {
  auto g = gen::random(7, 0.4, 3);
  auto one = Partition::from_labels({0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(apply_flip(g, KFlip(one, {{false}})), g);
  EXPECT_EQ(apply_flip(g, KFlip(one, {{true}})), complement(g));
  EXPECT_EQ(apply_flip(gen::complete(5), KFlip(Partition::from_labels({0, 0, 0, 0, 0}), {{true}})).edges().size(), 0u);

  auto k33 = gen::biclique(3, 3);
  auto sides = Partition::from_labels({0, 0, 0, 1, 1, 1});
  EXPECT_EQ(apply_flip(k33, KFlip(sides, {{false, true}, {true, false}})).edges().size(), 0u);
}

TEST(ApplyFlip, InvolutionAndMatrix) {
  Rng rng(1414);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rng.below(8);
    int k = 1 + rng.below(4);
    auto g = gen::random(n, rng.uniform01(), rng.next());
    auto f = random_flip(n, k, rng);
    auto h = apply_flip(g, f);
    EXPECT_EQ(apply_flip(h, f), g);
    auto m = flip_matrix(f);
    std::vector<std::vector<bool>> rows(n, std::vector<bool>(n));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        rows[u][v] = m.get(u, v);
        if (u != v)
          EXPECT_EQ(m.get(u, v), g.adjacent(u, v) != h.adjacent(u, v));
      }
    const int rank = oracle::gf2_rank_by_subsets(rows);
    EXPECT_EQ(static_cast<int>(gf2_rank(m)), rank);
    EXPECT_LE(rank, static_cast<int>(f.blocks()));
  }
}

TEST(KFlipCtor, RejectsMalformedTables) {
  auto p = Partition::from_labels({0, 1, 1});
  EXPECT_THROW(KFlip(p, {{true}}), ParameterError);
  EXPECT_THROW(KFlip(p, {{true, false}, {true, false}}), ParameterError);
  EXPECT_THROW(KFlip(p, {{true, false}, {false}}), ParameterError);
  EXPECT_THROW(apply_flip(gen::path(4), KFlip(p, {{true, false}, {false, true}})), ParameterError);
}

TEST(CountFlips, SmallValues) {
  EXPECT_EQ(count_flips(5, 1, 1000), 2u);
  // two blocks: S(3,2) = 3 partitions with 8 tables each, plus the 2 one-block flips
  EXPECT_EQ(count_flips(3, 2, 1000), 26u);
  EXPECT_EQ(count_flips(40, 3, 1000), 1001u);
}

TEST(HideoutCheck, Examples) {
  auto k6 = gen::complete(6);
  auto res = hideout_check(k6, range_set(0, 6), 1, 1, 1);
  EXPECT_FALSE(res.verified);
  ASSERT_TRUE(res.violator.has_value());
  EXPECT_EQ(res.few, 6u);
  EXPECT_EQ(res.flips, 2u);
  EXPECT_EQ(apply_flip(k6, *res.violator).edges().size(), 0u);

  EXPECT_THROW(hideout_check(k6, {0}, 1, 1, 1), PreconditionError);
  EXPECT_THROW(hideout_check(k6, {0, 1}, 1, 1, 2), PreconditionError);
  EXPECT_THROW(hideout_check(k6, {0, 1, 2}, -1, 1, 1), ParameterError);
  EXPECT_THROW(hideout_check(gen::empty(40), {0, 1, 2}, 1, 3, 1), ParameterError);
}

TEST(HideoutCheck, AgreesWithBruteForce) {
  Rng rng(1515);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below(5);
    auto g = gen::random(n, rng.uniform01(), rng.next());
    VertexSet U;
    for (int v = 0; v < n; ++v)
      if (rng.bernoulli(0.7))
        U.push_back(v);
    int d = rng.below(2);
    if (static_cast<int>(U.size()) <= d)
      continue;
    int r = 1 + rng.below(2), k = 1 + rng.below(2);
    auto res = hideout_check(g, U, r, k, d);
    // independent sweep over random flips can only find violations when the check reports one
    bool found = false;
    for (int t = 0; t < 300 && !found; ++t)
      found = few(apply_flip(g, random_flip(n, k, rng)), U, r, d) > d;
    if (found)
      EXPECT_FALSE(res.verified);
    if (res.violator)
      EXPECT_GT(few(apply_flip(g, *res.violator), U, r, d), d);
    EXPECT_EQ(res.verified, !res.violator.has_value());
  }
}

TEST(Hideout, FromWitness) {
  EXPECT_EQ(hideout_alpha(1), 8);
  EXPECT_EQ(hideout_alpha(2), 32);
  auto g = support::trace_rich(5);
  NcWitness w{range_set(0, 5), range_set(5, 37), 8};
  auto c = hideout_from_witness(g, 1, w);
  EXPECT_EQ(c.U, w.X);
  EXPECT_EQ(c.r, 2);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.d, 1);
  EXPECT_FALSE(c.verified);
  auto v = verify_hideout(g, c);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->verified);
  for (bool flip : {false, true})
    EXPECT_EQ(few(apply_flip(g, KFlip(Partition::from_labels(std::vector<int>(37, 0)), {{flip}})), c.U, 2, 1), 0);
}

TEST(Hideout, FromWitnessErrors) {
  auto g = support::trace_rich(5);
  // wrong alpha for k
  EXPECT_THROW(hideout_from_witness(g, 2, {range_set(0, 5), range_set(5, 37), 8}), PreconditionError);
  // conditions fail: alpha 16 is not exceeded
  EXPECT_THROW(hideout_from_witness(g, 1, {range_set(0, 5), range_set(5, 21), 8}), PreconditionError);
  // |X| = k
  auto g2 = support::trace_rich(1);
  EXPECT_THROW(hideout_from_witness(g2, 1, {{0}, {1, 2}, 8}), PreconditionError);
  EXPECT_THROW(hideout_alpha(0), ParameterError);
}

TEST(Hideout, NoWitnessBelowFiveColumns) {
  // pairwise delta inside all-trace Y is 2^(q-1), so alpha = 8 needs q >= 5
  for (int q = 2; q <= 4; ++q) {
    auto g = support::trace_rich(q);
    auto X = range_set(0, q);
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        EXPECT_EQ((neighbourhood_delta_bits(g, i, j) & to_bitset(range_set(q, g.n()), g.n())).count(),
                  std::size_t{1} << (q - 1));
    EXPECT_FALSE(verify_nc_witness(g, {X, range_set(q, g.n()), 8}));
  }
}
