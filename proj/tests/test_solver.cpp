#include "support/build.hpp"
#include "support/oracles.hpp"
#include "support/sequences.hpp"

#include <mwkit/generators.hpp>
#include <mwkit/merge_sequence.hpp>
#include <mwkit/solver.hpp>

#include <gtest/gtest.h>

using namespace mwkit;
using support::seq;
using support::singletons;
using support::whole;

namespace {

bool is_binary(const MergeSequence &s) {
  for (std::size_t i = 1; i < s.steps.size(); ++i)
    if (s.steps[i - 1].partition.size() != s.steps[i].partition.size() + 1)
      return false;
  return true;
}

} // namespace

TEST(NormalizeBinary, Examples) {
  auto k4 = gen::complete(4);
  auto t4 = trivial_sequence(k4);
  auto b4 = normalize_binary(k4, t4);
  EXPECT_EQ(b4.steps.size(), 4u);
  EXPECT_TRUE(is_binary(b4));
  for (const auto &st : b4.steps)
    EXPECT_TRUE(st.delta.empty());
  EXPECT_EQ(width(b4, 1), 1);
  EXPECT_TRUE(validate(k4, b4).ok());

  auto c5 = gen::cycle(5);
  auto t5 = trivial_sequence(c5);
  auto b5 = normalize_binary(c5, t5);
  EXPECT_EQ(b5.steps.size(), 5u);
  EXPECT_TRUE(is_binary(b5));
  EXPECT_LE(width(b5, 1), 3);
  EXPECT_TRUE(validate(c5, b5).ok());

  // already binary: unchanged
  EXPECT_EQ(normalize_binary(k4, b4), b4);
  auto p3 = gen::path(3);
  auto s = seq(3, {{singletons(3), {}}, {{{0, 2}, {1}}, {}}, {whole(3), {{0, 2}}}});
  EXPECT_EQ(normalize_binary(p3, s), s);
}

TEST(NormalizeBinary, ValidAndNoWider) {
  Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + rng.below(9);
    auto g = gen::random(n, rng.uniform01(), rng.next());
    support::SequenceShape shape;
    shape.max_merges_per_step = 1 + rng.below(5);
    auto s = support::random_sequence(g, rng, shape);
    auto b = normalize_binary(g, s);
    ASSERT_TRUE(validate(g, b).ok());
    EXPECT_TRUE(is_binary(b));
    for (int r = 0; r <= 3; ++r)
      EXPECT_LE(oracle::width(b, r), oracle::width(s, r)) << "r=" << r;
  }
}

TEST(NormalizeBinary, RejectsInvalid) {
  auto p3 = gen::path(3);
  EXPECT_THROW(normalize_binary(p3, seq(3, {{singletons(3), {}}, {whole(3), {}}})), PreconditionError);
}

TEST(Solver, Examples) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= 3; ++r) {
      auto k = exact_merge_width(gen::complete(n), r);
      EXPECT_EQ(k.optimum, 1);
      EXPECT_TRUE(k.optimal);
      auto e = exact_merge_width(gen::empty(n), r);
      EXPECT_EQ(e.optimum, 1);
    }
  auto p3 = gen::path(3);
  auto res = exact_merge_width(p3, 1);
  EXPECT_EQ(res.optimum, 1);
  EXPECT_TRUE(res.optimal);
  EXPECT_TRUE(validate(p3, res.witness).ok());
  EXPECT_EQ(width(res.witness, 1), 1);
  EXPECT_EQ(res.witness, seq(3, {{singletons(3), {}}, {{{0, 2}, {1}}, {}}, {whole(3), {{0, 2}}}}));
}

TEST(Solver, SingleVertex) {
  auto res = exact_merge_width(Graph(1), 1);
  EXPECT_EQ(res.optimum, 0);
  EXPECT_TRUE(validate(Graph(1), res.witness).ok());
}

TEST(Solver, MatchesNaiveOracle) {
  Rng rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + rng.below(5);
    auto g = gen::random(n, rng.uniform01(), rng.next());
    for (int r = 1; r <= 2; ++r) {
      auto res = exact_merge_width(g, r);
      ASSERT_TRUE(res.optimal);
      EXPECT_EQ(res.optimum, oracle::naive_merge_width(g, r)) << "n=" << n << " r=" << r;
      EXPECT_TRUE(oracle::valid(oracle::adjacency(g), res.witness));
      EXPECT_EQ(oracle::width(res.witness, r), res.optimum);
    }
  }
}

TEST(Solver, StructuralProperties) {
  Rng rng(505);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + rng.below(6);
    auto g = gen::random(n, rng.uniform01(), rng.next());
    int prev = 0;
    for (int r = 1; r <= 3; ++r) {
      auto res = exact_merge_width(g, r);
      ASSERT_TRUE(res.optimal);
      EXPECT_GE(res.optimum, prev);
      prev = res.optimum;
      EXPECT_LE(res.optimum, width(minimize(g, trivial_sequence(g)), r));
      // complementation swaps the classes and keeps the optimum
      EXPECT_EQ(exact_merge_width(complement(g), r).optimum, res.optimum);
    }
    VertexSet S;
    for (int v = 0; v < n; ++v)
      if (rng.bernoulli(0.6))
        S.push_back(v);
    if (S.empty())
      continue;
    EXPECT_LE(exact_merge_width(induced_subgraph(g, S), 1).optimum, exact_merge_width(g, 1).optimum);
  }
}

TEST(Solver, BudgetExhaustion) {
  auto g = gen::random(10, 0.5, 7);
  auto res = exact_merge_width(g, 2, 5);
  EXPECT_FALSE(res.optimal);
  EXPECT_TRUE(validate(g, res.witness).ok());
  EXPECT_EQ(width(res.witness, 2), res.optimum);
}

TEST(Solver, Errors) {
  EXPECT_THROW(exact_merge_width(Graph(0), 1), ParameterError);
  EXPECT_THROW(exact_merge_width(gen::empty(solver_max_vertices + 1), 1), ParameterError);
  EXPECT_THROW(exact_merge_width(gen::path(3), 0), ParameterError);
}
