#pragma once

#include "graph.hpp"
#include "random.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mwkit {

/// Vertex numbering of shift(n): pairs (i, j), 1 <= i < j <= n, sorted lexicographically.
inline std::vector<std::pair<int, int>> shift_graph_labels(int n) {
  std::vector<std::pair<int, int>> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      labels.emplace_back(i, j);
  return labels;
}

namespace gen {

inline void require(bool ok, const std::string &what) {
  if (!ok)
    throw ParameterError(what);
}

inline Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph empty(int n) {
  require(n >= 1, "empty: n must be >= 1");
  return Graph(n);
}

inline Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<VertexPair> e;
  for (int v = 0; v + 1 < n; ++v)
    e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  auto e = path(n).edges();
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph biclique(int a, int b) {
  require(a >= 1 && b >= 1, "biclique: both sides must be >= 1");
  std::vector<VertexPair> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

/// rows x cols grid, vertex (i, j) numbered i * cols + j.
inline Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid: dimensions must be >= 1");
  std::vector<VertexPair> e;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int v = i * cols + j;
      if (j + 1 < cols)
        e.emplace_back(v, v + 1);
      if (i + 1 < rows)
        e.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, e);
}

/// G(n, p): pairs (u, v), u < v, visited lexicographically, one uniform01() draw each.
inline Graph random(int n, double p, std::uint64_t seed) {
  require(n >= 1, "random: n must be >= 1");
  require(p >= 0.0 && p <= 1.0, "random: edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p))
        e.emplace_back(u, v);
  return Graph(n, e);
}

/// Vertices (i, j) with i < j; (i, j) ~ (j, k).
inline Graph shift(int n) {
  require(n >= 2, "shift: n must be >= 2");
  auto labels = shift_graph_labels(n);
  std::vector<VertexPair> e;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      auto [i, j] = labels[a];
      auto [k, l] = labels[b];
      if (j == k || l == i)
        e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  return Graph(static_cast<int>(labels.size()), e);
}

} // namespace gen

/**
 * Named-family front end used by the CLI. `params` are the family's integer
 * parameters; random takes (n) and reads its edge probability from
 * `probability`.
 */
inline Graph generate(const std::string &family, const std::vector<long long> &params,
                      std::optional<std::uint64_t> seed = std::nullopt, double probability = 0.5) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw ParameterError(family + ": expected " + std::to_string(k) + " parameter(s), got " +
                           std::to_string(params.size()));
  };
  auto p = [&](std::size_t i) {
    if (params[i] < 0 || params[i] > 1'000'000)
      throw ParameterError(family + ": parameter out of range");
    return static_cast<int>(params[i]);
  };
  if (family == "complete") {
    arity(1);
    return gen::complete(p(0));
  }
  if (family == "empty") {
    arity(1);
    return gen::empty(p(0));
  }
  if (family == "path") {
    arity(1);
    return gen::path(p(0));
  }
  if (family == "cycle") {
    arity(1);
    return gen::cycle(p(0));
  }
  if (family == "biclique") {
    arity(2);
    return gen::biclique(p(0), p(1));
  }
  if (family == "grid") {
    arity(2);
    return gen::grid(p(0), p(1));
  }
  if (family == "shift") {
    arity(1);
    return gen::shift(p(0));
  }
  if (family == "random") {
    arity(1);
    return gen::random(p(0), probability, seed.value_or(0));
  }
  throw ParameterError("unknown graph family '" + family + "'");
}

} // namespace mwkit
