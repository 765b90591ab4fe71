#pragma once

#include "types.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

namespace mwkit {

/**
 * Simple undirected graph on vertices 0..n-1, one adjacency bitset per
 * vertex. Immutable once built; construct through the edge-list constructor
 * or one of the generators.
 */
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {
    if (n < 0)
      throw ParameterError("negative vertex count");
  }

  /// Throws ParameterError on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, const std::vector<VertexPair> &edges) : Graph(n) {
    for (const auto &e : edges) {
      check_vertex(e.u);
      check_vertex(e.v);
      if (e.u == e.v)
        throw ParameterError("self-loop at vertex " + std::to_string(e.u));
      if (adjacent(e.u, e.v))
        throw ParameterError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      link(e.u, e.v);
    }
  }

  /// Adjacency given as rows; symmetry and empty diagonal are enforced.
  static Graph from_rows(std::vector<Bitset> rows) {
    Graph g(static_cast<int>(rows.size()));
    for (int u = 0; u < g.n_; ++u) {
      if (rows[u].size() != static_cast<std::size_t>(g.n_))
        throw ParameterError("adjacency row has wrong length");
      if (rows[u].test(u))
        throw ParameterError("self-loop at vertex " + std::to_string(u));
    }
    for (int u = 0; u < g.n_; ++u)
      for (int v = u + 1; v < g.n_; ++v)
        if (rows[u].test(v) != rows[v].test(u))
          throw ParameterError("asymmetric adjacency");
    g.adj_ = std::move(rows);
    for (const auto &r : g.adj_)
      g.m_ += r.count();
    g.m_ /= 2;
    return g;
  }

  int n() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }

  const Bitset &neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<Bitset> &rows() const { return adj_; }

  std::size_t degree(Vertex v) const { return neighbours(v).count(); }

  /// Edges as sorted pairs, lexicographic order.
  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (auto v = adj_[u].find_next(static_cast<std::size_t>(u)); v != Bitset::npos; v = adj_[u].find_next(v))
        out.emplace_back(u, static_cast<Vertex>(v));
    return out;
  }

  Bitset all_vertices() const {
    Bitset b(static_cast<std::size_t>(n_));
    b.set();
    return b;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw ParameterError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }

  bool operator==(const Graph &o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
  void link(Vertex u, Vertex v) {
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<Bitset> adj_;
};

/// Subgraph induced by `keep`, renumbered 0..|keep|-1 in ascending order.
inline Graph induced_subgraph(const Graph &g, const VertexSet &keep) {
  std::vector<Bitset> rows(keep.size(), Bitset(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    g.check_vertex(keep[i]);
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (i != j && g.adjacent(keep[i], keep[j]))
        rows[i].set(j);
  }
  return Graph::from_rows(std::move(rows));
}

inline Graph complement(const Graph &g) {
  auto rows = g.rows();
  for (int v = 0; v < g.n(); ++v) {
    rows[v].flip();
    rows[v].reset(v);
  }
  return Graph::from_rows(std::move(rows));
}

/// Graph on the same vertices with exactly the given edge set.
inline Graph spanning_subgraph(int n, const std::vector<VertexPair> &edges) { return Graph(n, edges); }

inline bool is_independent(const Graph &g, const Bitset &set) {
  for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v))
    if (g.neighbours(static_cast<Vertex>(v)).intersects(set))
      return false;
  return true;
}

/// N(x) symmetric-difference N(y), open neighbourhoods.
inline Bitset neighbourhood_delta_bits(const Graph &g, Vertex x, Vertex y) {
  g.check_vertex(x);
  g.check_vertex(y);
  return g.neighbours(x) ^ g.neighbours(y);
}

inline VertexSet neighbourhood_delta(const Graph &g, Vertex x, Vertex y) {
  return bitset_members(neighbourhood_delta_bits(g, x, y));
}

/// Radius-r ball in an adjacency given as rows (used for both graphs and resolved-pair graphs).
inline Bitset ball_in(const std::vector<Bitset> &rows, Vertex x, int r) {
  Bitset seen(rows.size());
  seen.set(static_cast<std::size_t>(x));
  Bitset frontier = seen;
  for (int step = 0; step < r && frontier.any(); ++step) {
    Bitset next(rows.size());
    for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
      next |= rows[v];
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

inline Bitset ball_bits(const Graph &g, Vertex x, int r) {
  g.check_vertex(x);
  if (r < 0)
    throw ParameterError("negative radius");
  return ball_in(g.rows(), x, r);
}

inline VertexSet ball(const Graph &g, Vertex x, int r) { return bitset_members(ball_bits(g, x, r)); }

namespace detail {

// Branch and bound with greedy colouring bounds (Tomita-style MCQ).
class CliqueSearch {
public:
  CliqueSearch(const Graph &g, int cap) : g_(g), cap_(cap) {}

  int run(const Bitset &candidates) {
    if (candidates.none())
      return 0;
    best_ = 1;
    expand(0, candidates);
    return best_;
  }

private:
  void expand(int size, Bitset cand) {
    if (best_ >= cap_)
      return;
    std::vector<Vertex> order;
    std::vector<int> bound;
    colour_sort(cand, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_ || best_ >= cap_)
        return;
      Vertex v = order[i];
      Bitset next = cand & g_.neighbours(v);
      if (next.none()) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(size + 1, next);
      }
      cand.reset(v);
    }
  }

  void colour_sort(const Bitset &cand, std::vector<Vertex> &order, std::vector<int> &bound) const {
    Bitset uncoloured = cand;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset q = uncoloured;
      while (q.any()) {
        auto v = q.find_first();
        q.reset(v);
        q -= g_.neighbours(static_cast<Vertex>(v));
        uncoloured.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(colour);
      }
    }
  }

  const Graph &g_;
  int cap_;
  int best_ = 0;
};

} // namespace detail

/// Largest clique inside `within`, stopping early once `cap` is reached.
inline int clique_number_within(const Graph &g, const Bitset &within, int cap) {
  return detail::CliqueSearch(g, cap).run(within);
}

inline int clique_number(const Graph &g) {
  return clique_number_within(g, g.all_vertices(), g.n() + 1);
}

inline bool contains_clique(const Graph &g, const Bitset &within, int t) {
  if (t <= 0)
    return true;
  return clique_number_within(g, within, t) >= t;
}

struct SymmetricDifferenceResult {
  Vertex x = 0;
  Vertex y = 0;
  std::size_t size = 0;
  bool operator==(const SymmetricDifferenceResult &) const = default;
};

/// Pair x < y minimizing |N(x) symdiff N(y)|; lexicographically first among ties.
inline SymmetricDifferenceResult min_symmetric_difference(const Graph &g) {
  if (g.n() < 2)
    throw ParameterError("min_symmetric_difference needs at least two vertices");
  SymmetricDifferenceResult best{0, 1, neighbourhood_delta_bits(g, 0, 1).count()};
  for (Vertex x = 0; x < g.n(); ++x)
    for (Vertex y = x + 1; y < g.n(); ++y) {
      auto s = (g.neighbours(x) ^ g.neighbours(y)).count();
      if (s < best.size)
        best = {x, y, s};
    }
  return best;
}

} // namespace mwkit
