#pragma once

#include "merge_sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mwkit {

/// Colours are 1-based; `bound` is the certified maximum number of colours.
struct Colouring {
  std::vector<int> colours;
  std::uint64_t bound = 1;

  std::size_t count() const {
    return std::set<int>(colours.begin(), colours.end()).size();
  }
  bool operator==(const Colouring &) const = default;
};

inline bool is_proper(const Graph &g, const std::vector<int> &colours) {
  if (colours.size() != static_cast<std::size_t>(g.n()))
    return false;
  for (const auto &e : g.edges())
    if (colours[e.u] == colours[e.v])
      return false;
  return std::all_of(colours.begin(), colours.end(), [](int c) { return c >= 1; });
}

inline bool verify_colouring(const Graph &g, const Colouring &c) {
  return is_proper(g, c.colours) && c.count() <= c.bound;
}

namespace detail {

/// R_j as a predicate: pair resolved by step j (1-based)?
class ResolutionTimes {
public:
  explicit ResolutionTimes(const MergeSequence &s) : n_(s.n), when_(resolution_steps(s)) {}
  int at(Vertex x, Vertex y) const { return when_[static_cast<std::size_t>(std::min(x, y)) * n_ + std::max(x, y)]; }
  bool resolved_by(Vertex x, Vertex y, int step) const { return at(x, y) <= step; }

private:
  int n_;
  std::vector<int> when_;
};

/// A partition of V with one index per block, plus the block id per vertex.
struct IndexedParts {
  std::vector<VertexSet> parts;
  std::vector<int> index;
  std::vector<int> part_of;
};

/**
 * Turns per-vertex indices into the partition of maximal parts: vertex v goes
 * to its block of P_{index(v)}. index 0 means "own singleton".
 */
inline IndexedParts collect_parts(const MergeSequence &s, const std::vector<int> &idx) {
  IndexedParts out;
  out.part_of.assign(static_cast<std::size_t>(s.n), -1);
  std::map<std::pair<int, int>, int> key_to_part; // (index, block id at that step)
  for (Vertex v = 0; v < s.n; ++v) {
    std::pair<int, int> key{idx[v], idx[v] == 0 ? v : s.steps[idx[v] - 1].partition.block_of(v)};
    if (idx[v] == 0)
      key.first = -1 - v; // unique key per singleton
    auto [it, inserted] = key_to_part.try_emplace(key, static_cast<int>(out.parts.size()));
    if (inserted) {
      out.parts.emplace_back();
      out.index.push_back(idx[v]);
    }
    out.parts[it->second].push_back(v);
    out.part_of[v] = it->second;
  }
  return out;
}

/// Blocks in processing order: descending index, then by minimum vertex.
inline std::vector<int> descending_index_order(const IndexedParts &ip) {
  std::vector<int> order(ip.parts.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ip.index[a] != ip.index[b])
      return ip.index[a] > ip.index[b];
    return ip.parts[a].front() < ip.parts[b].front();
  });
  return order;
}

/**
 * Greedy colouring of the quotient by `ip` of the graph with the given edges
 * (no edge may lie inside a part). Raises InternalError if a part sees more
 * than `max_prior` already coloured neighbouring parts.
 */
inline std::vector<int> quotient_greedy(int n, const std::vector<VertexPair> &edges, const IndexedParts &ip,
                                        std::size_t max_prior, const char *what) {
  std::vector<std::set<int>> qadj(ip.parts.size());
  for (const auto &e : edges) {
    int a = ip.part_of[e.u], b = ip.part_of[e.v];
    if (a == b)
      throw InternalError(std::string(what) + ": edge inside a part");
    qadj[a].insert(b);
    qadj[b].insert(a);
  }
  std::vector<int> part_colour(ip.parts.size(), 0);
  for (int p : descending_index_order(ip)) {
    std::set<int> used;
    std::size_t prior = 0;
    for (int q : qadj[p])
      if (part_colour[q] != 0) {
        ++prior;
        used.insert(part_colour[q]);
      }
    if (prior > max_prior)
      throw InternalError(std::string(what) + ": part with minimum vertex " + std::to_string(ip.parts[p].front()) +
                          " has " + std::to_string(prior) + " coloured neighbours, bound " +
                          std::to_string(max_prior));
    int c = 1;
    while (used.count(c))
      ++c;
    part_colour[p] = c;
  }
  std::vector<int> colours(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    colours[v] = part_colour[ip.part_of[v]];
  return colours;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Structurally omega-bounded sequences

struct MaximalUnresolvedParts {
  detail::IndexedParts parts;
  int k = 0; // radius-2 width of the (R_1-reset) sequence
};

/**
 * Maximally unresolved parts of a structurally omega-bounded sequence. The
 * index of a vertex is the last step at which its block has an incident edge
 * outside R_i; isolated vertices get index 0 and a singleton part. For every
 * part of index i, some x has xy in R_{i+1} for all y in the part; a missing
 * x raises InternalError.
 */
inline MaximalUnresolvedParts maximal_unresolved_parts(const Graph &g, const MergeSequence &seq) {
  require_valid(g, seq, "maximal_unresolved_parts");
  auto rep = is_structurally_bounded(g, seq);
  if (!rep.ok) {
    std::string block;
    for (auto v : rep.block)
      block += " " + std::to_string(v + 1);
    throw PreconditionError("sequence is not structurally omega-bounded: step " + std::to_string(rep.step) +
                            ", block" + block + ", unresolved edge " + std::to_string(rep.edge.u + 1) + " " +
                            std::to_string(rep.edge.v + 1));
  }
  const MergeSequence s = reset_first_resolution(seq);
  const int m = static_cast<int>(s.steps.size());
  std::vector<int> idx(static_cast<std::size_t>(g.n()), 0);
  ResolvedGraph resolved(s.n);
  for (int i = 0; i < m; ++i) {
    resolved.add(s.steps[i].delta);
    const auto &part = s.steps[i].partition;
    for (std::size_t b = 0; b < part.size(); ++b) {
      bool unresolved = false;
      for (auto u : part.block(b))
        if ((g.neighbours(u) - resolved.row(u)).any()) {
          unresolved = true;
          break;
        }
      if (unresolved)
        for (auto v : part.block(b))
          idx[v] = i + 1;
    }
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0)
      idx[v] = 0;

  MaximalUnresolvedParts out;
  out.parts = detail::collect_parts(s, idx);
  out.k = width(s, 2);

  const detail::ResolutionTimes when(s);
  for (std::size_t p = 0; p < out.parts.parts.size(); ++p) {
    const int i = out.parts.index[p];
    if (i == 0)
      continue;
    if (i >= m)
      throw InternalError("maximal_unresolved_parts: part unresolved at the last step");
    Bitset common(static_cast<std::size_t>(g.n()));
    common.set();
    for (auto y : out.parts.parts[p]) {
      Bitset row(static_cast<std::size_t>(g.n()));
      for (Vertex x = 0; x < g.n(); ++x)
        if (x != y && when.resolved_by(x, y, i + 1))
          row.set(x);
      common &= row;
    }
    if (common.none())
      throw InternalError("maximal_unresolved_parts: no vertex resolved to the whole part at step " +
                          std::to_string(i + 1));
  }
  return out;
}

/**
 * Colouring with at most max(k, 1) colours, k the radius-2 width, for a
 * structurally omega-bounded sequence. Parts of the maximal-unresolved
 * partition are independent; their quotient is coloured greedily in
 * descending index order, each part seeing fewer than k coloured parts.
 */
inline Colouring color_structural(const Graph &g, const MergeSequence &s) {
  auto mu = maximal_unresolved_parts(g, s);
  const auto k = static_cast<std::size_t>(std::max(mu.k, 1));
  Colouring c;
  c.bound = k;
  c.colours = detail::quotient_greedy(g.n(), g.edges(), mu.parts, k - 1, "color_structural");
  if (!verify_colouring(g, c))
    throw InternalError("color_structural: colouring is improper or over budget");
  return c;
}

// ---------------------------------------------------------------------------
// Edge partition for the recursive colouring

struct EdgePartition {
  std::vector<VertexPair> inside;     // E_I: both ends in one part
  std::vector<VertexPair> resolved;   // E_R
  std::vector<VertexPair> unresolved; // E_U
  detail::IndexedParts parts;         // maximally K_t-free parts with their index
  std::vector<VertexPair> R;          // derived resolved pairs
  int t = 0;
};

/**
 * Splits E(g) for a minimal sequence and t = omega(g) >= 2. The index of a
 * vertex is the last step at which its block is K_t-free; parts are those
 * blocks. A pair xy is in R iff it is resolved by step min(index x, index y) + 1.
 *
 * Internal checks (InternalError on failure): the three sets cover E exactly
 * once, parts are K_t-free, each part has at most k1 t later-or-equal parts
 * adjacent through E_U (k1 = radius-1 width), and s is a structurally
 * omega-bounded merge sequence for (V, E_R).
 */
inline EdgePartition edge_partition(const Graph &g, const MergeSequence &s, int t) {
  require_valid(g, s, "edge_partition");
  const int omega = clique_number(g);
  if (t < 2 || omega != t)
    throw PreconditionError("edge_partition: need t = omega(g) >= 2 (omega is " + std::to_string(omega) + ")");
  if (!is_minimal(g, s))
    throw PreconditionError("edge_partition: sequence is not minimal");

  const int m = static_cast<int>(s.steps.size());
  std::vector<int> idx(static_cast<std::size_t>(g.n()), 0);
  std::map<VertexSet, bool> has_clique; // recomputed only for blocks not seen before
  for (int i = 0; i < m; ++i) {
    const auto &part = s.steps[i].partition;
    for (std::size_t b = 0; b < part.size(); ++b) {
      auto [it, fresh] = has_clique.try_emplace(part.block(b), false);
      if (fresh)
        it->second = contains_clique(g, part.block_bits(b), t);
      if (!it->second)
        for (auto v : part.block(b))
          idx[v] = i + 1;
    }
  }
  EdgePartition ep;
  ep.t = t;
  ep.parts = detail::collect_parts(s, idx);
  for (Vertex v = 0; v < g.n(); ++v)
    if (idx[v] < 1 || idx[v] >= m)
      throw InternalError("edge_partition: vertex index outside [1, m-1]");

  const detail::ResolutionTimes when(s);
  for (Vertex x = 0; x < g.n(); ++x)
    for (Vertex y = x + 1; y < g.n(); ++y)
      if (when.resolved_by(x, y, std::min(idx[x], idx[y]) + 1))
        ep.R.emplace_back(x, y);
  for (const auto &e : g.edges()) {
    if (ep.parts.part_of[e.u] == ep.parts.part_of[e.v])
      ep.inside.push_back(e);
    else if (when.resolved_by(e.u, e.v, std::min(idx[e.u], idx[e.v]) + 1))
      ep.resolved.push_back(e);
    else
      ep.unresolved.push_back(e);
  }

  if (ep.inside.size() + ep.resolved.size() + ep.unresolved.size() != g.edge_count())
    throw InternalError("edge_partition: edge classes do not cover E");
  for (const auto &p : ep.parts.parts)
    if (contains_clique(g, to_bitset(p, static_cast<std::size_t>(g.n())), t))
      throw InternalError("edge_partition: part contains K_t");

  const int k1 = std::max(width(s, 1), 1);
  std::vector<std::set<int>> later(ep.parts.parts.size());
  for (const auto &e : ep.unresolved) {
    int a = ep.parts.part_of[e.u], b = ep.parts.part_of[e.v];
    if (ep.parts.index[b] >= ep.parts.index[a])
      later[a].insert(b);
    if (ep.parts.index[a] >= ep.parts.index[b])
      later[b].insert(a);
  }
  for (std::size_t p = 0; p < later.size(); ++p)
    if (static_cast<long long>(later[p].size()) > static_cast<long long>(k1) * t)
      throw InternalError("edge_partition: part with minimum vertex " + std::to_string(ep.parts.parts[p].front()) +
                          " has " + std::to_string(later[p].size()) + " later E_U-neighbour parts (> k t)");

  const Graph gr(g.n(), ep.resolved);
  auto vr = validate(gr, s);
  if (!vr.ok())
    throw InternalError("edge_partition: sequence invalid for G_R (" + vr.summary() + ")");
  if (!is_structurally_bounded(gr, s).ok)
    throw InternalError("edge_partition: sequence not structurally omega-bounded for G_R");
  return ep;
}

// ---------------------------------------------------------------------------
// chi-bounded colouring

/// (t+1)! k^(2t-2), saturating; 1 for t = 0.
inline std::uint64_t chi_bound(int t, int k) {
  if (t <= 0)
    return 1;
  std::uint64_t b = 1;
  for (int i = 2; i <= t + 1; ++i)
    b = detail::sat_mul(b, static_cast<std::uint64_t>(i));
  for (int i = 0; i < 2 * t - 2; ++i)
    b = detail::sat_mul(b, static_cast<std::uint64_t>(k));
  return b;
}

/**
 * Proper colouring with at most (t+1)! k^(2t-2) colours, t = omega(g) and
 * k = max(radius-2 width, 1). Recursion on t: minimize, split the edges into
 * E_I / E_R / E_U, colour E_U through its quotient (at most kt + 1 colours),
 * E_R with color_structural (at most k), and E_I by recursing into every
 * part with the restricted sequence (all parts share one palette). The
 * vertex colour is the triple, renumbered by first occurrence.
 */
inline Colouring color_bounded_mw(const Graph &g, const MergeSequence &s) {
  require_valid(g, s, "color_bounded_mw");
  const int n = g.n();
  const int k = std::max(width(s, 2), 1);
  const int t = clique_number(g);
  Colouring out;
  out.bound = chi_bound(t, k);
  if (t <= 1) {
    out.colours.assign(static_cast<std::size_t>(n), 1);
    return out;
  }

  const MergeSequence ms = minimize(g, s);
  const EdgePartition ep = edge_partition(g, ms, t);

  const auto kt = static_cast<std::size_t>(k) * static_cast<std::size_t>(t);
  const auto cu = detail::quotient_greedy(n, ep.unresolved, ep.parts, kt, "color_bounded_mw (E_U)");

  const Colouring cr = color_structural(Graph(n, ep.resolved), ms);

  std::vector<int> ci(static_cast<std::size_t>(n), 0);
  for (const auto &part : ep.parts.parts) {
    Graph sub = induced_subgraph(g, part);
    auto rs = restrict_sequence(g, ms, part);
    Colouring inner = color_bounded_mw(sub, rs.sequence);
    if (inner.bound > chi_bound(t - 1, k))
      throw InternalError("color_bounded_mw: recursive bound exceeds t! k^(2t-4)");
    for (std::size_t j = 0; j < part.size(); ++j)
      ci[part[j]] = inner.colours[j];
  }

  const Graph gi(n, ep.inside), gu(n, ep.unresolved), grr(n, ep.resolved);
  if (!is_proper(gi, ci) || !is_proper(gu, cu) || !is_proper(grr, cr.colours))
    throw InternalError("color_bounded_mw: a component colouring is improper");

  const auto count_i = std::set<int>(ci.begin(), ci.end()).size();
  const auto count_u = std::set<int>(cu.begin(), cu.end()).size();
  const auto count_r = cr.count();
  if (count_u > kt + 1 || count_r > static_cast<std::size_t>(k) ||
      count_i > chi_bound(t - 1, k))
    throw InternalError("color_bounded_mw: component colour count over its bound");

  std::map<std::tuple<int, int, int>, int> palette;
  out.colours.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto [it, fresh] = palette.try_emplace({ci[v], cr.colours[v], cu[v]}, static_cast<int>(palette.size()) + 1);
    out.colours[v] = it->second;
  }
  if (palette.size() > detail::sat_mul(detail::sat_mul(count_i, count_r), count_u) ||
      palette.size() > out.bound)
    throw InternalError("color_bounded_mw: product bound violated");
  if (!is_proper(g, out.colours))
    throw InternalError("color_bounded_mw: final colouring is improper");
  return out;
}

} // namespace mwkit
