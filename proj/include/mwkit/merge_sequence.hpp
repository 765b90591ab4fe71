#pragma once

#include "graph.hpp"
#include "partition.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace mwkit {

/// One (partition, newly resolved pairs) entry. Deltas are stored sorted.
struct MergeStep {
  Partition partition;
  std::vector<VertexPair> delta;

  bool operator==(const MergeStep &) const = default;
};

/**
 * Merge sequence stored as per-step deltas; the cumulative resolved set R_i
 * is the union of the deltas of steps 1..i. Steps are numbered from 1 in all
 * reports, matching the usual (P_1, R_1), ..., (P_m, R_m) notation.
 */
struct MergeSequence {
  int n = 0;
  std::vector<MergeStep> steps;

  std::size_t length() const { return steps.size(); }
  bool operator==(const MergeSequence &) const = default;
};

/// Resolved pairs as a symmetric adjacency, grown one delta at a time.
class ResolvedGraph {
public:
  explicit ResolvedGraph(int n) : rows_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

  void add(const VertexPair &p) {
    rows_[p.u].set(p.v);
    rows_[p.v].set(p.u);
  }
  void add(const std::vector<VertexPair> &ps) {
    for (const auto &p : ps)
      add(p);
  }
  bool contains(const VertexPair &p) const { return rows_[p.u].test(p.v); }

  const std::vector<Bitset> &rows() const { return rows_; }
  const Bitset &row(Vertex v) const { return rows_[v]; }

private:
  std::vector<Bitset> rows_;
};

/// Unresolved pairs between two blocks, split by adjacency; both lists sorted.
struct UnresolvedClasses {
  std::vector<VertexPair> edges;
  std::vector<VertexPair> non_edges;

  bool mixed() const { return !edges.empty() && !non_edges.empty(); }
  bool empty() const { return edges.empty() && non_edges.empty(); }
};

/// For a == b this ranges over pairs of distinct vertices inside the block.
inline UnresolvedClasses unresolved_between(const Graph &g, const ResolvedGraph &resolved, const Partition &p,
                                            std::size_t a, std::size_t b) {
  UnresolvedClasses out;
  const Bitset &target = p.block_bits(b);
  for (auto u : p.block(a)) {
    Bitset cand = target - resolved.row(u);
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      auto w = static_cast<Vertex>(v);
      if (a == b && w <= u)
        continue;
      (g.adjacent(u, w) ? out.edges : out.non_edges).emplace_back(u, w);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  std::sort(out.non_edges.begin(), out.non_edges.end());
  return out;
}

inline std::vector<VertexPair> merge_sorted(const std::vector<VertexPair> &a, const std::vector<VertexPair> &b) {
  std::vector<VertexPair> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// validate

enum class Violation {
  none,
  no_steps,
  first_not_singletons,
  last_not_whole,
  not_coarsening,
  invalid_pair,
  repeated_pair,
  homogeneity,
};

inline const char *violation_name(Violation v) {
  switch (v) {
  case Violation::none: return "none";
  case Violation::no_steps: return "no-steps";
  case Violation::first_not_singletons: return "first-not-singletons";
  case Violation::last_not_whole: return "last-not-whole";
  case Violation::not_coarsening: return "not-coarsening";
  case Violation::invalid_pair: return "invalid-pair";
  case Violation::repeated_pair: return "repeated-pair";
  case Violation::homogeneity: return "homogeneity";
  }
  return "unknown";
}

struct ValidationReport {
  Violation violation = Violation::none;
  int step = 0;
  VertexSet block_a, block_b;
  std::optional<VertexPair> pair; // invalid or repeated pair
  std::optional<VertexPair> edge; // homogeneity witnesses
  std::optional<VertexPair> non_edge;

  bool ok() const { return violation == Violation::none; }

  std::string summary() const {
    if (ok())
      return "ok";
    return std::string("violation ") + violation_name(violation) + " at step " + std::to_string(step);
  }
};

/**
 * Checks the three merge-sequence conditions against g. Reports the first
 * failure: first/last partition shape, then per step in order coarsening,
 * delta sanity and homogeneity (block pairs in canonical order, smallest
 * unresolved edge and non-edge as witnesses).
 */
inline ValidationReport validate(const Graph &g, const MergeSequence &s) {
  if (s.n != g.n())
    throw ParameterError("sequence has n=" + std::to_string(s.n) + " but graph has n=" + std::to_string(g.n()));
  ValidationReport rep;
  auto fail = [&](Violation v, int step) {
    rep.violation = v;
    rep.step = step;
    return rep;
  };
  if (s.steps.empty())
    return fail(Violation::no_steps, 0);
  for (std::size_t i = 0; i < s.steps.size(); ++i)
    if (s.steps[i].partition.n() != s.n)
      throw ParameterError("step " + std::to_string(i + 1) + " partitions the wrong vertex count");
  if (!s.steps.front().partition.is_singletons())
    return fail(Violation::first_not_singletons, 1);
  if (!s.steps.back().partition.is_whole())
    return fail(Violation::last_not_whole, static_cast<int>(s.steps.size()));

  ResolvedGraph resolved(s.n);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto &step = s.steps[i];
    const int label = static_cast<int>(i + 1);
    if (i > 0 && !s.steps[i - 1].partition.refines(step.partition))
      return fail(Violation::not_coarsening, label);
    for (std::size_t k = 0; k < step.delta.size(); ++k) {
      const auto &p = step.delta[k];
      if (p.u < 0 || p.v >= s.n || p.u == p.v) {
        rep.pair = p;
        return fail(Violation::invalid_pair, label);
      }
      if (resolved.contains(p)) {
        rep.pair = p;
        return fail(Violation::repeated_pair, label);
      }
      resolved.add(p);
    }
    const auto &part = step.partition;
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a; b < part.size(); ++b) {
        auto cls = unresolved_between(g, resolved, part, a, b);
        if (cls.mixed()) {
          rep.block_a = part.block(a);
          rep.block_b = part.block(b);
          rep.edge = cls.edges.front();
          rep.non_edge = cls.non_edges.front();
          return fail(Violation::homogeneity, label);
        }
      }
  }
  return rep;
}

inline void require_valid(const Graph &g, const MergeSequence &s, const char *op) {
  auto rep = validate(g, s);
  if (!rep.ok())
    throw PreconditionError(std::string(op) + ": invalid merge sequence (" + rep.summary() + ")");
}

// ---------------------------------------------------------------------------
// width

/// Number of blocks of `prev` met by the radius-r ball around v in `resolved`.
inline int ball_block_count(const ResolvedGraph &resolved, const Partition &prev, Vertex v, int r) {
  Bitset ball = ball_in(resolved.rows(), v, r);
  std::vector<char> hit(prev.size(), 0);
  int count = 0;
  for (auto x = ball.find_first(); x != Bitset::npos; x = ball.find_next(x)) {
    int b = prev.block_of(static_cast<Vertex>(x));
    if (!hit[b]) {
      hit[b] = 1;
      ++count;
    }
  }
  return count;
}

/// Width contributed by each step i >= 2 (entry 0 is step 2).
inline std::vector<int> step_widths(const MergeSequence &s, int r) {
  if (r < 0)
    throw ParameterError("negative radius");
  std::vector<int> out;
  if (s.steps.empty())
    return out;
  ResolvedGraph resolved(s.n);
  resolved.add(s.steps[0].delta);
  for (std::size_t i = 1; i < s.steps.size(); ++i) {
    resolved.add(s.steps[i].delta);
    const auto &prev = s.steps[i - 1].partition;
    int w = 0;
    for (Vertex v = 0; v < s.n; ++v)
      w = std::max(w, ball_block_count(resolved, prev, v, r));
    out.push_back(w);
  }
  return out;
}

/**
 * Radius-r width: max over steps i >= 2 and vertices v of the number of
 * blocks of P_{i-1} within distance r of v in (V, R_i). v's own block counts.
 * Zero for a one-step sequence.
 */
inline int width(const MergeSequence &s, int r) {
  auto w = step_widths(s, r);
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

// ---------------------------------------------------------------------------
// minimize / minimality

/**
 * Replaces the resolved sets by an inclusion-minimal family below the
 * original one. Step by step, each block pair whose unresolved pairs are
 * mixed gets exactly one whole class resolved: among the classes already
 * resolved in the input's R_i, the smaller one, edges on ties. R_1 ends up
 * empty since singleton block pairs are never mixed.
 */
inline MergeSequence minimize(const Graph &g, const MergeSequence &s) {
  require_valid(g, s, "minimize");
  MergeSequence out;
  out.n = s.n;
  ResolvedGraph original(s.n);
  ResolvedGraph kept(s.n);
  for (const auto &step : s.steps) {
    original.add(step.delta);
    std::vector<VertexPair> delta;
    const auto &part = step.partition;
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a; b < part.size(); ++b) {
        auto cls = unresolved_between(g, kept, part, a, b);
        if (!cls.mixed())
          continue;
        auto covered = [&](const std::vector<VertexPair> &c) {
          return std::all_of(c.begin(), c.end(), [&](const VertexPair &p) { return original.contains(p); });
        };
        bool edges_ok = covered(cls.edges);
        bool non_ok = covered(cls.non_edges);
        if (!edges_ok && !non_ok)
          throw InternalError("minimize: no resolved class below the input sequence");
        bool take_edges = edges_ok && (!non_ok || cls.edges.size() <= cls.non_edges.size());
        const auto &chosen = take_edges ? cls.edges : cls.non_edges;
        delta.insert(delta.end(), chosen.begin(), chosen.end());
      }
    // Block pairs are disjoint, so `kept` can be updated after the sweep.
    std::sort(delta.begin(), delta.end());
    kept.add(delta);
    out.steps.push_back({part, std::move(delta)});
  }
  return out;
}

/**
 * True iff no valid family R'_i subset of R_i exists other than s's own: R_1
 * is empty and each delta consists of exactly one full class per mixed block
 * pair and nothing else.
 */
inline bool is_minimal(const Graph &g, const MergeSequence &s) {
  if (!validate(g, s).ok())
    return false;
  ResolvedGraph resolved(s.n);
  for (const auto &step : s.steps) {
    const auto &part = step.partition;
    std::vector<VertexPair> expected;
    ResolvedGraph delta_set(s.n);
    delta_set.add(step.delta);
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a; b < part.size(); ++b) {
        auto cls = unresolved_between(g, resolved, part, a, b);
        auto count_in = [&](const std::vector<VertexPair> &c) {
          return static_cast<std::size_t>(
              std::count_if(c.begin(), c.end(), [&](const VertexPair &p) { return delta_set.contains(p); }));
        };
        auto ie = count_in(cls.edges);
        auto in = count_in(cls.non_edges);
        if (!cls.mixed()) {
          if (ie + in != 0)
            return false;
          continue;
        }
        bool edges_full = ie == cls.edges.size() && in == 0;
        bool non_full = in == cls.non_edges.size() && ie == 0;
        if (!edges_full && !non_full)
          return false;
      }
    resolved.add(step.delta);
  }
  return true;
}

/// Moves R_1 into step 2 so that R_1 is empty; widths are unaffected.
inline MergeSequence reset_first_resolution(const MergeSequence &s) {
  MergeSequence out = s;
  if (out.steps.size() >= 2 && !out.steps[0].delta.empty()) {
    out.steps[1].delta = merge_sorted(out.steps[0].delta, out.steps[1].delta);
    out.steps[0].delta.clear();
  }
  return out;
}

// ---------------------------------------------------------------------------
// synchronisation (minimal sequences)

struct SyncReport {
  bool ok = true;
  int step = 0;     // i: both pairs unresolved in R_i between the same blocks
  int differs = 0;  // j: first step whose R_j contains exactly one of them
  VertexPair first, second;
};

/// Step at which each pair enters R (1-based), or max() if never.
inline std::vector<int> resolution_steps(const MergeSequence &s) {
  std::vector<int> when(static_cast<std::size_t>(s.n) * static_cast<std::size_t>(s.n),
                        std::numeric_limits<int>::max());
  for (std::size_t i = 0; i < s.steps.size(); ++i)
    for (const auto &p : s.steps[i].delta) {
      auto &slot = when[static_cast<std::size_t>(p.u) * s.n + p.v];
      slot = std::min(slot, static_cast<int>(i + 1));
    }
  return when;
}

inline SyncReport check_sync(const Graph &g, const MergeSequence &s) {
  require_valid(g, s, "check_sync");
  auto when = resolution_steps(s);
  auto at = [&](const VertexPair &p) { return when[static_cast<std::size_t>(p.u) * s.n + p.v]; };
  ResolvedGraph resolved(s.n);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    resolved.add(s.steps[i].delta);
    const auto &part = s.steps[i].partition;
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a; b < part.size(); ++b) {
        auto cls = unresolved_between(g, resolved, part, a, b);
        auto pairs = merge_sorted(cls.edges, cls.non_edges);
        if (pairs.empty())
          continue;
        const VertexPair p0 = pairs.front();
        for (const auto &q : pairs)
          if (at(q) != at(p0)) {
            return {false, static_cast<int>(i + 1), std::min(at(p0), at(q)), p0, q};
          }
      }
  }
  return {};
}

// ---------------------------------------------------------------------------
// restriction

struct RestrictResult {
  MergeSequence sequence;
  VertexSet original; // original[new id] = old id
};

/**
 * Induced sub-sequence on S, renumbered by ascending original id. Runs of
 * equal consecutive restricted partitions collapse onto the first step of the
 * run; the deltas of the dropped steps move to the next kept step (or vanish
 * after the last one, where the partition is already {S}). This keeps every
 * surviving step's (P_{i-1}, R_i) pair a restriction of an original one, so
 * width cannot grow.
 */
inline RestrictResult restrict_sequence(const Graph &g, const MergeSequence &s, const VertexSet &S) {
  require_valid(g, s, "restrict");
  if (S.empty())
    throw ParameterError("restrict: empty vertex set");
  for (std::size_t i = 0; i < S.size(); ++i) {
    g.check_vertex(S[i]);
    if (i > 0 && S[i] <= S[i - 1])
      throw ParameterError("restrict: vertex set must be strictly ascending");
  }
  std::vector<int> renum(static_cast<std::size_t>(s.n), -1);
  for (std::size_t i = 0; i < S.size(); ++i)
    renum[S[i]] = static_cast<int>(i);
  const int k = static_cast<int>(S.size());

  RestrictResult out;
  out.original = S;
  out.sequence.n = k;
  std::vector<VertexPair> carry;
  for (const auto &step : s.steps) {
    std::vector<VertexSet> blocks;
    for (const auto &b : step.partition.blocks()) {
      VertexSet nb;
      for (auto v : b)
        if (renum[v] >= 0)
          nb.push_back(renum[v]);
      if (!nb.empty())
        blocks.push_back(std::move(nb));
    }
    auto part = Partition::from_blocks(k, std::move(blocks));
    std::vector<VertexPair> delta;
    for (const auto &p : step.delta)
      if (renum[p.u] >= 0 && renum[p.v] >= 0)
        delta.emplace_back(renum[p.u], renum[p.v]);
    std::sort(delta.begin(), delta.end());
    if (!out.sequence.steps.empty() && out.sequence.steps.back().partition == part) {
      carry = merge_sorted(carry, delta);
      continue;
    }
    out.sequence.steps.push_back({std::move(part), merge_sorted(carry, delta)});
    carry.clear();
  }
  return out;
}

// ---------------------------------------------------------------------------
// trivial sequence

/// (singletons, {}) then (V, D) with D the smaller of edges / non-edges, edges on ties.
inline MergeSequence trivial_sequence(const Graph &g) {
  if (g.n() < 1)
    throw ParameterError("trivial_sequence needs at least one vertex");
  MergeSequence s;
  s.n = g.n();
  s.steps.push_back({Partition::singletons(g.n()), {}});
  if (g.n() == 1)
    return s;
  const std::size_t pairs = static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2;
  const std::size_t m = g.edge_count();
  std::vector<VertexPair> d;
  if (m != 0 && m != pairs) {
    if (m <= pairs - m) {
      d = g.edges();
    } else {
      for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
          if (!g.adjacent(u, v))
            d.emplace_back(u, v);
    }
  }
  s.steps.push_back({Partition::whole(g.n()), std::move(d)});
  return s;
}

// ---------------------------------------------------------------------------
// structural omega-boundedness

struct StructuralReport {
  bool ok = true;
  int step = 0;
  VertexSet block;
  VertexPair edge;
};

/// Every non-independent block of P_i has all incident edges in R_i.
inline StructuralReport is_structurally_bounded(const Graph &g, const MergeSequence &s) {
  require_valid(g, s, "is_structurally_bounded");
  ResolvedGraph resolved(s.n);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    resolved.add(s.steps[i].delta);
    const auto &part = s.steps[i].partition;
    for (std::size_t b = 0; b < part.size(); ++b) {
      if (is_independent(g, part.block_bits(b)))
        continue;
      // smallest offending edge over all endpoints in the block
      std::optional<VertexPair> worst;
      for (auto u : part.block(b)) {
        Bitset bad = g.neighbours(u) - resolved.row(u);
        if (bad.any()) {
          VertexPair e(u, static_cast<Vertex>(bad.find_first()));
          if (!worst || e < *worst)
            worst = e;
        }
      }
      if (worst)
        return {false, static_cast<int>(i + 1), part.block(b), *worst};
    }
  }
  return {};
}

} // namespace mwkit
