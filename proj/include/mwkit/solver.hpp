#pragma once

#include "merge_sequence.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace mwkit {

/**
 * Splits every multi-merge step into a chain of two-block merges. Blocks of
 * P_i are handled in canonical order; inside one, the constituent blocks of
 * P_{i-1} are folded left to right. The first sub-step of step i carries its
 * whole delta, later sub-steps carry nothing, so each intermediate R equals
 * R_i. Steps that merge nothing are dropped and their delta moves to the next
 * step.
 */
inline MergeSequence normalize_binary(const Graph &g, const MergeSequence &s) {
  require_valid(g, s, "normalize_binary");
  MergeSequence out;
  out.n = s.n;
  out.steps.push_back(s.steps.front());
  std::vector<VertexPair> carry;
  for (std::size_t i = 1; i < s.steps.size(); ++i) {
    const auto &target = s.steps[i].partition;
    auto pending = merge_sorted(carry, s.steps[i].delta);
    carry.clear();
    Partition current = out.steps.back().partition;
    if (current == target) {
      carry = std::move(pending);
      continue;
    }
    for (const auto &tb : target.blocks()) {
      // blocks of `current` inside tb, identified by their minimum vertex
      std::vector<Vertex> mins;
      for (auto v : tb) {
        const auto &cb = current.block(static_cast<std::size_t>(current.block_of(v)));
        if (cb.front() == v)
          mins.push_back(v);
      }
      for (std::size_t k = 1; k < mins.size(); ++k) {
        auto a = static_cast<std::size_t>(current.block_of(mins[0]));
        auto b = static_cast<std::size_t>(current.block_of(mins[k]));
        current = current.merged(a, b);
        out.steps.push_back({current, std::move(pending)});
        pending.clear();
      }
    }
  }
  return out;
}

struct SolveResult {
  int radius = 1;
  int optimum = 0;
  MergeSequence witness;
  bool optimal = true; // false when the node budget ran out first
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t default_solver_budget = 10'000'000;
inline constexpr int solver_max_vertices = 11;

namespace detail {

// Exhaustive search over binary merge chains with forced resolutions. Vertex
// sets are 64-bit masks and resolved sets are masks over pair indices, which
// caps n at 11 (55 pairs).
class MergeWidthSearch {
public:
  MergeWidthSearch(const Graph &g, int radius, std::uint64_t budget) : n_(g.n()), radius_(radius), budget_(budget) {
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && g.adjacent(u, v))
          adj_[u] |= bit(v);
    pid_.assign(static_cast<std::size_t>(n_ * n_), -1);
    int k = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        pid_[u * n_ + v] = pid_[v * n_ + u] = k++;
        pairs_.emplace_back(u, v);
      }
  }

  /// Searches for a sequence of width strictly below `upper`.
  void run(int upper) {
    best_ = upper;
    std::vector<std::uint64_t> blocks;
    for (int v = 0; v < n_; ++v)
      blocks.push_back(bit(v));
    std::vector<std::uint64_t> rrows(static_cast<std::size_t>(n_), 0);
    dfs(blocks, 0, rrows, 0);
  }

  bool improved() const { return found_; }
  bool exhausted() const { return aborted_; }
  int best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

  MergeSequence witness() const {
    MergeSequence s;
    s.n = n_;
    s.steps.push_back({Partition::singletons(n_), {}});
    for (const auto &[blocks, delta] : best_path_) {
      std::vector<VertexSet> bs;
      for (auto m : blocks)
        bs.push_back(mask_members(m));
      std::vector<VertexPair> d;
      for (std::size_t k = 0; k < pairs_.size(); ++k)
        if (delta >> k & 1)
          d.push_back(pairs_[k]);
      s.steps.push_back({Partition::from_blocks(n_, std::move(bs)), std::move(d)});
    }
    return s;
  }

private:
  using Mask = std::uint64_t;

  static Mask bit(int v) { return Mask{1} << v; }

  static VertexSet mask_members(Mask m) {
    VertexSet out;
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<Mask, Mask> &k) const {
      return std::hash<Mask>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  Mask encode(const std::vector<Mask> &blocks) const {
    Mask key = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (Mask m = blocks[b]; m; m &= m - 1)
        key |= static_cast<Mask>(b) << (4 * std::countr_zero(m));
    return key;
  }

  // Unresolved pairs between blocks x and y, split into (edges, non-edges) pair masks.
  std::pair<Mask, Mask> classes(Mask x, Mask y, const std::vector<Mask> &rrows) const {
    Mask edges = 0, non = 0;
    for (Mask m = x; m; m &= m - 1) {
      int u = std::countr_zero(m);
      Mask cand = y & ~rrows[u] & ~bit(u);
      if (x == y)
        cand &= ~((bit(u) << 1) - 1);
      for (; cand; cand &= cand - 1) {
        int v = std::countr_zero(cand);
        Mask p = Mask{1} << pid_[u * n_ + v];
        if (adj_[u] & bit(v))
          edges |= p;
        else
          non |= p;
      }
    }
    return {edges, non};
  }

  int step_width(const std::vector<Mask> &prev_blocks, const std::vector<Mask> &rrows) const {
    std::vector<int> owner(static_cast<std::size_t>(n_));
    for (std::size_t b = 0; b < prev_blocks.size(); ++b)
      for (Mask m = prev_blocks[b]; m; m &= m - 1)
        owner[std::countr_zero(m)] = static_cast<int>(b);
    int w = 0;
    for (int v = 0; v < n_; ++v) {
      Mask seen = bit(v), frontier = seen;
      for (int d = 0; d < radius_ && frontier; ++d) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
          next |= rrows[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= frontier;
      }
      Mask hit = 0;
      for (Mask s = seen; s; s &= s - 1)
        hit |= bit(owner[std::countr_zero(s)]);
      w = std::max(w, std::popcount(hit));
    }
    return w;
  }

  void add_pairs(std::vector<Mask> &rrows, Mask pairs) const {
    for (; pairs; pairs &= pairs - 1) {
      auto [u, v] = pairs_[std::countr_zero(pairs)];
      rrows[u] |= bit(v);
      rrows[v] |= bit(u);
    }
  }

  void dfs(const std::vector<Mask> &blocks, Mask resolved, const std::vector<Mask> &rrows, int prefix) {
    if (done_)
      return;
    if (++nodes_ > budget_) {
      aborted_ = done_ = true;
      return;
    }
    const std::size_t nb = blocks.size();
    for (std::size_t a = 0; a < nb && !done_; ++a)
      for (std::size_t b = a + 1; b < nb && !done_; ++b) {
        std::vector<Mask> next;
        next.reserve(nb - 1);
        const Mask joined = blocks[a] | blocks[b];
        for (std::size_t k = 0; k < nb; ++k)
          if (k != b)
            next.push_back(k == a ? joined : blocks[k]);
        // a < b and blocks sorted by lowest vertex: `next` stays canonical

        std::vector<std::pair<Mask, Mask>> mixed;
        for (auto y : next) {
          auto [e, ne] = classes(joined, y, rrows);
          if (e && ne)
            mixed.emplace_back(e, ne);
        }
        const std::size_t choices = std::size_t{1} << mixed.size();
        for (std::size_t c = 0; c < choices && !done_; ++c) {
          Mask delta = 0;
          for (std::size_t k = 0; k < mixed.size(); ++k)
            delta |= (c >> k & 1) ? mixed[k].second : mixed[k].first;
          auto nrows = rrows;
          add_pairs(nrows, delta);
          int w = std::max(prefix, step_width(blocks, nrows));
          if (w >= best_)
            continue;
          path_.emplace_back(next, delta);
          if (next.size() == 1) {
            best_ = w;
            best_path_ = path_;
            found_ = true;
            if (best_ <= 1)
              done_ = true;
          } else {
            auto key = std::make_pair(encode(next), resolved | delta);
            auto it = memo_.find(key);
            if (it == memo_.end() || it->second > w) {
              memo_[key] = w;
              dfs(next, resolved | delta, nrows, w);
            }
          }
          path_.pop_back();
        }
      }
  }

  int n_;
  int radius_;
  std::uint64_t budget_;
  std::vector<Mask> adj_;
  std::vector<int> pid_;
  std::vector<VertexPair> pairs_;

  int best_ = 0;
  bool found_ = false;
  bool aborted_ = false;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<std::pair<std::vector<Mask>, Mask>> path_, best_path_;
  std::unordered_map<std::pair<Mask, Mask>, int, KeyHash> memo_;
};

} // namespace detail

/**
 * Exact radius-r merge-width by branch and bound. Starts from the minimized
 * trivial sequence as the incumbent, then explores binary merge chains where
 * each merge resolves exactly one class of every newly mixed block pair
 * (both choices are branched on). A prefix's running maximum step width is a
 * lower bound for all its completions; states (partition, resolved set)
 * reached again with no better prefix are skipped.
 *
 * If the node budget runs out the best sequence found so far is returned
 * with `optimal == false`.
 */
inline SolveResult exact_merge_width(const Graph &g, int r, std::optional<std::uint64_t> budget = std::nullopt) {
  if (g.n() == 0)
    throw ParameterError("exact_merge_width: empty graph");
  if (g.n() > solver_max_vertices)
    throw ParameterError("exact_merge_width: supports at most " + std::to_string(solver_max_vertices) +
                         " vertices");
  if (r < 1)
    throw ParameterError("exact_merge_width: radius must be positive");
  SolveResult res;
  res.radius = r;
  MergeSequence incumbent = minimize(g, trivial_sequence(g));
  res.optimum = width(incumbent, r);
  res.witness = incumbent;
  if (g.n() == 1 || res.optimum <= 1)
    return res;

  detail::MergeWidthSearch search(g, r, budget.value_or(default_solver_budget));
  search.run(res.optimum);
  res.nodes = search.nodes();
  res.optimal = !search.exhausted();
  if (search.improved()) {
    res.optimum = search.best();
    res.witness = search.witness();
  }
  return res;
}

} // namespace mwkit
