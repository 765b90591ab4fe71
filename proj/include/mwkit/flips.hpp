#pragma once

#include "extraction.hpp"
#include "gf2.hpp"
#include "partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwkit {

/// Partition plus a symmetric table saying which block pairs (diagonal included) get flipped.
struct KFlip {
  Partition partition;
  std::vector<std::vector<bool>> table;

  KFlip() = default;
  KFlip(Partition p, std::vector<std::vector<bool>> t) : partition(std::move(p)), table(std::move(t)) {
    const auto b = partition.size();
    if (table.size() != b)
      throw ParameterError("flip table size does not match the partition");
    for (std::size_t i = 0; i < b; ++i) {
      if (table[i].size() != b)
        throw ParameterError("flip table is not square");
      for (std::size_t j = 0; j < i; ++j)
        if (table[i][j] != table[j][i])
          throw ParameterError("flip table is not symmetric");
    }
  }

  std::size_t blocks() const { return partition.size(); }
  bool operator==(const KFlip &) const = default;
};

inline Graph apply_flip(const Graph &g, const KFlip &f) {
  if (f.partition.n() != g.n())
    throw ParameterError("flip partition does not cover the graph's vertices");
  std::vector<Bitset> toggles;
  for (std::size_t a = 0; a < f.blocks(); ++a) {
    Bitset t(static_cast<std::size_t>(g.n()));
    for (std::size_t b = 0; b < f.blocks(); ++b)
      if (f.table[a][b])
        t |= f.partition.block_bits(b);
    toggles.push_back(std::move(t));
  }
  auto rows = g.rows();
  for (Vertex u = 0; u < g.n(); ++u) {
    rows[u] ^= toggles[f.partition.block_of(u)];
    rows[u].reset(u);
  }
  return Graph::from_rows(std::move(rows));
}

/**
 * The n x n matrix T[u][v] = table[block u][block v], diagonal included. Off
 * the diagonal it is exactly adj(g) + adj(apply_flip(g, f)) over GF(2); it
 * has rank at most the number of blocks.
 */
inline GF2Matrix flip_matrix(const KFlip &f) {
  const auto n = static_cast<std::size_t>(f.partition.n());
  GF2Matrix m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (f.table[f.partition.block_of(static_cast<Vertex>(u))][f.partition.block_of(static_cast<Vertex>(v))])
        m.set(u, v);
  return m;
}

// ---------------------------------------------------------------------------
// Hideouts

struct HideoutCertificate {
  VertexSet U;
  int r = 2;
  int k = 1;
  int d = 1;
  bool verified = false; // true: brute-force checked; false: asserted by the construction

  bool operator==(const HideoutCertificate &) const = default;
};

struct HideoutCheck {
  bool verified = false;
  std::optional<KFlip> violator; // first violating flip in enumeration order
  std::size_t few = 0;           // size of the few-neighbour set under the violator
  std::uint64_t flips = 0;       // flips examined
};

inline constexpr std::uint64_t hideout_default_guard = 2'000'000;

/// Number of flips with at most k blocks on n vertices, saturating at cap + 1.
inline std::uint64_t count_flips(int n, int k, std::uint64_t cap) {
  // Stirling numbers of the second kind, row by row
  std::vector<std::uint64_t> S(static_cast<std::size_t>(k) + 1, 0);
  S[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int b = std::min(i, k); b >= 0; --b)
      S[b] = b == 0 ? 0 : std::min<std::uint64_t>(cap + 1, S[b - 1] + detail::sat_mul(b, S[b]));
  std::uint64_t total = 0;
  for (int b = 1; b <= k; ++b) {
    const int bits = b * (b + 1) / 2;
    std::uint64_t tables = bits >= 63 ? cap + 1 : (std::uint64_t{1} << bits);
    total = std::min<std::uint64_t>(cap + 1, total + detail::sat_mul(S[b], tables));
  }
  return total;
}

/// Vertices of U whose radius-r ball in h contains at most d vertices of U.
inline std::size_t few_neighbour_count(const Graph &h, const VertexSet &U, int r, int d) {
  const Bitset ub = to_bitset(U, static_cast<std::size_t>(h.n()));
  std::size_t few = 0;
  for (auto u : U)
    if (static_cast<int>((ball_in(h.rows(), u, r) & ub).count()) <= d)
      ++few;
  return few;
}

/**
 * Brute-force hideout test: every partition into at most k blocks
 * (restricted growth strings, lexicographic) with every symmetric flip table
 * (table bits over block pairs (a, b), a <= b, in lexicographic order, as a
 * binary counter). Requires |U| > d, since otherwise every set passes.
 */
inline HideoutCheck hideout_check(const Graph &g, const VertexSet &U, int r, int k, int d,
                                  std::uint64_t guard = hideout_default_guard) {
  detail::require_vertex_set(g, U, "U");
  if (r < 0 || k < 1 || d < 0)
    throw ParameterError("hideout_check: need r >= 0, k >= 1, d >= 0");
  if (static_cast<long long>(U.size()) <= d)
    throw PreconditionError("hideout_check: |U| must exceed d");
  if (count_flips(g.n(), k, guard) > guard)
    throw ParameterError("hideout_check: number of " + std::to_string(k) + "-flips on " + std::to_string(g.n()) +
                         " vertices exceeds the enumeration guard");
  HideoutCheck out;
  const int n = g.n();
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    int blocks = 0;
    for (int v = 0; v < n; ++v)
      blocks = std::max(blocks, rgs[v] + 1);
    if (n == 0)
      blocks = 0;
    Partition p = Partition::from_labels(rgs);
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < blocks; ++a)
      for (int b = a; b < blocks; ++b)
        cells.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
      std::vector<std::vector<bool>> table(static_cast<std::size_t>(blocks), std::vector<bool>(blocks, false));
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (mask >> c & 1)
          table[cells[c].first][cells[c].second] = table[cells[c].second][cells[c].first] = true;
      KFlip f(p, std::move(table));
      ++out.flips;
      auto few = few_neighbour_count(apply_flip(g, f), U, r, d);
      if (static_cast<long long>(few) > d) {
        out.violator = std::move(f);
        out.few = few;
        return out;
      }
    }
    // next restricted growth string with values < k
    int i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j)
        prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max && rgs[i] + 1 < k)
        break;
      --i;
    }
    if (i <= 0)
      break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j)
      rgs[j] = 0;
  }
  out.verified = true;
  return out;
}

inline long long hideout_alpha(int k) {
  if (k < 1 || k > 30)
    throw ParameterError("hideout: k must lie in [1, 30]");
  return 1LL << (2 * k + 1);
}

/**
 * (2, k, k)-hideout U = X from a neighbourhood-complexity witness with
 * alpha = 2^(2k+1) and |X| > k. Flagged unverified; hideout_check (or
 * verify_hideout) upgrades it. Any such hideout gives fw_2(g) > k.
 */
inline HideoutCertificate hideout_from_witness(const Graph &g, int k, const NcWitness &w) {
  const long long alpha = hideout_alpha(k);
  if (w.alpha != alpha)
    throw PreconditionError("hideout_from_witness: witness alpha " + std::to_string(w.alpha) + " != 2^(2k+1) = " +
                            std::to_string(alpha));
  detail::require_vertex_set(g, w.X, "X");
  detail::require_vertex_set(g, w.Y, "Y");
  if (!verify_nc_witness(g, w))
    throw PreconditionError("hideout_from_witness: witness conditions do not hold");
  if (static_cast<long long>(w.X.size()) <= k)
    throw PreconditionError("hideout_from_witness: need |X| > k");
  return {w.X, 2, k, k, false};
}

/// Runs the full enumeration; returns the certificate flagged verified, or nullopt if a flip refutes it.
inline std::optional<HideoutCertificate> verify_hideout(const Graph &g, const HideoutCertificate &c,
                                                        std::uint64_t guard = hideout_default_guard) {
  auto res = hideout_check(g, c.U, c.r, c.k, c.d, guard);
  if (!res.verified)
    return std::nullopt;
  HideoutCertificate out = c;
  out.verified = true;
  return out;
}

} // namespace mwkit
