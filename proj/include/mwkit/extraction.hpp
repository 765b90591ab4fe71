#pragma once

#include "merge_sequence.hpp"
#include "random.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mwkit {

namespace detail {

inline void require_vertex_set(const Graph &g, const VertexSet &s, const char *name) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    g.check_vertex(s[i]);
    if (i > 0 && s[i] <= s[i - 1])
      throw ParameterError(std::string(name) + " must be strictly ascending");
  }
}

inline bool disjoint(const VertexSet &a, const VertexSet &b) {
  VertexSet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

inline VertexSet minus(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Anti-complete pairs in bipartite graphs with few touched parts

struct ExtractLevel {
  std::size_t u_size = 0;
  std::size_t v_size = 0;
  int k = 0;
};

struct ExtractResult {
  VertexSet A;
  VertexSet B;
  std::vector<ExtractLevel> levels; // one entry per recursion level, outermost first
};

/**
 * Anti-complete A subset U, B subset V in the bipartite relation given by
 * `rel` between U and V, where every part of `parts` (a partition of V) has
 * at most |V|/(2k) vertices and every u in U touches fewer than k parts.
 * Guarantees |A| >= |U|/k and |B| >= |V|/(2k).
 *
 * Each round takes parts in canonical order until their union B reaches
 * |V|/(2k); A collects the vertices of U with no neighbour in B. If A is too
 * small, recurse on (U \ A, V \ B) with k - 1. k = 1 returns (U, V).
 */
inline ExtractResult anticomplete_extract(const Graph &rel, const VertexSet &U, const VertexSet &V,
                                          std::vector<VertexSet> parts, int k) {
  if (k < 1)
    throw ParameterError("anticomplete_extract: k must be positive");
  detail::require_vertex_set(rel, U, "U");
  detail::require_vertex_set(rel, V, "V");
  if (!detail::disjoint(U, V))
    throw PreconditionError("anticomplete_extract: U and V intersect");
  for (auto &p : parts)
    std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  {
    VertexSet covered;
    for (const auto &p : parts) {
      if (p.empty())
        throw PreconditionError("anticomplete_extract: empty part");
      covered.insert(covered.end(), p.begin(), p.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != V)
      throw PreconditionError("anticomplete_extract: parts do not partition V");
  }
  const auto nv = static_cast<long long>(V.size());
  std::vector<int> part_of(static_cast<std::size_t>(rel.n()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (2LL * k * static_cast<long long>(parts[i].size()) > nv)
      throw PreconditionError("anticomplete_extract: part with minimum vertex " + std::to_string(parts[i].front()) +
                              " exceeds |V|/(2k)");
    for (auto v : parts[i])
      part_of[v] = static_cast<int>(i);
  }
  const Bitset vbits = to_bitset(V, static_cast<std::size_t>(rel.n()));
  for (auto u : U) {
    std::set<int> touched;
    Bitset nb = rel.neighbours(u) & vbits;
    for (auto v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v))
      touched.insert(part_of[v]);
    if (static_cast<int>(touched.size()) >= k)
      throw PreconditionError("anticomplete_extract: vertex " + std::to_string(u) + " touches " +
                              std::to_string(touched.size()) + " parts, needs fewer than " + std::to_string(k));
  }

  ExtractResult res;
  VertexSet cu = U, cv = V;
  int ck = k;
  while (true) {
    res.levels.push_back({cu.size(), cv.size(), ck});
    if (ck == 1) {
      for (auto u : cu)
        if ((rel.neighbours(u) & to_bitset(cv, static_cast<std::size_t>(rel.n()))).any())
          throw InternalError("anticomplete_extract: edge left at k = 1");
      res.A = cu;
      res.B = cv;
      break;
    }
    const auto size_v = static_cast<long long>(cv.size());
    VertexSet b;
    std::vector<VertexSet> rest;
    for (auto &p : parts) {
      if (2LL * ck * static_cast<long long>(b.size()) >= size_v)
        rest.push_back(std::move(p));
      else
        b.insert(b.end(), p.begin(), p.end());
    }
    std::sort(b.begin(), b.end());
    if (size_v > 0 && static_cast<long long>(ck) * static_cast<long long>(b.size()) >= size_v)
      throw InternalError("anticomplete_extract: accumulated B reached |V|/k");
    const Bitset bbits = to_bitset(b, static_cast<std::size_t>(rel.n()));
    VertexSet a;
    for (auto u : cu)
      if (!rel.neighbours(u).intersects(bbits))
        a.push_back(u);
    if (static_cast<long long>(ck) * static_cast<long long>(a.size()) >= static_cast<long long>(cu.size())) {
      res.A = std::move(a);
      res.B = std::move(b);
      break;
    }
    VertexSet nu = detail::minus(cu, a);
    VertexSet nv2 = detail::minus(cv, b);
    // |U'|/(k-1) >= |U|/k and |V'|/(k-1) >= |V|/k
    if (static_cast<long long>(nu.size()) * ck < static_cast<long long>(cu.size()) * (ck - 1) ||
        static_cast<long long>(nv2.size()) * ck < static_cast<long long>(cv.size()) * (ck - 1))
      throw InternalError("anticomplete_extract: shrinkage inequality violated");
    cu = std::move(nu);
    cv = std::move(nv2);
    parts = std::move(rest);
    --ck;
  }
  if (static_cast<long long>(k) * static_cast<long long>(res.A.size()) < static_cast<long long>(U.size()) ||
      2LL * k * static_cast<long long>(res.B.size()) < nv)
    throw InternalError("anticomplete_extract: output below guaranteed size");
  return res;
}

// ---------------------------------------------------------------------------
// Strong Erdos-Hajnal pairs

enum class PairKind { complete, anticomplete };

inline const char *pair_kind_name(PairKind k) { return k == PairKind::complete ? "complete" : "anticomplete"; }

struct EhCertificate {
  PairKind kind = PairKind::complete;
  VertexSet A;
  VertexSet B;
  Rational floor; // n / (2(k+1)(k+2))

  bool operator==(const EhCertificate &) const = default;
};

struct EhExtraction {
  EhCertificate certificate;
  int k = 0;         // radius-1 width of the input sequence
  int step = 0;      // step i whose R_i leaves A x B unresolved; 0 for the fallback
  bool fallback = false;
};

/// Exhaustive check: disjoint, homogeneous in the claimed way, both sides meet the floor.
inline bool verify_eh(const Graph &g, const EhCertificate &c) {
  if (c.A.empty() || c.B.empty() || !detail::disjoint(c.A, c.B))
    return false;
  for (auto a : c.A)
    for (auto b : c.B) {
      if (a < 0 || a >= g.n() || b < 0 || b >= g.n())
        return false;
      if (g.adjacent(a, b) != (c.kind == PairKind::complete))
        return false;
    }
  return c.floor.at_most(static_cast<std::int64_t>(c.A.size())) &&
         c.floor.at_most(static_cast<std::int64_t>(c.B.size()));
}

/**
 * Complete or anti-complete pair of size >= n / (2(k+1)(k+2)) from a merge
 * sequence of radius-1 width k.
 *
 * With eps = 1/(2k+4): take the last step i whose predecessor partition has
 * all blocks of size <= eps*n, let U be the ceil(eps*n) smallest vertices of
 * the first block of P_i larger than eps*n, and find an anti-complete pair
 * (A, B) between U and V \ U in the resolved graph R_i, with P_{i-1} on the
 * V side and parameter k+1. Pairs in A x B are unresolved at step i, so every
 * b in B sees all of A or none of it; B' keeps the larger side, complete on
 * ties.
 *
 * When eps*n < 1 no such step exists and the floor is below 1: the first two
 * vertices are returned as singletons.
 */
inline EhExtraction eh_pair(const Graph &g, const MergeSequence &s) {
  require_valid(g, s, "eh_pair");
  const int n = g.n();
  if (n < 2)
    throw PreconditionError("eh_pair: needs at least two vertices");
  EhExtraction out;
  const int k = width(s, 1);
  out.k = k;
  const std::int64_t denom = 2LL * (k + 1) * (k + 2);
  out.certificate.floor = Rational(n, denom);
  const std::int64_t inv_eps = 2LL * k + 4;

  auto max_block = [](const Partition &p) {
    std::size_t m = 0;
    for (const auto &b : p.blocks())
      m = std::max(m, b.size());
    return static_cast<std::int64_t>(m);
  };
  std::size_t step = 0; // 0-based index of P_i
  for (std::size_t i = s.steps.size(); i-- > 1;)
    if (inv_eps * max_block(s.steps[i - 1].partition) <= n) {
      step = i;
      break;
    }
  if (step == 0) {
    out.fallback = true;
    out.certificate.A = {0};
    out.certificate.B = {1};
    out.certificate.kind = g.adjacent(0, 1) ? PairKind::complete : PairKind::anticomplete;
    if (!verify_eh(g, out.certificate))
      throw InternalError("eh_pair: fallback certificate fails verification");
    return out;
  }
  out.step = static_cast<int>(step + 1);

  const auto &part = s.steps[step].partition;
  const auto &prev = s.steps[step - 1].partition;
  const VertexSet *big = nullptr;
  for (const auto &b : part.blocks())
    if (inv_eps * static_cast<std::int64_t>(b.size()) > n) {
      big = &b;
      break;
    }
  if (!big)
    throw InternalError("eh_pair: no large block at the chosen step");
  const auto u_size = static_cast<std::size_t>((n + inv_eps - 1) / inv_eps);
  VertexSet U(big->begin(), big->begin() + static_cast<std::ptrdiff_t>(u_size));
  VertexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  VertexSet rest = detail::minus(all, U);

  ResolvedGraph resolved(n);
  for (std::size_t i = 0; i <= step; ++i)
    resolved.add(s.steps[i].delta);
  Graph rel = Graph::from_rows(resolved.rows());

  std::vector<VertexSet> parts;
  const Bitset ubits = to_bitset(U, static_cast<std::size_t>(n));
  for (const auto &b : prev.blocks()) {
    VertexSet p;
    for (auto v : b)
      if (!ubits.test(v))
        p.push_back(v);
    if (!p.empty())
      parts.push_back(std::move(p));
  }
  ExtractResult ab;
  try {
    ab = anticomplete_extract(rel, U, rest, std::move(parts), k + 1);
  } catch (const PreconditionError &e) {
    throw InternalError(std::string("eh_pair: block-size bound failed: ") + e.what());
  }

  VertexSet with, without;
  for (auto b : ab.B) {
    bool first = g.adjacent(ab.A.front(), b);
    for (auto a : ab.A)
      if (g.adjacent(a, b) != first)
        throw InternalError("eh_pair: vertex of B splits A although all pairs are unresolved");
    (first ? with : without).push_back(b);
  }
  auto &cert = out.certificate;
  cert.A = ab.A;
  if (with.size() >= without.size()) {
    cert.kind = PairKind::complete;
    cert.B = std::move(with);
  } else {
    cert.kind = PairKind::anticomplete;
    cert.B = std::move(without);
  }
  for (auto a : cert.A)
    for (auto b : cert.B)
      if (resolved.contains(VertexPair(a, b)))
        throw InternalError("eh_pair: resolved pair inside the certificate");
  if (!verify_eh(g, cert))
    throw InternalError("eh_pair: certificate fails verification");
  return out;
}

// ---------------------------------------------------------------------------
// Neighbourhood complexity

/// Number of distinct traces N(v) & X over v outside X.
inline std::size_t nc_profiles(const Graph &g, const VertexSet &X) {
  detail::require_vertex_set(g, X, "X");
  const Bitset xb = to_bitset(X, static_cast<std::size_t>(g.n()));
  std::set<Bitset> traces;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!xb.test(v))
      traces.insert(g.neighbours(v) & xb);
  return traces.size();
}

struct NcResult {
  std::size_t value = 0;
  VertexSet X; // a set attaining `value`
};

inline constexpr std::uint64_t nc_exact_default_limit = 5'000'000;

/// C(n, p), saturating at `cap`.
inline std::uint64_t binomial_capped(int n, int p, std::uint64_t cap) {
  if (p < 0 || p > n)
    return 0;
  p = std::min(p, n - p);
  unsigned __int128 c = 1;
  for (int i = 1; i <= p; ++i) {
    c = c * static_cast<unsigned>(n - p + i) / static_cast<unsigned>(i);
    if (c > cap)
      return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

/// pi_G(p) by enumerating every p-subset (lexicographic; first maximizer kept).
inline NcResult nc_exact(const Graph &g, int p, std::uint64_t limit = nc_exact_default_limit) {
  if (p < 0 || p > g.n())
    throw ParameterError("nc_exact: p must lie in [0, n]");
  if (binomial_capped(g.n(), p, limit) > limit)
    throw ParameterError("nc_exact: C(" + std::to_string(g.n()) + ", " + std::to_string(p) +
                         ") exceeds the enumeration limit; sample instead");
  NcResult best;
  VertexSet X(static_cast<std::size_t>(p));
  std::iota(X.begin(), X.end(), 0);
  bool first = true;
  while (true) {
    auto v = nc_profiles(g, X);
    if (first || v > best.value) {
      best = {v, X};
      first = false;
    }
    int i = p - 1;
    while (i >= 0 && X[i] == g.n() - p + i)
      --i;
    if (i < 0)
      break;
    ++X[i];
    for (int j = i + 1; j < p; ++j)
      X[j] = X[j - 1] + 1;
  }
  return best;
}

/// Lower bound on pi_G(p) from `trials` random p-subsets.
inline NcResult nc_sample(const Graph &g, int p, int trials, std::uint64_t seed) {
  if (p < 0 || p > g.n())
    throw ParameterError("nc_sample: p must lie in [0, n]");
  if (trials < 1)
    throw ParameterError("nc_sample: trials must be positive");
  Rng rng(seed);
  VertexSet order(static_cast<std::size_t>(g.n()));
  NcResult best;
  for (int t = 0; t < trials; ++t) {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    VertexSet X(order.begin(), order.begin() + p);
    std::sort(X.begin(), X.end());
    auto v = nc_profiles(g, X);
    if (t == 0 || v > best.value)
      best = {v, std::move(X)};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Dense obstructions to linear neighbourhood complexity

struct NcWitness {
  VertexSet X;
  VertexSet Y;
  long long alpha = 1;

  bool operator==(const NcWitness &) const = default;
};

inline bool traces_distinct(const Graph &g, const VertexSet &X, const VertexSet &Y) {
  const Bitset xb = to_bitset(X, static_cast<std::size_t>(g.n()));
  std::set<Bitset> seen;
  for (auto y : Y)
    if (!seen.insert(g.neighbours(y) & xb).second)
      return false;
  return true;
}

inline std::size_t delta_within(const Graph &g, Vertex x, Vertex y, const Bitset &within) {
  return (neighbourhood_delta_bits(g, x, y) & within).count();
}

/// Both witness conditions: distinct traces of Y on X, and |Y & delta(x, x')| > alpha for x != x' in X.
inline bool verify_nc_witness(const Graph &g, const NcWitness &w) {
  if (!detail::disjoint(w.X, w.Y) || !traces_distinct(g, w.X, w.Y))
    return false;
  const Bitset yb = to_bitset(w.Y, static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < w.X.size(); ++i)
    for (std::size_t j = i + 1; j < w.X.size(); ++j)
      if (static_cast<long long>(delta_within(g, w.X[i], w.X[j], yb)) <= w.alpha)
        return false;
  return true;
}

/**
 * Shrinks (X0, Y0) until every two vertices of X differ on more than alpha
 * vertices of Y. Needs disjoint X0, Y0 with |Y0| > alpha |X0| and distinct
 * traces of Y0 on X0; both are preserved. Scans pairs x < x' in order and on
 * the first pair with |Y & delta(x, x')| <= alpha drops x from X and
 * delta(x, x') from Y, then rescans.
 */
inline NcWitness nc_witness_minimize(const Graph &g, const VertexSet &X0, const VertexSet &Y0, long long alpha) {
  detail::require_vertex_set(g, X0, "X0");
  detail::require_vertex_set(g, Y0, "Y0");
  if (alpha < 1)
    throw ParameterError("nc_witness_minimize: alpha must be positive");
  if (!detail::disjoint(X0, Y0))
    throw PreconditionError("nc_witness_minimize: X0 and Y0 intersect");
  if (static_cast<long long>(Y0.size()) <= alpha * static_cast<long long>(X0.size()))
    throw PreconditionError("nc_witness_minimize: need |Y0| > alpha |X0|");
  if (!traces_distinct(g, X0, Y0))
    throw PreconditionError("nc_witness_minimize: Y0 traces on X0 are not pairwise distinct");

  NcWitness w{X0, Y0, alpha};
  Bitset yb = to_bitset(Y0, static_cast<std::size_t>(g.n()));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.X.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < w.X.size() && !changed; ++j) {
        Bitset d = neighbourhood_delta_bits(g, w.X[i], w.X[j]) & yb;
        if (static_cast<long long>(d.count()) <= alpha) {
          yb -= d;
          w.X.erase(w.X.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
      }
  }
  w.Y = bitset_members(yb);
  if (static_cast<long long>(w.Y.size()) <= alpha * static_cast<long long>(w.X.size()) ||
      !verify_nc_witness(g, w))
    throw InternalError("nc_witness_minimize: output violates its guarantees");
  return w;
}

/// Carries (X, Y) with |Y| > k 2^{k+2} |X| and distinct traces: pi_G(|X|) is too large for mw_2 <= k.
struct Mw2Certificate {
  int k = 1;
  long long alpha = 0;
  VertexSet X;
  VertexSet Y;

  bool operator==(const Mw2Certificate &) const = default;
};

inline long long mw2_alpha(int k) {
  if (k < 1 || k > 40)
    throw ParameterError("mw2 bound: k must lie in [1, 40]");
  return static_cast<long long>(k) << (k + 2);
}

inline bool verify_mw2_certificate(const Graph &g, const Mw2Certificate &c) {
  if (c.alpha != mw2_alpha(c.k) || c.X.empty())
    return false;
  if (static_cast<long long>(c.Y.size()) <= c.alpha * static_cast<long long>(c.X.size()))
    return false;
  return verify_nc_witness(g, {c.X, c.Y, c.alpha});
}

/// Certificate for mw_2(g) > k, or nullopt (inconclusive) when (X0, Y0) do not qualify.
inline std::optional<Mw2Certificate> mw2_lower_bound_from_nc(const Graph &g, int k, const VertexSet &X0,
                                                             const VertexSet &Y0) {
  const long long alpha = mw2_alpha(k);
  NcWitness w;
  try {
    w = nc_witness_minimize(g, X0, Y0, alpha);
  } catch (const PreconditionError &) {
    return std::nullopt;
  }
  if (w.X.empty())
    return std::nullopt;
  return Mw2Certificate{k, alpha, w.X, w.Y};
}

} // namespace mwkit
