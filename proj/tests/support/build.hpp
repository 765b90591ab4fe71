#pragma once

#include <mwkit/merge_sequence.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace support {

struct StepSpec {
  std::vector<mwkit::VertexSet> blocks;
  std::vector<std::pair<int, int>> delta;
};

/// Literal merge sequence, 0-indexed.
inline mwkit::MergeSequence seq(int n, const std::vector<StepSpec> &steps) {
  mwkit::MergeSequence s;
  s.n = n;
  for (const auto &st : steps) {
    std::vector<mwkit::VertexPair> d;
    for (auto [u, v] : st.delta)
      d.emplace_back(u, v);
    std::sort(d.begin(), d.end());
    s.steps.push_back({mwkit::Partition::from_blocks(n, st.blocks), d});
  }
  return s;
}

inline std::vector<mwkit::VertexSet> singletons(int n) {
  std::vector<mwkit::VertexSet> b;
  for (int v = 0; v < n; ++v)
    b.push_back({v});
  return b;
}

inline std::vector<mwkit::VertexSet> whole(int n) {
  mwkit::VertexSet all;
  for (int v = 0; v < n; ++v)
    all.push_back(v);
  return {all};
}

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      out.emplace_back(u, v);
  return out;
}

inline std::vector<std::pair<int, int>> pairs_of(const std::vector<mwkit::VertexPair> &ps) {
  std::vector<std::pair<int, int>> out;
  for (const auto &p : ps)
    out.emplace_back(p.u, p.v);
  return out;
}

} // namespace support
