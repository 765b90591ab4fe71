#pragma once

#include "types.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace mwkit {

/**
 * Partition of 0..n-1 into non-empty blocks, kept canonical: blocks sorted by
 * their minimum element, vertices ascending inside each block.
 */
class Partition {
public:
  Partition() = default;

  /// Validates and canonicalizes. Throws ParameterError unless the blocks
  /// are non-empty, pairwise disjoint and cover 0..n-1.
  static Partition from_blocks(int n, std::vector<VertexSet> blocks) {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (auto &b : blocks) {
      if (b.empty())
        throw ParameterError("empty block in partition");
      std::sort(b.begin(), b.end());
      for (auto v : b) {
        if (v < 0 || v >= n)
          throw ParameterError("vertex " + std::to_string(v) + " out of range in partition");
        if (owner[v] != -1)
          throw ParameterError("vertex " + std::to_string(v) + " appears in two blocks");
        owner[v] = 0;
      }
    }
    for (int v = 0; v < n; ++v)
      if (owner[v] == -1)
        throw ParameterError("vertex " + std::to_string(v) + " not covered by partition");
    std::sort(blocks.begin(), blocks.end(), [](const VertexSet &a, const VertexSet &b) { return a[0] < b[0]; });
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.reindex();
    return p;
  }

  /// Block id per vertex; ids need not be canonical.
  static Partition from_labels(const std::vector<int> &label) {
    std::vector<VertexSet> blocks;
    std::vector<int> remap;
    for (std::size_t v = 0; v < label.size(); ++v) {
      int l = label[v];
      if (l < 0)
        throw ParameterError("negative block label");
      if (static_cast<std::size_t>(l) >= remap.size())
        remap.resize(static_cast<std::size_t>(l) + 1, -1);
      if (remap[l] == -1) {
        remap[l] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[remap[l]].push_back(static_cast<Vertex>(v));
    }
    return from_blocks(static_cast<int>(label.size()), std::move(blocks));
  }

  static Partition singletons(int n) {
    std::vector<VertexSet> b;
    for (int v = 0; v < n; ++v)
      b.push_back({v});
    return from_blocks(n, std::move(b));
  }

  static Partition whole(int n) {
    if (n == 0)
      return from_blocks(0, {});
    VertexSet all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      all[v] = v;
    return from_blocks(n, {all});
  }

  int n() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<VertexSet> &blocks() const { return blocks_; }
  const VertexSet &block(std::size_t i) const { return blocks_[i]; }
  int block_of(Vertex v) const { return owner_[static_cast<std::size_t>(v)]; }
  const Bitset &block_bits(std::size_t i) const { return bits_[i]; }

  bool is_singletons() const { return static_cast<int>(blocks_.size()) == n_; }
  bool is_whole() const { return blocks_.size() == 1 || (n_ == 0 && blocks_.empty()); }

  /// Every block of *this lies inside one block of `coarser`.
  bool refines(const Partition &coarser) const {
    if (coarser.n_ != n_)
      return false;
    for (const auto &b : blocks_) {
      int target = coarser.block_of(b[0]);
      for (auto v : b)
        if (coarser.block_of(v) != target)
          return false;
    }
    return true;
  }

  /// Merge blocks i and j (i != j), returning the canonical result.
  Partition merged(std::size_t i, std::size_t j) const {
    std::vector<VertexSet> b;
    VertexSet joined = blocks_[i];
    joined.insert(joined.end(), blocks_[j].begin(), blocks_[j].end());
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      if (k != i && k != j)
        b.push_back(blocks_[k]);
    b.push_back(std::move(joined));
    return from_blocks(n_, std::move(b));
  }

  bool operator==(const Partition &o) const { return n_ == o.n_ && blocks_ == o.blocks_; }

private:
  void reindex() {
    owner_.assign(static_cast<std::size_t>(n_), -1);
    bits_.clear();
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      bits_.push_back(to_bitset(blocks_[i], static_cast<std::size_t>(n_)));
      for (auto v : blocks_[i])
        owner_[v] = static_cast<int>(i);
    }
  }

  int n_ = 0;
  std::vector<VertexSet> blocks_;
  std::vector<int> owner_;
  std::vector<Bitset> bits_;
};

} // namespace mwkit
