#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace mwkit {

/**
 * Seeded generator with a fixed output mapping, so corpora reproduce across
 * standard libraries. The engine is std::mt19937_64 (its output sequence is
 * fixed by the standard); the distributions below are our own instead of the
 * implementation-defined <random> distributions.
 *
 *   uniform01()  = (next() >> 11) * 2^-53
 *   below(b)     = rejection sampling on next() against the largest multiple of b
 *   shuffle      = Fisher-Yates from the back, swapping i with below(i + 1)
 */
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  template <class T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(static_cast<std::uint64_t>(i))]);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace mwkit
