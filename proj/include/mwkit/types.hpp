#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mwkit {

using Vertex = int;

/// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const VertexPair &) const = default;
};

inline std::ostream &operator<<(std::ostream &os, const VertexPair &p) {
  return os << '{' << p.u << ',' << p.v << '}';
}

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Out-of-range vertex, bad generator parameter, and similar caller mistakes.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Raised when a proven property fails during a run. Seeing this means a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

/// Exact non-negative rational, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0)
      throw ParameterError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational &) const = default;

  /// value <= x, by cross multiplication.
  bool at_most(std::int64_t x) const { return num <= x * den; }
  /// x >= value
  friend bool operator>=(std::int64_t x, const Rational &r) { return r.at_most(x); }
};

inline std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.num << '/' << r.den;
}

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    return UINT64_MAX;
  return a * b;
}

} // namespace detail

inline VertexSet bitset_members(const Bitset &b) {
  VertexSet out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  return out;
}

inline Bitset to_bitset(const VertexSet &s, std::size_t n) {
  Bitset b(n);
  for (auto v : s)
    b.set(static_cast<std::size_t>(v));
  return b;
}

} // namespace mwkit
