#pragma once

#include "graph.hpp"

#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace mwkit {

namespace detail {

inline std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Reads one integer token; rejects trailing garbage like "3x".
inline bool read_int(std::istringstream &in, long long &out) {
  std::string tok;
  if (!(in >> tok))
    return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (const std::exception &) {
    return false;
  }
  return pos == tok.size();
}

inline bool read_uint64(std::istringstream &in, std::uint64_t &out) {
  std::string tok;
  if (!(in >> tok) || tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception &) {
    return false;
  }
  return true;
}

inline bool at_end(std::istringstream &in) {
  std::string rest;
  return !(in >> rest);
}

/// Like at_end, without consuming anything.
inline bool at_end_peek(std::istringstream &in) {
  in >> std::ws;
  return in.peek() == std::char_traits<char>::eof();
}

/// Comma separated integers, e.g. "3,4".
inline std::vector<long long> parse_int_list(const std::string &csv) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    std::istringstream is(trim(item));
    long long v;
    if (!read_int(is, v) || !at_end(is))
      throw ParameterError("not an integer list: '" + csv + "'");
    out.push_back(v);
  }
  return out;
}

} // namespace detail

/**
 * DIMACS-style edge list:
 *
 *   c <comment>
 *   p edge <n> <m>
 *   e <u> <v>        (1-indexed, m lines)
 *
 * Blank lines are ignored. Errors carry the offending line number.
 */
inline Graph parse_graph(std::istream &in) {
  std::string raw;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  std::vector<VertexPair> edges;
  std::set<VertexPair> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line[0] == 'c')
      continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      ls >> kind;
      if (n >= 0)
        throw ParseError(line_no, "second problem line");
      if (kind != "edge" || !detail::read_int(ls, n) || !detail::read_int(ls, m) || !detail::at_end(ls) ||
          n < 0 || m < 0)
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      if (n > 1'000'000)
        throw ParseError(line_no, "vertex count too large");
    } else if (tag == "e") {
      if (n < 0)
        throw ParseError(line_no, "edge before problem line");
      long long u, v;
      if (!detail::read_int(ls, u) || !detail::read_int(ls, v) || !detail::at_end(ls))
        throw ParseError(line_no, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex out of range");
      if (u == v)
        throw ParseError(line_no, "self-loop");
      VertexPair e(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      if (!seen.insert(e).second)
        throw ParseError(line_no, "duplicate edge");
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0)
    throw ParseError(line_no, "missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

inline Graph parse_graph(const std::string &text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void write_graph(std::ostream &os, const Graph &g) {
  os << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto &e : g.edges())
    os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline std::string serialize_graph(const Graph &g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

} // namespace mwkit
