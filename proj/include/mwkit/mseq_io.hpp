#pragma once

#include "graph_io.hpp"
#include "merge_sequence.hpp"

#include <set>
#include <sstream>

namespace mwkit {

/**
 * .mseq text format (1-indexed):
 *
 *   c <comment>
 *   p mseq <n> <m>
 *   s 1
 *   b <v> <v> ...     one line per block of P_1
 *   r <u> <v>         zero or more, newly resolved pairs of step 1
 *   s 2
 *   ...
 *
 * Blocks must partition 1..n at every step; pairs within one step must be
 * distinct. Sequence-level conditions are left to validate().
 */
inline MergeSequence parse_mseq(std::istream &in) {
  std::string raw;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  MergeSequence s;
  std::vector<VertexSet> blocks;
  std::vector<VertexPair> delta;
  std::set<VertexPair> delta_seen;
  std::size_t step_line = 0;
  bool in_step = false;

  auto close_step = [&]() {
    if (!in_step)
      return;
    Partition p;
    try {
      p = Partition::from_blocks(static_cast<int>(n), blocks);
    } catch (const ParameterError &e) {
      throw ParseError(step_line, std::string("step ") + std::to_string(s.steps.size() + 1) + ": " + e.what());
    }
    std::sort(delta.begin(), delta.end());
    s.steps.push_back({std::move(p), std::move(delta)});
    blocks.clear();
    delta.clear();
    delta_seen.clear();
  };

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
      if (kind != "mseq" || !detail::read_int(ls, n) || !detail::read_int(ls, m) || !detail::at_end(ls) || n < 0 ||
          m < 0)
        throw ParseError(line_no, "expected 'p mseq <n> <m>'");
      if (n > 1'000'000)
        throw ParseError(line_no, "vertex count too large");
      s.n = static_cast<int>(n);
      continue;
    }
    if (n < 0)
      throw ParseError(line_no, "content before problem line");
    if (tag == "s") {
      long long idx;
      if (!detail::read_int(ls, idx) || !detail::at_end(ls))
        throw ParseError(line_no, "expected 's <i>'");
      close_step();
      if (idx != static_cast<long long>(s.steps.size()) + 1)
        throw ParseError(line_no, "steps must be numbered consecutively from 1");
      if (idx > m)
        throw ParseError(line_no, "more steps than announced");
      in_step = true;
      step_line = line_no;
    } else if (tag == "b") {
      if (!in_step)
        throw ParseError(line_no, "block outside a step");
      VertexSet b;
      long long v;
      while (!detail::at_end_peek(ls)) {
        if (!detail::read_int(ls, v))
          throw ParseError(line_no, "malformed block line");
        if (v < 1 || v > n)
          throw ParseError(line_no, "vertex out of range");
        b.push_back(static_cast<Vertex>(v - 1));
      }
      if (b.empty())
        throw ParseError(line_no, "empty block");
      blocks.push_back(std::move(b));
    } else if (tag == "r") {
      if (!in_step)
        throw ParseError(line_no, "resolved pair outside a step");
      long long u, v;
      if (!detail::read_int(ls, u) || !detail::read_int(ls, v) || !detail::at_end(ls))
        throw ParseError(line_no, "expected 'r <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex out of range");
      if (u == v)
        throw ParseError(line_no, "resolved pair with equal endpoints");
      VertexPair p(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      if (!delta_seen.insert(p).second)
        throw ParseError(line_no, "pair listed twice in one step");
      delta.push_back(p);
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0)
    throw ParseError(line_no, "missing problem line");
  close_step();
  if (static_cast<long long>(s.steps.size()) != m)
    throw ParseError(line_no, "header announces " + std::to_string(m) + " steps, found " +
                                  std::to_string(s.steps.size()));
  return s;
}

inline MergeSequence parse_mseq(const std::string &text) {
  std::istringstream in(text);
  return parse_mseq(in);
}

inline void write_mseq(std::ostream &os, const MergeSequence &s) {
  os << "p mseq " << s.n << ' ' << s.steps.size() << '\n';
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    os << "s " << i + 1 << '\n';
    for (const auto &b : s.steps[i].partition.blocks()) {
      os << 'b';
      for (auto v : b)
        os << ' ' << v + 1;
      os << '\n';
    }
    for (const auto &p : s.steps[i].delta)
      os << "r " << p.u + 1 << ' ' << p.v + 1 << '\n';
  }
}

inline std::string serialize_mseq(const MergeSequence &s) {
  std::ostringstream os;
  write_mseq(os, s);
  return os.str();
}

} // namespace mwkit
