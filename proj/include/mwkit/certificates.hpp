#pragma once

#include "coloring.hpp"
#include "extraction.hpp"
#include "flips.hpp"
#include "graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

// Text forms of every certificate the CLI emits. Vertex ids are 1-indexed,
// thresholds are exact rationals "<num>/<den>". Each parse_* accepts exactly
// what the matching write_* produces (plus "c" comment lines where noted).

namespace mwkit {

namespace detail {

inline void write_ids(std::ostream &os, const char *tag, const VertexSet &ids) {
  os << tag;
  for (auto v : ids)
    os << ' ' << v + 1;
  os << '\n';
}

/// Non-comment, non-blank lines with their line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string &text,
                                                                      bool keep_comments = false) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto line = trim(raw);
    if (line.empty() || (!keep_comments && line[0] == 'c' && (line.size() == 1 || line[1] == ' ')))
      continue;
    out.emplace_back(no, line);
  }
  return out;
}

inline VertexSet read_ids(std::size_t line_no, const std::string &line, const std::string &tag) {
  std::istringstream ls(line);
  std::string t;
  ls >> t;
  if (t != tag)
    throw ParseError(line_no, "expected '" + tag + " <ids>'");
  VertexSet out;
  while (!at_end_peek(ls)) {
    long long v;
    if (!read_int(ls, v) || v < 1 || v > 1'000'000)
      throw ParseError(line_no, "bad vertex id");
    if (!out.empty() && v - 1 <= out.back())
      throw ParseError(line_no, "ids must be strictly ascending");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return out;
}

inline Rational read_rational(std::size_t line_no, const std::string &s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw ParseError(line_no, "expected <num>/<den>");
  try {
    std::size_t p1 = 0, p2 = 0;
    auto num_s = s.substr(0, slash), den_s = s.substr(slash + 1);
    long long num = std::stoll(num_s, &p1);
    long long den = std::stoll(den_s, &p2);
    if (p1 != num_s.size() || p2 != den_s.size() || den <= 0)
      throw ParseError(line_no, "bad rational");
    Rational r(num, den);
    if (r.num != num || r.den != den)
      throw ParseError(line_no, "rational not in lowest terms");
    return r;
  } catch (const std::logic_error &) {
    throw ParseError(line_no, "bad rational");
  }
}

/// key=value fields of a header line like "HIDEOUT r=2 k=1 d=1 verified=0".
inline std::map<std::string, long long> read_fields(std::size_t line_no, const std::string &line,
                                                    const std::string &tag) {
  std::istringstream ls(line);
  std::string t, kv;
  ls >> t;
  if (t != tag)
    throw ParseError(line_no, "expected '" + tag + "' header");
  std::map<std::string, long long> out;
  while (ls >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key=value, got '" + kv + "'");
    std::istringstream vs(kv.substr(eq + 1));
    long long v;
    if (!read_int(vs, v))
      throw ParseError(line_no, "bad value in '" + kv + "'");
    out[kv.substr(0, eq)] = v;
  }
  return out;
}

inline long long field(std::size_t line_no, const std::map<std::string, long long> &f, const std::string &key) {
  auto it = f.find(key);
  if (it == f.end())
    throw ParseError(line_no, "missing field '" + key + "'");
  return it->second;
}

inline void expect_lines(const std::vector<std::pair<std::size_t, std::string>> &lines, std::size_t count) {
  if (lines.size() != count)
    throw ParseError(lines.empty() ? 0 : lines.back().first,
                     "expected " + std::to_string(count) + " lines, found " + std::to_string(lines.size()));
}

} // namespace detail

// ---------------------------------------------------------------------------
// EH pair:  "EH complete|anticomplete" / "A ..." / "B ..." / "floor p/q"

inline std::string emit_eh(const EhCertificate &c) {
  std::ostringstream os;
  os << "EH " << pair_kind_name(c.kind) << '\n';
  detail::write_ids(os, "A", c.A);
  detail::write_ids(os, "B", c.B);
  os << "floor " << c.floor << '\n';
  return os.str();
}

inline EhCertificate parse_eh(const std::string &text) {
  auto lines = detail::content_lines(text);
  detail::expect_lines(lines, 4);
  EhCertificate c;
  if (lines[0].second == "EH complete")
    c.kind = PairKind::complete;
  else if (lines[0].second == "EH anticomplete")
    c.kind = PairKind::anticomplete;
  else
    throw ParseError(lines[0].first, "expected 'EH complete' or 'EH anticomplete'");
  c.A = detail::read_ids(lines[1].first, lines[1].second, "A");
  c.B = detail::read_ids(lines[2].first, lines[2].second, "B");
  std::istringstream fs(lines[3].second);
  std::string tag, value;
  fs >> tag >> value;
  if (tag != "floor" || !detail::at_end(fs))
    throw ParseError(lines[3].first, "expected 'floor <num>/<den>'");
  c.floor = detail::read_rational(lines[3].first, value);
  return c;
}

// ---------------------------------------------------------------------------
// Colouring:  "c bound B" / "c colours C" / "v <id> <colour>" per vertex

inline std::string emit_colouring(const Colouring &c) {
  std::ostringstream os;
  os << "c bound " << c.bound << '\n';
  os << "c colours " << c.count() << '\n';
  for (std::size_t v = 0; v < c.colours.size(); ++v)
    os << "v " << v + 1 << ' ' << c.colours[v] << '\n';
  return os.str();
}

inline Colouring parse_colouring(const std::string &text) {
  Colouring c;
  bool have_bound = false;
  long long announced = -1;
  std::size_t last_line = 0;
  for (const auto &[no, line] : detail::content_lines(text, true)) {
    last_line = no;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") {
      std::string key;
      ls >> key;
      std::uint64_t value;
      if (key == "bound" || key == "colours") {
        if (!detail::read_uint64(ls, value) || !detail::at_end(ls))
          throw ParseError(no, "expected 'c " + key + " <int>'");
        if (key == "bound") {
          c.bound = value;
          have_bound = true;
        } else {
          announced = static_cast<long long>(std::min<std::uint64_t>(value, INT64_MAX));
        }
      }
      continue;
    }
    long long v, col;
    if (tag != "v" || !detail::read_int(ls, v) || !detail::read_int(ls, col) || !detail::at_end(ls))
      throw ParseError(no, "expected 'v <vertex> <colour>'");
    if (v != static_cast<long long>(c.colours.size()) + 1)
      throw ParseError(no, "vertices must be listed as 1, 2, ..., n");
    if (col < 1 || col > 1'000'000'000)
      throw ParseError(no, "colour out of range");
    c.colours.push_back(static_cast<int>(col));
  }
  if (!have_bound)
    throw ParseError(last_line, "missing 'c bound' line");
  if (announced >= 0 && static_cast<std::size_t>(announced) != c.count())
    throw ParseError(last_line, "'c colours' does not match the listed colours");
  return c;
}

// ---------------------------------------------------------------------------
// Hideout:  "HIDEOUT r= k= d= verified=" / "U ..." / "fw-lower-bound k"

inline std::string emit_hideout(const HideoutCertificate &c) {
  std::ostringstream os;
  os << "HIDEOUT r=" << c.r << " k=" << c.k << " d=" << c.d << " verified=" << (c.verified ? 1 : 0) << '\n';
  detail::write_ids(os, "U", c.U);
  os << "fw-lower-bound " << c.k << '\n';
  return os.str();
}

inline HideoutCertificate parse_hideout(const std::string &text) {
  auto lines = detail::content_lines(text);
  detail::expect_lines(lines, 3);
  auto f = detail::read_fields(lines[0].first, lines[0].second, "HIDEOUT");
  HideoutCertificate c;
  c.r = static_cast<int>(detail::field(lines[0].first, f, "r"));
  c.k = static_cast<int>(detail::field(lines[0].first, f, "k"));
  c.d = static_cast<int>(detail::field(lines[0].first, f, "d"));
  auto ver = detail::field(lines[0].first, f, "verified");
  if (f.size() != 4 || (ver != 0 && ver != 1))
    throw ParseError(lines[0].first, "malformed HIDEOUT header");
  c.verified = ver == 1;
  c.U = detail::read_ids(lines[1].first, lines[1].second, "U");
  if (lines[2].second != "fw-lower-bound " + std::to_string(c.k))
    throw ParseError(lines[2].first, "expected 'fw-lower-bound " + std::to_string(c.k) + "'");
  return c;
}

// ---------------------------------------------------------------------------
// Neighbourhood-complexity witness:  "NCW alpha=" / "X ..." / "Y ..."

inline std::string emit_nc_witness(const NcWitness &w) {
  std::ostringstream os;
  os << "NCW alpha=" << w.alpha << '\n';
  detail::write_ids(os, "X", w.X);
  detail::write_ids(os, "Y", w.Y);
  return os.str();
}

inline NcWitness parse_nc_witness(const std::string &text) {
  auto lines = detail::content_lines(text);
  detail::expect_lines(lines, 3);
  auto f = detail::read_fields(lines[0].first, lines[0].second, "NCW");
  NcWitness w;
  w.alpha = detail::field(lines[0].first, f, "alpha");
  if (f.size() != 1)
    throw ParseError(lines[0].first, "malformed NCW header");
  w.X = detail::read_ids(lines[1].first, lines[1].second, "X");
  w.Y = detail::read_ids(lines[2].first, lines[2].second, "Y");
  return w;
}

// ---------------------------------------------------------------------------
// mw_2 refutation:  "MW2 k= alpha=" / "X ..." / "Y ..." / "mw2-lower-bound k"

inline std::string emit_mw2(const Mw2Certificate &c) {
  std::ostringstream os;
  os << "MW2 k=" << c.k << " alpha=" << c.alpha << '\n';
  detail::write_ids(os, "X", c.X);
  detail::write_ids(os, "Y", c.Y);
  os << "mw2-lower-bound " << c.k << '\n';
  return os.str();
}

inline Mw2Certificate parse_mw2(const std::string &text) {
  auto lines = detail::content_lines(text);
  detail::expect_lines(lines, 4);
  auto f = detail::read_fields(lines[0].first, lines[0].second, "MW2");
  Mw2Certificate c;
  c.k = static_cast<int>(detail::field(lines[0].first, f, "k"));
  c.alpha = detail::field(lines[0].first, f, "alpha");
  if (f.size() != 2)
    throw ParseError(lines[0].first, "malformed MW2 header");
  c.X = detail::read_ids(lines[1].first, lines[1].second, "X");
  c.Y = detail::read_ids(lines[2].first, lines[2].second, "Y");
  if (lines[3].second != "mw2-lower-bound " + std::to_string(c.k))
    throw ParseError(lines[3].first, "expected 'mw2-lower-bound " + std::to_string(c.k) + "'");
  return c;
}

} // namespace mwkit
