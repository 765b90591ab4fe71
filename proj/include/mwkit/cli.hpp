#pragma once

#include "certificates.hpp"
#include "coloring.hpp"
#include "extraction.hpp"
#include "flips.hpp"
#include "generators.hpp"
#include "graph_io.hpp"
#include "merge_sequence.hpp"
#include "mseq_io.hpp"
#include "solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mwkit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_refuted = 2;

struct Options {
  std::string graph, seq, out;
  std::string family, params, p;
  std::string x, y, u, vertices, labels, table;
  int radius = 1;
  int k = 1;
  int d = 1;
  int trials = 0;
  long long alpha = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = default_solver_budget;
  bool verify = false;
};

namespace detail {

inline std::string slurp(const std::string &path, const char *what) {
  if (path.empty())
    throw ParameterError(std::string("missing --") + what);
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParameterError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Parse>
auto parse_file(const std::string &path, const char *what, Parse parse) {
  auto text = slurp(path, what);
  try {
    return parse(text);
  } catch (const ParseError &e) {
    throw Error(path + ": " + e.what());
  }
}

inline Graph load_graph(const Options &o) {
  return parse_file(o.graph, "graph", [](const std::string &t) { return parse_graph(t); });
}

inline MergeSequence load_seq(const Options &o) {
  return parse_file(o.seq, "seq", [](const std::string &t) { return parse_mseq(t); });
}

inline MergeSequence load_valid_seq(const Graph &g, const Options &o) {
  auto s = load_seq(o);
  if (s.n != g.n())
    throw ParameterError("sequence has " + std::to_string(s.n) + " vertices but the graph has " +
                         std::to_string(g.n()));
  auto rep = validate(g, s);
  if (!rep.ok())
    throw PreconditionError("invalid merge sequence: " + rep.summary() + " (run 'mwkit validate' for details)");
  return s;
}

/// 1-indexed CSV ids to a sorted, duplicate-free 0-indexed set.
inline VertexSet parse_ids(const std::string &csv, const Graph &g, const char *flag) {
  VertexSet out;
  if (csv.empty())
    return out;
  for (auto v : mwkit::detail::parse_int_list(csv)) {
    if (v < 1 || v > g.n())
      throw ParameterError(std::string("--") + flag + ": vertex " + std::to_string(v) + " out of range");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParameterError(std::string("--") + flag + ": repeated vertex");
  return out;
}

inline void write_pair(std::ostream &os, const char *tag, const VertexPair &p) {
  os << tag << ' ' << p.u + 1 << ' ' << p.v + 1 << '\n';
}

inline void write_flip(std::ostream &os, const KFlip &f) {
  os << "FLIP blocks=" << f.blocks() << '\n';
  for (const auto &b : f.partition.blocks())
    mwkit::detail::write_ids(os, "b", b);
  for (std::size_t a = 0; a < f.blocks(); ++a)
    for (std::size_t b = a; b < f.blocks(); ++b)
      if (f.table[a][b])
        os << "t " << a + 1 << ' ' << b + 1 << '\n';
}

inline void require_radius(int r, int min) {
  if (r < min)
    throw ParameterError("--radius must be at least " + std::to_string(min));
}

} // namespace detail

// Each handler writes machine output to `os` and returns the exit code.

inline int cmd_validate(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  auto s = detail::load_seq(o);
  auto rep = validate(g, s);
  if (rep.ok()) {
    os << "ok\n";
    return exit_ok;
  }
  os << "violation " << violation_name(rep.violation) << " step " << rep.step << '\n';
  if (rep.pair)
    detail::write_pair(os, "pair", *rep.pair);
  if (rep.violation == Violation::homogeneity) {
    mwkit::detail::write_ids(os, "block-a", rep.block_a);
    mwkit::detail::write_ids(os, "block-b", rep.block_b);
    detail::write_pair(os, "edge", *rep.edge);
    detail::write_pair(os, "non-edge", *rep.non_edge);
  }
  return exit_refuted;
}

inline int cmd_width(const Options &o, std::ostream &os) {
  detail::require_radius(o.radius, 0);
  auto s = detail::load_seq(o);
  if (!o.graph.empty()) {
    auto g = detail::load_graph(o);
    if (g.n() != s.n)
      throw ParameterError("sequence and graph disagree on the vertex count");
  }
  os << "width " << width(s, o.radius) << '\n';
  return exit_ok;
}

inline int cmd_minimize(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  auto s = detail::load_valid_seq(g, o);
  write_mseq(os, minimize(g, s));
  return exit_ok;
}

inline int cmd_solve(const Options &o, std::ostream &os) {
  detail::require_radius(o.radius, 1);
  auto g = detail::load_graph(o);
  auto res = exact_merge_width(g, o.radius, o.budget);
  os << (res.optimal ? "mw " : "mw-upper-bound ") << res.optimum << '\n';
  os << "c radius " << res.radius << " nodes " << res.nodes << '\n';
  write_mseq(os, res.witness);
  return exit_ok;
}

inline int cmd_restrict(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  auto s = detail::load_valid_seq(g, o);
  auto S = detail::parse_ids(o.vertices, g, "vertices");
  auto res = restrict_sequence(g, s, S);
  mwkit::detail::write_ids(os, "c original", res.original);
  write_mseq(os, res.sequence);
  return exit_ok;
}

inline int cmd_trivial(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  if (g.n() == 0)
    throw ParameterError("trivial-seq: graph has no vertices");
  write_mseq(os, trivial_sequence(g));
  return exit_ok;
}

inline int cmd_color(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  auto s = detail::load_valid_seq(g, o);
  auto c = color_bounded_mw(g, s);
  if (!verify_colouring(g, c))
    throw InternalError("colouring failed verification");
  os << emit_colouring(c);
  return exit_ok;
}

inline int cmd_color_sb(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  auto s = detail::load_valid_seq(g, o);
  auto rep = is_structurally_bounded(g, s);
  if (!rep.ok) {
    os << "not-structurally-bounded step " << rep.step << '\n';
    mwkit::detail::write_ids(os, "block", rep.block);
    detail::write_pair(os, "edge", rep.edge);
    return exit_refuted;
  }
  auto c = color_structural(g, s);
  if (!verify_colouring(g, c))
    throw InternalError("colouring failed verification");
  os << emit_colouring(c);
  return exit_ok;
}

inline int cmd_eh(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  auto s = detail::load_valid_seq(g, o);
  auto ex = eh_pair(g, s);
  if (!verify_eh(g, ex.certificate))
    throw InternalError("EH certificate failed verification");
  os << "c k " << ex.k << " step " << ex.step << (ex.fallback ? " fallback" : "") << '\n';
  os << emit_eh(ex.certificate);
  return exit_ok;
}

inline int cmd_nc(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  std::istringstream ps(o.p);
  long long p = 0;
  if (!mwkit::detail::read_int(ps, p) || !mwkit::detail::at_end(ps) || p < 0 || p > g.n())
    throw ParameterError("--p must be an integer in [0, n]");
  if (o.trials > 0) {
    auto res = nc_sample(g, static_cast<int>(p), o.trials, o.seed);
    os << "nc-lower-bound " << p << ' ' << res.value << '\n';
    mwkit::detail::write_ids(os, "X", res.X);
  } else {
    auto res = nc_exact(g, static_cast<int>(p));
    os << "nc " << p << ' ' << res.value << '\n';
    mwkit::detail::write_ids(os, "X", res.X);
  }
  return exit_ok;
}

/// With --alpha: neighbourhood witness. With --k only: mw_2 lower-bound certificate.
inline int cmd_nc_witness(const Options &o, std::ostream &os, bool alpha_given) {
  auto g = detail::load_graph(o);
  auto X0 = detail::parse_ids(o.x, g, "x");
  auto Y0 = detail::parse_ids(o.y, g, "y");
  if (alpha_given) {
    auto w = nc_witness_minimize(g, X0, Y0, o.alpha);
    os << emit_nc_witness(w);
    return exit_ok;
  }
  auto cert = mw2_lower_bound_from_nc(g, o.k, X0, Y0);
  if (!cert) {
    os << "inconclusive\n";
    return exit_ok;
  }
  os << emit_mw2(*cert);
  return exit_ok;
}

inline int cmd_hideout(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  HideoutCertificate cert;
  if (!o.u.empty()) {
    detail::require_radius(o.radius, 0);
    cert = {detail::parse_ids(o.u, g, "u"), o.radius, o.k, o.d, false};
  } else {
    auto X0 = detail::parse_ids(o.x, g, "x");
    auto Y0 = detail::parse_ids(o.y, g, "y");
    if (X0.empty() || Y0.empty())
      throw ParameterError("hideout: give --u, or --x and --y for a witness");
    // (X0, Y0) is used as is when it already is a witness; shrinking needs |Y0| > alpha |X0|
    NcWitness w{X0, Y0, hideout_alpha(o.k)};
    if (!verify_nc_witness(g, w))
      w = nc_witness_minimize(g, X0, Y0, w.alpha);
    cert = hideout_from_witness(g, o.k, w);
  }
  if (!o.u.empty() || o.verify) {
    auto res = hideout_check(g, cert.U, cert.r, cert.k, cert.d);
    if (!res.verified) {
      os << "violation few=" << res.few << '\n';
      detail::write_flip(os, *res.violator);
      return exit_refuted;
    }
    cert.verified = true;
  }
  os << emit_hideout(cert);
  return exit_ok;
}

inline int cmd_flip(const Options &o, std::ostream &os, bool k_given) {
  auto g = detail::load_graph(o);
  std::vector<int> labels;
  for (auto l : mwkit::detail::parse_int_list(o.labels)) {
    if (l < 1 || l > g.n())
      throw ParameterError("--labels: block label out of range");
    labels.push_back(static_cast<int>(l - 1));
  }
  if (static_cast<int>(labels.size()) != g.n())
    throw ParameterError("--labels needs one block label per vertex");
  auto part = Partition::from_labels(labels);
  if (k_given && static_cast<int>(part.size()) > o.k)
    throw ParameterError("partition has more than k blocks");
  std::vector<std::vector<bool>> table(part.size(), std::vector<bool>(part.size(), false));
  std::istringstream cells(o.table);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    cell = mwkit::detail::trim(cell);
    if (cell.empty())
      continue;
    auto dash = cell.find('-');
    std::istringstream as(cell.substr(0, dash == std::string::npos ? cell.size() : dash));
    std::istringstream bs(dash == std::string::npos ? "" : cell.substr(dash + 1));
    long long a = 0, b = 0;
    if (dash == std::string::npos || !mwkit::detail::read_int(as, a) || !mwkit::detail::read_int(bs, b) ||
        !mwkit::detail::at_end(as) || !mwkit::detail::at_end(bs) || a < 1 || b < 1 ||
        a > static_cast<long long>(part.size()) || b > static_cast<long long>(part.size()))
      throw ParameterError("--table: expected cells 'a-b' over blocks 1.." + std::to_string(part.size()));
    table[a - 1][b - 1] = table[b - 1][a - 1] = true;
  }
  KFlip f(part, table);
  auto h = apply_flip(g, f);
  os << "c flip blocks " << f.blocks() << '\n';
  write_graph(os, h);
  return exit_ok;
}

inline int cmd_gen(const Options &o, std::ostream &os, bool seed_given) {
  auto params = mwkit::detail::parse_int_list(o.params);
  double prob = 0.5;
  if (!o.p.empty()) {
    try {
      std::size_t used = 0;
      prob = std::stod(o.p, &used);
      if (used != o.p.size())
        throw std::invalid_argument(o.p);
    } catch (const std::logic_error &) {
      throw ParameterError("--p must be a probability");
    }
  }
  auto g = generate(o.family, params, seed_given ? std::optional<std::uint64_t>(o.seed) : std::nullopt, prob);
  write_graph(os, g);
  return exit_ok;
}

inline int cmd_sync(const Options &o, std::ostream &os) {
  auto g = detail::load_graph(o);
  auto s = detail::load_valid_seq(g, o);
  auto rep = check_sync(g, s);
  if (rep.ok) {
    os << "ok\n";
    return exit_ok;
  }
  os << "sync-violation step " << rep.step << " differs " << rep.differs << '\n';
  detail::write_pair(os, "pair", rep.first);
  detail::write_pair(os, "pair", rep.second);
  return exit_refuted;
}

/**
 * Parses argv, runs one subcommand, writes its output to `out` (or to the
 * --out file) and diagnostics to `err`. Exit codes: 0 done or verified,
 * 2 counterexample or refutation found, 1 bad input.
 */
inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  CLI::App app{"Merge sequences, merge-width and the certificates derived from them", "mwkit"};
  app.require_subcommand(1);
  Options o;

  auto graph = [&](CLI::App *c, bool required = true) {
    auto *opt = c->add_option("--graph", o.graph, "graph file (DIMACS edge format, '-' for stdin)");
    if (required)
      opt->required();
  };
  auto seq = [&](CLI::App *c) { c->add_option("--seq", o.seq, "merge sequence file (.mseq)")->required(); };
  auto outp = [&](CLI::App *c) { c->add_option("--out", o.out, "write output here instead of stdout"); };

  auto *validate_c = app.add_subcommand("validate", "check a merge sequence against a graph");
  graph(validate_c), seq(validate_c), outp(validate_c);

  auto *width_c = app.add_subcommand("width", "radius-r width of a merge sequence");
  graph(width_c, false), seq(width_c), outp(width_c);
  width_c->add_option("--radius", o.radius, "radius r");

  auto *minimize_c = app.add_subcommand("minimize", "inclusion-minimal resolved sets for the same partitions");
  graph(minimize_c), seq(minimize_c), outp(minimize_c);

  auto *solve_c = app.add_subcommand("solve", "exact radius-r merge-width with a witness sequence");
  graph(solve_c), outp(solve_c);
  solve_c->add_option("--radius", o.radius, "radius r");
  solve_c->add_option("--budget", o.budget, "search node budget");

  auto *restrict_c = app.add_subcommand("restrict", "induced sub-sequence on a vertex subset");
  graph(restrict_c), seq(restrict_c), outp(restrict_c);
  restrict_c->add_option("--vertices", o.vertices, "comma-separated vertex ids (1-indexed)")->required();

  auto *trivial_c = app.add_subcommand("trivial-seq", "two-step sequence singletons -> {V}");
  graph(trivial_c), outp(trivial_c);

  auto *color_c = app.add_subcommand("color", "colouring with at most (t+1)! k^(2t-2) colours");
  graph(color_c), seq(color_c), outp(color_c);

  auto *color_sb_c = app.add_subcommand("color-sb", "colouring from a structurally omega-bounded sequence");
  graph(color_sb_c), seq(color_sb_c), outp(color_sb_c);

  auto *eh_c = app.add_subcommand("eh", "linear complete or anti-complete pair");
  graph(eh_c), seq(eh_c), outp(eh_c);

  auto *nc_c = app.add_subcommand("nc", "neighbourhood complexity (exact, or sampled with --trials)");
  graph(nc_c), outp(nc_c);
  nc_c->add_option("--p", o.p, "size of X")->required();
  nc_c->add_option("--trials", o.trials, "sample this many random X instead of enumerating");
  nc_c->add_option("--seed", o.seed, "sampling seed");

  auto *ncw_c = app.add_subcommand("nc-witness", "shrink (X0, Y0) to a witness; with --k only, an mw_2 bound");
  graph(ncw_c), outp(ncw_c);
  ncw_c->add_option("--x", o.x, "X0, comma-separated ids")->required();
  ncw_c->add_option("--y", o.y, "Y0, comma-separated ids")->required();
  auto *alpha_opt = ncw_c->add_option("--alpha", o.alpha, "separation threshold");
  ncw_c->add_option("--k", o.k, "certify mw_2 > k using alpha = k 2^(k+2)")->excludes(alpha_opt);

  auto *hideout_c = app.add_subcommand("hideout", "check a hideout (--u) or build one from a witness (--x --y)");
  graph(hideout_c), outp(hideout_c);
  hideout_c->add_option("--u", o.u, "candidate hideout, comma-separated ids");
  hideout_c->add_option("--x", o.x, "X0 for the witness construction");
  hideout_c->add_option("--y", o.y, "Y0 for the witness construction");
  hideout_c->add_option("--radius", o.radius, "radius r (with --u)");
  hideout_c->add_option("--k", o.k, "number of flip blocks");
  hideout_c->add_option("--d", o.d, "few-neighbour threshold (with --u)");
  hideout_c->add_flag("--verify", o.verify, "brute-force check the constructed hideout");

  auto *flip_c = app.add_subcommand("flip", "apply a k-flip");
  graph(flip_c), outp(flip_c);
  flip_c->add_option("--labels", o.labels, "block label per vertex, comma-separated")->required();
  flip_c->add_option("--table", o.table, "flipped block pairs, e.g. 1-1,1-2");
  auto *flip_k = flip_c->add_option("--k", o.k, "reject partitions with more than k blocks");

  auto *gen_c = app.add_subcommand("gen", "generate a graph family");
  outp(gen_c);
  gen_c->add_option("--family", o.family, "complete|empty|path|cycle|biclique|grid|random|shift")->required();
  gen_c->add_option("--params", o.params, "comma-separated integer parameters")->required();
  auto *seed_opt = gen_c->add_option("--seed", o.seed, "seed (random)");
  gen_c->add_option("--p", o.p, "edge probability (random)");

  auto *sync_c = app.add_subcommand("sync-check", "check the synchronisation property of resolved pairs");
  graph(sync_c), seq(sync_c), outp(sync_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "mwkit: " << e.what() << '\n';
    return exit_input_error;
  }

  std::ostringstream buf;
  int code = exit_ok;
  try {
    auto *c = app.get_subcommands().front();
    if (c == validate_c)
      code = cmd_validate(o, buf);
    else if (c == width_c)
      code = cmd_width(o, buf);
    else if (c == minimize_c)
      code = cmd_minimize(o, buf);
    else if (c == solve_c)
      code = cmd_solve(o, buf);
    else if (c == restrict_c)
      code = cmd_restrict(o, buf);
    else if (c == trivial_c)
      code = cmd_trivial(o, buf);
    else if (c == color_c)
      code = cmd_color(o, buf);
    else if (c == color_sb_c)
      code = cmd_color_sb(o, buf);
    else if (c == eh_c)
      code = cmd_eh(o, buf);
    else if (c == nc_c)
      code = cmd_nc(o, buf);
    else if (c == ncw_c)
      code = cmd_nc_witness(o, buf, alpha_opt->count() > 0);
    else if (c == hideout_c)
      code = cmd_hideout(o, buf);
    else if (c == flip_c)
      code = cmd_flip(o, buf, flip_k->count() > 0);
    else if (c == gen_c)
      code = cmd_gen(o, buf, seed_opt->count() > 0);
    else if (c == sync_c)
      code = cmd_sync(o, buf);
  } catch (const InternalError &e) {
    err << "mwkit: internal error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const Error &e) {
    err << "mwkit: " << e.what() << '\n';
    return exit_input_error;
  }

  if (o.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!(f << buf.str())) {
      err << "mwkit: cannot write " << o.out << '\n';
      return exit_input_error;
    }
  }
  return code;
}

inline int run(const std::vector<std::string> &args, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  std::vector<const char *> argv{"mwkit"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace mwkit::cli
