// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support/oracles.hpp"
#include "support/sequences.hpp"

#include <mwkit/mwkit.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace mwkit;
using support::range_set;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later checks still run.
class Checker {
public:
  void require(bool ok, const std::string &what) {
    ++checks_;
    if (!ok && first_.empty())
      first_ = what;
  }
  Outcome done(const std::string &summary) const {
    if (first_.empty())
      return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, first_};
  }

private:
  long checks_ = 0;
  std::string first_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

Outcome criterion1() {
  Checker c;
  auto t0 = Clock::now();
  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      graphs.push_back(oracle::graph_from_mask(n, mask));
  for (const auto &g : oracle::isomorphism_representatives(5))
    graphs.push_back(g);
  for (const auto &g : graphs)
    for (int r : {1, 2}) {
      auto res = exact_merge_width(g, r);
      int naive = oracle::naive_merge_width(g, r);
      c.require(res.optimal && res.optimum == naive, "n=" + std::to_string(g.n()) + " r=" + std::to_string(r) +
                                                         ": solver " + std::to_string(res.optimum) + " vs naive " +
                                                         std::to_string(naive));
    }
  double s = seconds_since(t0);
  c.require(s < 600, "runtime " + fmt_seconds(s));
  return c.done(std::to_string(graphs.size()) + " graphs x r in {1,2}, " + fmt_seconds(s));
}

Outcome criterion2() {
  Checker c;
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r <= 3; ++r) {
      c.require(exact_merge_width(gen::complete(n), r).optimum == 1, "K_" + std::to_string(n));
      c.require(exact_merge_width(gen::empty(n), r).optimum == 1, "empty_" + std::to_string(n));
      // the homogeneous trivial sequence attains it
      c.require(oracle::width(trivial_sequence(gen::complete(n)), r) == 1, "trivial K_" + std::to_string(n));
    }
  return c.done("n in 2..8, r in 1..3");
}

Outcome criterion3() {
  Checker c;
  Rng rng(3003);
  long removals = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + rng.below(9);
    auto g = gen::random(n, rng.uniform01(), rng.next());
    auto a = oracle::adjacency(g);
    auto s = support::random_sequence(g, rng);
    auto m = minimize(g, s);
    c.require(check_sync(g, m).ok, "sync fails on trial " + std::to_string(trial));
    for (std::size_t i = 0; i < m.steps.size(); ++i)
      for (std::size_t j = 0; j < m.steps[i].delta.size(); ++j) {
        auto t = m;
        t.steps[i].delta.erase(t.steps[i].delta.begin() + static_cast<std::ptrdiff_t>(j));
        ++removals;
        c.require(!validate(g, t).ok() && !oracle::valid(a, t),
                  "removal keeps validity on trial " + std::to_string(trial));
      }
  }
  return c.done("200 sequences, " + std::to_string(removals) + " single-pair removals");
}

Outcome criterion4() {
  Checker c;
  Rng rng(4004);
  int certs = 0;
  for (const auto &[name, g] : support::corpus(40)) {
    if (g.n() < 2)
      continue;
    auto a = oracle::adjacency(g);
    std::vector<MergeSequence> seqs = {trivial_sequence(g), minimize(g, trivial_sequence(g))};
    for (int t = 0; t < 3; ++t)
      seqs.push_back(support::random_sequence(g, rng));
    for (const auto &s : seqs) {
      auto r = eh_pair(g, s);
      int k = oracle::width(s, 1);
      c.require(r.k == k, name + ": reported k differs");
      c.require(oracle::eh_holds(a, r.certificate, k), name + ": certificate fails exhaustive check");
      ++certs;
    }
  }
  return c.done(std::to_string(certs) + " certificates");
}

Outcome criterion5() {
  Checker c;
  Rng rng(5005);
  support::SequenceShape shape;
  shape.structural = true;
  int runs = 0;
  for (const auto &[name, g] : support::corpus(40)) {
    auto a = oracle::adjacency(g);
    std::vector<MergeSequence> seqs = {support::resolve_all_edges(g)};
    for (int t = 0; t < 3; ++t)
      seqs.push_back(support::random_sequence(g, rng, shape));
    for (const auto &s : seqs) {
      auto col = color_structural(g, s);
      auto limit = static_cast<std::size_t>(std::max(oracle::width(s, 2), 1));
      c.require(oracle::proper(a, col.colours), name + ": improper");
      c.require(oracle::distinct(col.colours) <= limit, name + ": too many colours");
      ++runs;
    }
  }
  return c.done(std::to_string(runs) + " structurally bounded inputs");
}

Outcome criterion6() {
  Checker c;
  Rng rng(6006);
  double slowest = 0;
  int runs = 0;
  for (const auto &[name, g] : support::corpus(40)) {
    auto a = oracle::adjacency(g);
    const int t = oracle::clique_number(a);
    auto t0 = Clock::now();
    for (const auto &s : {trivial_sequence(g), minimize(g, trivial_sequence(g)), support::random_sequence(g, rng)}) {
      auto col = color_bounded_mw(g, s);
      const auto k = static_cast<std::uint64_t>(std::max(oracle::width(s, 2), 1));
      std::uint64_t bound = 1;
      bool huge = false;
      for (int i = 2; i <= t + 1; ++i)
        bound *= static_cast<std::uint64_t>(i);
      for (int i = 0; i < 2 * t - 2 && !huge; ++i) {
        huge = bound > (std::uint64_t{1} << 40);
        bound *= huge ? 1 : k;
      }
      c.require(oracle::proper(a, col.colours), name + ": improper");
      c.require(huge || oracle::distinct(col.colours) <= bound, name + ": over (t+1)! k^(2t-2)");
      ++runs;
    }
    double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    c.require(s < 60, name + ": took " + fmt_seconds(s));
  }
  return c.done(std::to_string(runs) + " runs, slowest graph " + fmt_seconds(slowest));
}

Outcome criterion7() {
  Checker c;
  int graphs = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto &g : oracle::isomorphism_representatives(n)) {
      auto a = oracle::adjacency(g);
      const long long k = exact_merge_width(g, 2).optimum;
      for (int p = 1; p <= n; ++p) {
        long long nc = oracle::neighbourhood_complexity(a, p);
        c.require(static_cast<long long>(nc_exact(g, p).value) == nc, "nc_exact disagrees with oracle");
        c.require(nc <= k * (1LL << (k + 2)) * p, "bound fails at n=" + std::to_string(n));
      }
      ++graphs;
    }
  return c.done(std::to_string(graphs) + " graphs up to isomorphism, n <= 6");
}

Outcome criterion8() {
  Checker c;
  Rng rng(8008);
  int done = 0;
  while (done < 100) {
    int q = 2 + rng.below(5);
    long long alpha = 1 + rng.below(3);
    auto g = gen::random(q + (1 << q) + rng.below(8), rng.uniform01(), rng.next());
    std::map<std::vector<bool>, int> rep;
    for (int y = q; y < g.n(); ++y) {
      std::vector<bool> t;
      for (int x = 0; x < q; ++x)
        t.push_back(g.adjacent(x, y));
      if (rng.bernoulli(0.9))
        rep.emplace(t, y);
    }
    VertexSet Y;
    for (auto &[t, y] : rep)
      Y.push_back(y);
    std::sort(Y.begin(), Y.end());
    if (static_cast<long long>(Y.size()) <= alpha * q)
      continue;
    auto w = nc_witness_minimize(g, range_set(0, q), Y, alpha);
    c.require(oracle::witness_holds(oracle::adjacency(g), w.X, w.Y, alpha), "witness conditions fail");
    c.require(static_cast<long long>(w.Y.size()) > alpha * static_cast<long long>(w.X.size()), "|Y| > alpha |X| lost");
    ++done;
  }
  return c.done("100 instances");
}

Outcome criterion9() {
  Checker c;
  auto t0 = Clock::now();
  // With all 2^q traces, two columns differ on exactly 2^(q-1) rows, so alpha = 8 needs q >= 5
  // (q = 1 is excluded by |X| > k).
  for (int q = 2; q <= 4; ++q) {
    auto g = support::trace_rich(q);
    c.require(!verify_nc_witness(g, {range_set(0, q), range_set(q, g.n()), hideout_alpha(1)}),
              "unexpected witness with q=" + std::to_string(q));
  }
  auto g = support::trace_rich(5);
  NcWitness w{range_set(0, 5), range_set(5, 37), hideout_alpha(1)};
  c.require(oracle::witness_holds(oracle::adjacency(g), w.X, w.Y, w.alpha), "q=5 witness fails brute force");
  auto cert = hideout_from_witness(g, 1, w);
  auto check = hideout_check(g, cert.U, cert.r, cert.k, cert.d);
  c.require(check.verified, "hideout refuted by a 1-flip");
  c.require(check.flips == 2, "expected two 1-flips");

  // mw_2 certificates on solver-sized graphs: any certificate for k >= exact mw_2 would be a contradiction
  long attempts = 0, certificates = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto &h : oracle::isomorphism_representatives(n)) {
      const int mw2 = exact_merge_width(h, 2).optimum;
      for (std::uint64_t xm = 1; xm < (std::uint64_t{1} << n); ++xm) {
        VertexSet X, rest;
        for (int v = 0; v < n; ++v)
          ((xm >> v & 1) ? X : rest).push_back(v);
        std::map<std::vector<bool>, int> rep;
        for (int y : rest) {
          std::vector<bool> t;
          for (int x : X)
            t.push_back(h.adjacent(x, y));
          rep.emplace(t, y);
        }
        VertexSet Y;
        for (auto &[t, y] : rep)
          Y.push_back(y);
        std::sort(Y.begin(), Y.end());
        for (int k = 1; k <= 2; ++k) {
          ++attempts;
          auto m = mw2_lower_bound_from_nc(h, k, X, Y);
          if (m) {
            ++certificates;
            c.require(mw2 > k, "mw_2 certificate contradicts the exact solver");
          }
        }
      }
    }
  double s = seconds_since(t0);
  c.require(s < 60, "runtime " + fmt_seconds(s));
  return c.done("hideout verified on q=5, n=37 (q<=4 admits no alpha=8 witness); " + std::to_string(attempts) +
                " mw_2 attempts on n<=6, " + std::to_string(certificates) + " certificates, no contradiction; " +
                fmt_seconds(s));
}

Outcome criterion10() {
  Checker c;
  Rng rng(10010);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + rng.below(12);
    auto g = gen::random(n, rng.uniform01(), rng.next());
    support::SequenceShape shape;
    shape.max_merges_per_step = 1 + rng.below(5);
    auto s = support::random_sequence(g, rng, shape);
    auto b = normalize_binary(g, s);
    VertexSet S;
    for (int v = 0; v < n; ++v)
      if (rng.bernoulli(0.6))
        S.push_back(v);
    if (S.empty())
      S.push_back(rng.below(n));
    auto rs = restrict_sequence(g, s, S);
    auto sub = induced_subgraph(g, S);
    c.require(oracle::valid(oracle::adjacency(g), b), "normalized sequence invalid");
    c.require(oracle::valid(oracle::adjacency(sub), rs.sequence), "restricted sequence invalid");
    for (int r : {1, 2}) {
      const int w = oracle::width(s, r);
      c.require(oracle::width(b, r) <= w, "normalize_binary widened r=" + std::to_string(r));
      c.require(oracle::width(rs.sequence, r) <= w, "restrict widened r=" + std::to_string(r));
    }
  }
  return c.done("200 sequences, r in {1,2}");
}

Outcome criterion11() {
  Checker c;
  Rng rng(11011);
  int graphs = 0;
  for (const auto &[name, g] : support::corpus(40)) {
    const std::string text = serialize_graph(g);
    c.require(serialize_graph(parse_graph(text)) == text, name + ": graph text not byte-exact");
    c.require(parse_graph(text) == g, name + ": graph differs after parse");
    auto s = support::random_sequence(g, rng);
    const std::string st = serialize_mseq(s);
    c.require(serialize_mseq(parse_mseq(st)) == st, name + ": mseq text not byte-exact");
    c.require(parse_mseq(st) == s, name + ": mseq differs after parse");
    ++graphs;
    if (g.n() < 2)
      continue;
    auto eh = eh_pair(g, s).certificate;
    c.require(verify_eh(g, parse_eh(emit_eh(eh))) && emit_eh(parse_eh(emit_eh(eh))) == emit_eh(eh),
              name + ": EH certificate");
    auto col = color_bounded_mw(g, s);
    c.require(verify_colouring(g, parse_colouring(emit_colouring(col))), name + ": colouring");
    auto sb = support::resolve_all_edges(g);
    auto col2 = color_structural(g, sb);
    c.require(verify_colouring(g, parse_colouring(emit_colouring(col2))), name + ": structural colouring");
  }
  auto g5 = support::trace_rich(5);
  auto hid = verify_hideout(g5, hideout_from_witness(g5, 1, {range_set(0, 5), range_set(5, 37), 8}));
  c.require(hid.has_value(), "hideout did not verify");
  if (hid) {
    auto back = parse_hideout(emit_hideout(*hid));
    c.require(back == *hid && verify_hideout(g5, back).has_value(), "hideout certificate");
  }
  auto g6 = support::trace_rich(6);
  auto w = nc_witness_minimize(g6, range_set(0, 6), range_set(6, 70), 8);
  c.require(verify_nc_witness(g6, parse_nc_witness(emit_nc_witness(w))), "nc witness");
  auto m = mw2_lower_bound_from_nc(g6, 1, range_set(0, 6), range_set(6, 70));
  c.require(m && verify_mw2_certificate(g6, parse_mw2(emit_mw2(*m))), "mw2 certificate");
  return c.done(std::to_string(graphs) + " graphs and sequences, all certificate kinds");
}

} // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3},  {4, criterion4},  {5, criterion5},  {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11},
  };
  bool all = true;
  for (const auto &[id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
