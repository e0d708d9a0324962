// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run everything
//   acceptance --only 3   run criterion 3 (repeatable)
//   acceptance --skip 8   run everything except 8 (repeatable)
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/catalog.hpp"
#include "tutte/tutte.hpp"

namespace {

using namespace tutte;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string join(const std::vector<Vertex>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Integer pow2(std::size_t e) { return Integer(1) << e; }

std::size_t peak_rss_bytes() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream f(line.substr(6));
      std::size_t kb = 0;
      f >> kb;
      return kb * 1024;
    }
  }
  return 0;
}

Outcome oracle_equivalence() {
  std::vector<Multigraph> graphs = fixtures::connected_catalog(5, 8);
  const std::size_t catalog = graphs.size();
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const std::size_t lo = n - 1;
    const std::size_t m = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(lo, 1), 12)(rng);
    graphs.push_back(fixtures::random_connected(n, m, rng));
  }

  const Heuristic hs[] = {Heuristic::MinDeg, Heuristic::VorderPull, Heuristic::VorderPush};
  const OrderStrategy os[] = {OrderStrategy::Input, OrderStrategy::Random, OrderStrategy::Bfs,
                              OrderStrategy::Sharc};
  const IsoMode is[] = {IsoMode::None, IsoMode::Identical, IsoMode::Full};

  std::size_t runs = 0;
  std::size_t bad = 0;
  std::string first_bad;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Multigraph& g = graphs[gi];
    const BiPoly want = tutte_bruteforce(g);
    for (auto h : hs) {
      for (auto o : os) {
        for (auto iso : is) {
          EngineConfig cfg;
          cfg.heuristic = h;
          cfg.order = o;
          cfg.seed = gi;
          cfg.iso_mode = iso;
          cfg.min_iso_vertices = 1;  // exercise the isomorphism layer at every size
          ++runs;
          if (tutte::tutte(g, cfg).poly != want) {
            if (bad++ == 0) {
              first_bad = "graph #" + std::to_string(gi) + " " + std::string(to_string(h)) +
                          "/" + std::string(to_string(o)) + "/" + std::string(to_string(iso));
            }
          }
        }
      }
    }
  }
  Outcome out;
  out.pass = bad == 0;
  out.detail = std::to_string(catalog) + " catalog + 200 random graphs, " +
               std::to_string(runs) + " runs, " + std::to_string(bad) + " mismatches";
  if (bad) out.detail += " (first: " + first_bad + ")";
  return out;
}

Outcome closed_forms() {
  auto T = [](const Multigraph& g, bool blocks = false) {
    EngineConfig cfg;
    cfg.use_blocks = blocks;
    return tutte::tutte(g, cfg).poly;
  };
  const BiPoly x = BiPoly::monomial(1, 0);
  const BiPoly y = BiPoly::monomial(0, 1);
  const BiPoly tri = BiPoly::from_terms({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  const BiPoly k4 = BiPoly::from_terms(
      {{3, 0, 1}, {2, 0, 3}, {1, 0, 2}, {1, 1, 4}, {0, 1, 2}, {0, 2, 3}, {0, 3, 1}});
  const auto bowtie =
      Multigraph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});

  Outcome out;
  std::vector<std::string> failed;
  auto check = [&](const char* what, const BiPoly& got, const BiPoly& want) {
    if (got != want) failed.push_back(std::string(what) + " gave " + got.to_string());
  };
  check("K2", T(Multigraph::from_edges(2, {{1, 2}})), x);
  check("loop", T(Multigraph::from_edges(1, {{1, 1}})), y);
  check("triangle", T(complete(3)), tri);
  check("K4", T(complete(4)), k4);
  check("bowtie/blocks", T(bowtie, true), tri * tri);
  out.pass = failed.empty();
  out.detail = failed.empty() ? "K2, loop, triangle, K4, bowtie with blocks" : failed.front();
  return out;
}

Outcome specializations() {
  std::vector<std::pair<std::string, Multigraph>> graphs;
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k)
      graphs.emplace_back("P(" + std::to_string(n) + "," + std::to_string(k) + ")", petersen(n, k));
  for (std::size_t n = 1; n <= 9; ++n) graphs.emplace_back("K" + std::to_string(n), complete(n));
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t c = 1; c <= 4; ++c)
      graphs.emplace_back("grid" + std::to_string(r) + "x" + std::to_string(c), grid(r, c));

  Outcome out;
  std::size_t bad = 0;
  for (const auto& [name, g] : graphs) {
    const BiPoly t = tutte::tutte(g).poly;
    const bool ok = t.eval(1, 1) == Rational(spanning_trees(g)) &&
                    t.eval(2, 2) == Rational(pow2(g.edge_count()));
    if (!ok && bad++ == 0) out.detail = name + " failed; ";
  }
  out.pass = bad == 0;
  out.detail += std::to_string(graphs.size()) + " graphs, " + std::to_string(bad) + " failures";
  return out;
}

Outcome derived_polys() {
  const auto k2 = complete(2);
  const auto k3 = complete(3);
  const auto k5 = complete(5);
  UniPoly falling = UniPoly::monomial(0, 1, Variable::Lambda);
  for (int i = 0; i < 5; ++i) falling = falling * UniPoly(std::vector<Integer>{-i, 1}, Variable::Lambda);

  std::vector<std::string> failed;
  auto check = [&](const char* what, const UniPoly& got, const UniPoly& want) {
    if (!(got == want)) failed.push_back(std::string(what) + " gave " + got.to_string());
  };
  check("R(K2)", reliability(k2), UniPoly(std::vector<Integer>{1, -1}, Variable::P));
  check("P(K2)", chromatic(k2), UniPoly(std::vector<Integer>{0, -1, 1}, Variable::Lambda));
  check("P(K5)", chromatic(k5), falling);
  check("R(triangle)", reliability(k3), UniPoly(std::vector<Integer>{1, 0, -3, 2}, Variable::P));
  Outcome out;
  out.pass = failed.empty();
  out.detail = failed.empty() ? "R(K2), P(K2), P(K5), R(triangle)" : failed.front();
  return out;
}

Outcome sharc_goldens() {
  struct Case {
    const char* name;
    Multigraph g;
    std::vector<Vertex> want;
  };
  const std::vector<Case> cases = {
      {"five", Multigraph::from_edges(5, {{1, 3}, {1, 4}, {1, 5}, {3, 4}, {2, 4}, {2, 5}}),
       {1, 3, 4, 5, 2}},
      {"P(5,1)", petersen(5, 1), {1, 2, 7, 6, 10, 5, 4, 3, 8, 9}},
      {"P(5,2)", petersen(5, 2), {1, 5, 4, 3, 2, 8, 6, 9, 10, 7}},
  };
  Outcome out;
  for (const auto& c : cases) {
    const auto got = sharc_order(c.g).perm;
    const bool ok = got == c.want;
    out.pass = out.pass && ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += std::string(c.name) + (ok ? " ok" : " got " + join(got) + " want " + join(c.want));
  }
  return out;
}

RunStats p3_stats(std::size_t n, Heuristic h) {
  EngineConfig cfg;
  cfg.heuristic = h;
  cfg.order = OrderStrategy::Sharc;
  cfg.iso_mode = IsoMode::Identical;
  return tutte::tutte(petersen(n, 3), cfg).stats;
}

Outcome heuristic_separation() {
  const auto push = p3_stats(10, Heuristic::VorderPush).calls;
  const auto pull = p3_stats(10, Heuristic::VorderPull).calls;
  Outcome out;
  out.pass = push * 5 <= pull;
  char buf[160];
  std::snprintf(buf, sizeof buf, "P(10,3) push calls=%llu pull calls=%llu ratio=%.1f (need >= 5)",
                static_cast<unsigned long long>(push), static_cast<unsigned long long>(pull),
                static_cast<double>(pull) / static_cast<double>(push));
  out.detail = buf;
  return out;
}

Outcome linear_growth() {
  std::vector<double> calls;
  for (std::size_t n = 20; n <= 30; n += 2)
    calls.push_back(static_cast<double>(p3_stats(n, Heuristic::VorderPush).calls));
  std::vector<double> diffs;
  for (std::size_t i = 1; i < calls.size(); ++i) diffs.push_back(calls[i] - calls[i - 1]);
  const double lo = *std::min_element(diffs.begin(), diffs.end());
  const double hi = *std::max_element(diffs.begin(), diffs.end());
  Outcome out;
  out.pass = lo > 0 && hi / lo <= 1.5;
  std::ostringstream s;
  s << "calls";
  for (double c : calls) s << ' ' << static_cast<long long>(c);
  s << "; deltas";
  for (double d : diffs) s << ' ' << static_cast<long long>(d);
  char buf[64];
  std::snprintf(buf, sizeof buf, "; max/min=%.3f (need <= 1.5)", lo > 0 ? hi / lo : 0.0);
  s << buf;
  out.detail = s.str();
  return out;
}

Outcome truncated_icosahedron_run() {
  const auto ti = truncated_icosahedron(false);
  const auto dual = truncated_icosahedron(true);
  const auto res = tutte::tutte(ti);
  const Rational t11 = res.poly.eval(1, 1);
  const Rational t22 = res.poly.eval(2, 2);
  const Integer trees = spanning_trees(ti);
  const Integer dual_trees = spanning_trees(dual);
  const std::size_t rss = peak_rss_bytes();
  constexpr std::size_t kEightGb = std::size_t{8} << 30U;

  Outcome out;
  std::vector<std::string> failed;
  if (t11 != Rational(trees)) failed.push_back("T(1,1) != spanning trees");
  if (t22 != Rational(pow2(90))) failed.push_back("T(2,2) != 2^90");
  if (t11 != Rational(dual_trees)) failed.push_back("T(1,1) != T(dual,1,1)");
  if (rss > kEightGb) failed.push_back("peak RSS above 8 GB");
  out.pass = failed.empty();
  std::ostringstream s;
  s << "calls=" << res.stats.calls << " terms=" << res.poly.term_count() << " T(1,1)=" << trees
    << " peak_rss=" << rss << "b";
  for (const auto& f : failed) s << "; " << f;
  out.detail = s.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  std::set<int> skip;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if ((a == "--only" || a == "--skip") && i + 1 < argc) {
      (a == "--only" ? only : skip).insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--only N]... [--skip N]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", 120, oracle_equivalence},
      {2, "closed forms", 1, closed_forms},
      {3, "specialization identities", 300, specializations},
      {4, "derived polynomials", 1, derived_polys},
      {5, "SHARC golden orders", 1, sharc_goldens},
      {6, "push/pull separation on P(10,3)", 60, heuristic_separation},
      {7, "linear growth of push on P(n,3)", 300, linear_growth},
      {8, "truncated icosahedron", 1800, truncated_icosahedron_run},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if ((!only.empty() && !only.count(c.id)) || skip.count(c.id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    all = all && o.pass;
    std::printf("[%s] %d %s: %s (%.2fs, limit %.0fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
