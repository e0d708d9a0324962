// Command-line front end.
//
//   tutte compute [flags] <graph>      polynomial on stdout, stats on stderr
//   tutte gen <family> <params..>      graph text on stdout or -o
//   tutte verify [--oracle] <graph>    exit 0 iff all cross-checks agree
//   tutte bench <family> [flags]       CSV sweep over heuristic x order x iso
//
// Exit status: 0 ok, 1 computation or verification failure, 2 usage.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tutte/tutte.hpp"

namespace {

using namespace tutte;

struct EngineFlags {
  std::string heuristic = "vorder-push";
  std::string order = "sharc";
  std::uint64_t seed = 0;
  std::string iso = "identical";
  std::size_t iso_min_vertices = 15;
  bool blocks = false;
  bool trace = false;
  std::size_t memory_report = 0;
  std::size_t memory_budget = 0;

  [[nodiscard]] EngineConfig config() const {
    EngineConfig cfg;
    cfg.heuristic = parse_heuristic(heuristic);
    cfg.order = parse_order_strategy(order);
    cfg.seed = seed;
    cfg.iso_mode = parse_iso_mode(iso);
    cfg.min_iso_vertices = iso_min_vertices;
    cfg.use_blocks = blocks;
    cfg.trace = trace;
    cfg.memory_report_interval = memory_report;
    if (memory_budget != 0) cfg.memory_budget_bytes = memory_budget;
    return cfg;
  }
};

void add_engine_flags(CLI::App* app, EngineFlags& f) {
  app->add_option("--heuristic", f.heuristic, "mindeg, vorder-pull or vorder-push")
      ->check(CLI::IsMember({"mindeg", "vorder-pull", "vorder-push"}));
  app->add_option("--order", f.order, "input, random, bfs or sharc")
      ->check(CLI::IsMember({"input", "random", "bfs", "sharc"}));
  app->add_option("--seed", f.seed, "seed for --order random");
  app->add_option("--iso", f.iso, "none, identical or full")
      ->check(CLI::IsMember({"none", "identical", "full"}));
  app->add_option("--iso-min-vertices", f.iso_min_vertices,
                  "smallest graph given an isomorphism lookup")
      ->check(CLI::PositiveNumber);
  app->add_flag("--blocks", f.blocks, "factor the input over its blocks");
  app->add_flag("--trace", f.trace, "print first-completion lines to stderr");
  app->add_option("--memory-report", f.memory_report, "memory line every N calls");
  app->add_option("--memory-budget", f.memory_budget, "abort once the memo exceeds this many bytes");
}

Multigraph load(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_graph(in);
}

// Writes to -o when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(Integer(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw InputError("not a rational number: '" + s + "'");
  }
}

std::string rational_str(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
  EngineFlags engine;
  std::string input;
  std::string output;
  bool reliability = false;
  bool chromatic = false;
  std::vector<std::string> evaluate;
};

int run_compute(const ComputeArgs& a) {
  const Multigraph g = load(a.input);
  EngineConfig cfg = a.engine.config();
  cfg.trace_stream = &std::cerr;
  TutteResult res;
  try {
    res = tutte::tutte(g, cfg);
  } catch (const MemoryBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n' << stats_line(e.stats()) << '\n';
    return 1;
  }
  Sink out(a.output);
  if (a.reliability) {
    out.get() << reliability_from_tutte(res.poly, g.vertex_count(), g.edge_count()).to_string()
              << '\n';
  } else if (a.chromatic) {
    out.get() << chromatic_from_tutte(res.poly, g.vertex_count()).to_string() << '\n';
  } else if (!a.evaluate.empty()) {
    out.get() << rational_str(res.poly.eval(parse_rational(a.evaluate[0]),
                                            parse_rational(a.evaluate[1])))
              << '\n';
  } else {
    out.get() << res.poly.to_string() << '\n';
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", res.stats.seconds);
  std::cerr << stats_line(res.stats) << " time=" << secs << "s\n";
  return 0;
}

// gen ----------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<std::size_t> params;
  std::uint64_t seed = 0;
  std::string output;
};

Multigraph make_family(const std::string& family, const std::vector<std::size_t>& p,
                       std::uint64_t seed) {
  auto need = [&](std::size_t k, const char* usage) {
    if (p.size() != k) throw CLI::ValidationError(family, std::string("expects ") + usage);
  };
  if (family == "petersen") {
    need(2, "<n> <k>");
    return petersen(p[0], p[1]);
  }
  if (family == "complete") {
    need(1, "<n>");
    return complete(p[0]);
  }
  if (family == "grid") {
    need(2, "<rows> <cols>");
    return grid(p[0], p[1]);
  }
  if (family == "random_regular") {
    need(2, "<n> <d>");
    return random_regular(p[0], p[1], seed);
  }
  if (family == "truncated_icosahedron" || family == "truncated_icosahedron_dual") {
    need(0, "no parameters");
    return truncated_icosahedron(family == "truncated_icosahedron_dual");
  }
  throw CLI::ValidationError("family", "unknown family '" + family + "'");
}

const std::vector<std::string> kFamilies = {"petersen",     "complete",
                                            "grid",         "random_regular",
                                            "truncated_icosahedron", "truncated_icosahedron_dual"};

int run_gen(const GenArgs& a) {
  const Multigraph g = make_family(a.family, a.params, a.seed);
  Sink out(a.output);
  write_graph(out.get(), g);
  return 0;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  EngineFlags engine;
  std::string input;
  bool oracle = false;
};

int run_verify(const VerifyArgs& a) {
  const Multigraph g = load(a.input);
  const auto res = tutte::tutte(g, a.engine.config());
  bool ok = true;
  auto report = [&ok](const std::string& what, bool pass) {
    std::cout << (pass ? "ok   " : "FAIL ") << what << '\n';
    ok = ok && pass;
  };
  const Integer trees = spanning_trees(g);
  report("T(1,1) = spanning trees (" + trees.str() + ")", res.poly.eval(1, 1) == Rational(trees));
  report("T(2,2) = 2^" + std::to_string(g.edge_count()),
         res.poly.eval(2, 2) == Rational(Integer(1) << g.edge_count()));
  if (a.oracle || g.edge_count() <= kOracleMaxEdges) {
    if (g.edge_count() > kOracleMaxEdges) {
      std::cerr << "error: subset oracle is limited to " << kOracleMaxEdges << " edges\n";
      return 1;
    }
    report("engine = subset-expansion oracle", res.poly == tutte_bruteforce(g));
  }
  return ok ? 0 : 1;
}

// bench --------------------------------------------------------------------

struct BenchArgs {
  std::string family;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t step = 1;
  std::size_t param = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> heuristics = {"mindeg", "vorder-pull", "vorder-push"};
  std::vector<std::string> orders = {"input", "random", "bfs", "sharc"};
  std::vector<std::string> isos = {"none", "identical", "full"};
  std::size_t iso_min_vertices = 15;
  std::size_t memory_budget = 0;
  unsigned threads = 1;
  std::string output;
};

struct Cell {
  Multigraph g;
  std::size_t size = 0;
  Heuristic h{};
  OrderStrategy o{};
  IsoMode iso{};
  std::string row;
};

Multigraph bench_graph(const BenchArgs& a, std::size_t n) {
  if (a.family == "petersen") return petersen(n, a.param);
  if (a.family == "complete") return complete(n);
  if (a.family == "grid") return grid(a.param, n);
  if (a.family == "random_regular") return random_regular(n, a.param, a.seed + n);
  throw CLI::ValidationError("family", "bench supports petersen, complete, grid, random_regular");
}

std::string bench_row(Cell& c, const BenchArgs& a) {
  EngineConfig cfg;
  cfg.heuristic = c.h;
  cfg.order = c.o;
  cfg.seed = a.seed;
  cfg.iso_mode = c.iso;
  cfg.min_iso_vertices = a.iso_min_vertices;
  if (a.memory_budget != 0) cfg.memory_budget_bytes = a.memory_budget;
  RunStats s;
  std::string status = "ok";
  try {
    s = tutte::tutte(c.g, cfg).stats;
  } catch (const MemoryBudgetExceeded& e) {
    s = e.stats();
    status = "budget";
  }
  char avg[32] = "";
  if (auto d = s.average_degree()) std::snprintf(avg, sizeof avg, "%.3f", *d);
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.4f", s.seconds);
  std::ostringstream row;
  row << c.g.vertex_count() << ',' << c.g.edge_count() << ',' << to_string(c.h) << ','
      << to_string(c.o) << ',' << to_string(c.iso) << ',' << s.calls << ',' << s.ident << ','
      << s.isom << ',' << avg << ',' << secs << ',' << s.peak_memory_bytes << ',' << status;
  return row.str();
}

int run_bench(const BenchArgs& a) {
  if (a.step == 0 || a.from > a.to) throw CLI::ValidationError("--from/--to/--step", "empty range");
  std::vector<Cell> cells;
  for (std::size_t n = a.from; n <= a.to; n += a.step) {
    const Multigraph g = bench_graph(a, n);
    for (const auto& h : a.heuristics)
      for (const auto& o : a.orders)
        for (const auto& iso : a.isos)
          cells.push_back({g, n, parse_heuristic(h), parse_order_strategy(o), parse_iso_mode(iso), {}});
  }

  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      cells[i].row = bench_row(cells[i], a);
      std::lock_guard<std::mutex> lock(log_mutex);
      std::cerr << "[" << i + 1 << "/" << cells.size() << "] " << cells[i].row << '\n';
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1U, a.threads); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Sink out(a.output);
  out.get() << "n,m,heuristic,order,iso_mode,calls,ident,isom,avgdeg,time_s,peakmem_b,status\n";
  for (const auto& c : cells) out.get() << c.row << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte polynomials by deletion-contraction"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "compute T(G; x, y) of a graph file");
  add_engine_flags(c, compute.engine);
  c->add_option("graph", compute.input, "graph file, '-' for stdin")->required();
  c->add_option("-o", compute.output, "write the result here");
  auto* rel = c->add_flag("--reliability", compute.reliability, "print R_p instead");
  auto* chr = c->add_flag("--chromatic", compute.chromatic, "print P_lambda instead");
  auto* ev = c->add_option("--evaluate", compute.evaluate, "print T(x, y); rationals like 1/2")
                 ->expected(2);
  rel->excludes(chr)->excludes(ev);
  chr->excludes(ev);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated graph");
  g->add_option("family", gen.family, "graph family")->required()->check(CLI::IsMember(kFamilies));
  g->add_option("params", gen.params, "family parameters");
  g->add_option("--seed", gen.seed, "seed for random_regular");
  g->add_option("-o", gen.output, "output file");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "cross-check the engine on a graph file");
  add_engine_flags(v, verify.engine);
  v->add_option("graph", verify.input, "graph file, '-' for stdin")->required();
  v->add_flag("--oracle", verify.oracle, "require the subset-expansion oracle");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "CSV sweep over a family size range");
  b->add_option("family", bench.family, "petersen, complete, grid or random_regular")
      ->required()
      ->check(CLI::IsMember({"petersen", "complete", "grid", "random_regular"}));
  b->add_option("--from", bench.from, "first size")->required();
  b->add_option("--to", bench.to, "last size")->required();
  b->add_option("--step", bench.step, "size step");
  b->add_option("--param", bench.param, "k for petersen, rows for grid, d for random_regular");
  b->add_option("--seed", bench.seed, "seed for random graphs and orders");
  b->add_option("--heuristic", bench.heuristics, "heuristics to sweep")->delimiter(',');
  b->add_option("--order", bench.orders, "orders to sweep")->delimiter(',');
  b->add_option("--iso", bench.isos, "isomorphism modes to sweep")->delimiter(',');
  b->add_option("--iso-min-vertices", bench.iso_min_vertices, "threshold for --iso full");
  b->add_option("--memory-budget", bench.memory_budget, "per-cell memo budget in bytes");
  b->add_option("--threads", bench.threads, "worker threads");
  b->add_option("-o", bench.output, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c) return run_compute(compute);
    if (*g) return run_gen(gen);
    if (*v) return run_verify(verify);
    if (*b) return run_bench(bench);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
