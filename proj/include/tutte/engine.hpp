#pragma once

#include <cassert>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/heuristics.hpp"
#include "tutte/invariants.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/ordering.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

enum class IsoMode {
  None,       // plain recursion, nothing remembered
  Identical,  // reuse results for identical labelled graphs
  Full,       // additionally reuse results for isomorphic graphs
};

inline std::string_view to_string(IsoMode m) {
  switch (m) {
    case IsoMode::None: return "none";
    case IsoMode::Identical: return "identical";
    case IsoMode::Full: return "full";
  }
  return "?";
}

inline IsoMode parse_iso_mode(std::string_view s) {
  if (s == "none") return IsoMode::None;
  if (s == "identical") return IsoMode::Identical;
  if (s == "full") return IsoMode::Full;
  throw InputError("unknown isomorphism mode '" + std::string(s) + "'");
}

struct EngineConfig {
  Heuristic heuristic = Heuristic::VorderPush;
  OrderStrategy order = OrderStrategy::Sharc;
  std::uint64_t seed = 0;
  IsoMode iso_mode = IsoMode::Identical;
  /// Isomorphism lookups only for graphs with at least this many vertices.
  std::size_t min_iso_vertices = 15;
  /// Factor over biconnected components of the input graph.
  bool use_blocks = false;
  bool trace = false;
  /// Trace and memory report sink; nothing is written when null.
  std::ostream* trace_stream = nullptr;
  /// Emit a memory line every this many calls; 0 disables.
  std::size_t memory_report_interval = 0;
  std::optional<std::size_t> memory_budget_bytes;
  std::uint64_t prime = kDefaultPrime;
};

struct TraceEvent {
  std::size_t vertices = 0;
  double seconds = 0;  // since the previous first-time completion
  std::size_t bytes = 0;
};

struct RunStats {
  std::uint64_t calls = 0;
  std::uint64_t ident = 0;
  std::uint64_t isom = 0;
  std::uint64_t sum_selected_degree = 0;
  std::uint64_t selections = 0;
  std::size_t memo_entries = 0;
  std::size_t peak_memory_bytes = 0;
  double seconds = 0;
  std::vector<TraceEvent> trace;

  [[nodiscard]] std::optional<double> average_degree() const {
    if (selections == 0) return std::nullopt;
    return static_cast<double>(sum_selected_degree) / static_cast<double>(selections);
  }
};

/// "n=<vertices> time=<seconds>s space=<bytes>b"
inline std::string trace_line(const TraceEvent& e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=%zu time=%.2fs space=%zub", e.vertices, e.seconds, e.bytes);
  return buf;
}

/// "calls=<..> ident=<..> isom=<..> avgdeg=<..> peakmem=<..>"
inline std::string stats_line(const RunStats& s) {
  char deg[32] = "-";
  if (auto d = s.average_degree()) std::snprintf(deg, sizeof deg, "%.2f", *d);
  return "calls=" + std::to_string(s.calls) + " ident=" + std::to_string(s.ident) +
         " isom=" + std::to_string(s.isom) + " avgdeg=" + deg +
         " peakmem=" + std::to_string(s.peak_memory_bytes);
}

/// Thrown when the memo store outgrows EngineConfig::memory_budget_bytes.
class MemoryBudgetExceeded : public ResourceError {
 public:
  MemoryBudgetExceeded(const std::string& what, RunStats partial)
      : ResourceError(what), stats_(std::move(partial)) {}
  [[nodiscard]] const RunStats& stats() const noexcept { return stats_; }

 private:
  RunStats stats_;
};

/// Results of solved subgraphs keyed by exact labelled encoding, with an
/// optional isomorphism index bucketed by Laplacian fingerprint. Values are
/// held serialized and decoded on each hit.
class MemoStore {
 public:
  /// Stored result for key times x^i y^j, if present.
  [[nodiscard]] std::optional<BiPoly> find_exact(const std::string& key, std::uint32_t i = 0,
                                                 std::uint32_t j = 0) const {
    auto it = exact_.find(key);
    if (it == exact_.end()) return std::nullopt;
    return BiPoly::deserialize(values_[it->second], i, j);
  }

  /// Looks for a stored graph isomorphic to g; on success the result is also
  /// recorded under key so later identical lookups hit directly.
  std::optional<BiPoly> find_isomorphic(const std::string& key, const Multigraph& g,
                                        const CharPolyFingerprint& fp, std::uint32_t i = 0,
                                        std::uint32_t j = 0) {
    auto it = buckets_.find(fp);
    if (it == buckets_.end()) return std::nullopt;
    for (const auto& [other, index] : it->second) {
      if (isomorphic(g, other, false)) {
        exact_.emplace(key, index);
        bytes_ += key.size() + kNodeOverhead;
        return BiPoly::deserialize(values_[index], i, j);
      }
    }
    return std::nullopt;
  }

  void insert(std::string key, const BiPoly& poly, const Multigraph* g = nullptr,
              const CharPolyFingerprint* fp = nullptr) {
    const auto index = static_cast<std::uint32_t>(values_.size());
    values_.push_back(poly.serialize());
    values_.back().shrink_to_fit();
    bytes_ += key.size() + 2 * kNodeOverhead + values_.back().size();
    exact_.emplace(std::move(key), index);
    if (g != nullptr && fp != nullptr) {
      bytes_ += g->footprint_bytes() + kNodeOverhead;
      buckets_[*fp].emplace_back(*g, index);
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::size_t bytes() const noexcept { return bytes_; }

 private:
  static constexpr std::size_t kNodeOverhead = 64;

  std::unordered_map<std::string, std::uint32_t> exact_;
  std::unordered_map<CharPolyFingerprint, std::vector<std::pair<Multigraph, std::uint32_t>>,
                     CharPolyFingerprintHash>
      buckets_;
  std::deque<std::string> values_;
  std::size_t bytes_ = 0;
};

/// Contracts every listed cut-edge. Each contracted tree of cut-edges keeps
/// its lowest label under pull and its highest under push; survivors are then
/// compacted to 1..k in order.
inline Multigraph contract_bridges(const Multigraph& g, std::span<const Edge> cut_edges,
                                   ContractMode mode) {
  const std::size_t n = g.vertex_count();
  detail::UnionFind uf(n + 1);
  for (const Edge& e : cut_edges) uf.unite(e.u, e.v);
  std::vector<Vertex> rep(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    Vertex& r = rep[uf.find(v)];
    if (r == 0 || (mode == ContractMode::Pull ? v < r : v > r)) r = v;
  }
  std::vector<Vertex> rank(n + 1, 0);
  Vertex next = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (rep[uf.find(v)] == v) rank[v] = ++next;
  std::vector<Vertex> label(n);
  for (Vertex v = 1; v <= n; ++v) label[v - 1] = rank[rep[uf.find(v)]];
  return quotient(g, label, next, cut_edges);
}

namespace detail {

class TutteRun {
 public:
  explicit TutteRun(const EngineConfig& cfg)
      : cfg_(cfg), mode_(contract_mode(cfg.heuristic)), start_(Clock::now()),
        last_event_(start_) {}

  BiPoly solve(const Multigraph& input) {
    auto [g, loops] = strip_loops(input);
    const auto cut = bridges(g);
    if (!cut.empty()) g = contract_bridges(g, cut, mode_);
    const auto bx = static_cast<std::uint32_t>(cut.size());
    const auto ly = static_cast<std::uint32_t>(loops);
    if (g.edge_count() == 0) return BiPoly::monomial(bx, ly);

    ++stats_.calls;
    if (cfg_.memory_report_interval != 0 && stats_.calls % cfg_.memory_report_interval == 0 &&
        cfg_.trace_stream != nullptr) {
      *cfg_.trace_stream << "calls=" << stats_.calls << " space=" << memo_.bytes() << "b\n";
    }

    std::string key;
    std::optional<CharPolyFingerprint> fp;
    if (cfg_.iso_mode != IsoMode::None) {
      key = encode_key(g);
      if (auto hit = memo_.find_exact(key, bx, ly)) {
        ++stats_.ident;
        return std::move(*hit);
      }
      if (cfg_.iso_mode == IsoMode::Full && g.vertex_count() >= cfg_.min_iso_vertices) {
        fp = laplacian_charpoly_modp(g, cfg_.prime);
        if (auto hit = memo_.find_isomorphic(key, g, *fp, bx, ly)) {
          ++stats_.isom;
          return std::move(*hit);
        }
      }
    }

    const Edge e = select_edge(g, cfg_.heuristic);
    assert(!e.is_loop());
    stats_.sum_selected_degree += g.degree(e.u);
    ++stats_.selections;

    BiPoly result = solve(delete_edge(g, e));
    result += solve(contract_edge(g, e, mode_));

    if (cfg_.iso_mode != IsoMode::None) {
      memo_.insert(std::move(key), result, fp ? &g : nullptr, fp ? &*fp : nullptr);
      if (cfg_.memory_budget_bytes && memo_.bytes() > *cfg_.memory_budget_bytes) {
        finish();
        throw MemoryBudgetExceeded("memory budget of " +
                                       std::to_string(*cfg_.memory_budget_bytes) +
                                       " bytes exceeded",
                                   stats_);
      }
    }
    note_completion(g.vertex_count());
    return result.shift(bx, ly);
  }

  RunStats& finish() {
    stats_.memo_entries = memo_.size();
    stats_.peak_memory_bytes = memo_.bytes();
    stats_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return stats_;
  }

 private:
  using Clock = std::chrono::steady_clock;

  void note_completion(std::size_t n) {
    if (!cfg_.trace) return;
    if (seen_sizes_.size() <= n) seen_sizes_.resize(n + 1, 0);
    if (seen_sizes_[n]) return;
    seen_sizes_[n] = 1;
    const auto now = Clock::now();
    TraceEvent ev{n, std::chrono::duration<double>(now - last_event_).count(), memo_.bytes()};
    last_event_ = now;
    stats_.trace.push_back(ev);
    if (cfg_.trace_stream != nullptr) *cfg_.trace_stream << trace_line(ev) << '\n';
  }

  const EngineConfig& cfg_;
  ContractMode mode_;
  MemoStore memo_;
  RunStats stats_;
  Clock::time_point start_;
  Clock::time_point last_event_;
  std::vector<char> seen_sizes_;
};

}  // namespace detail

struct TutteResult {
  BiPoly poly;
  RunStats stats;
};

/// Tutte polynomial by deletion-contraction.
///
/// Each step strips loops (factor y each), contracts all cut-edges (factor x
/// each) and, on a graph with edges left, consults the memo store before
/// splitting on the edge chosen by the configured heuristic. The input is
/// first relabelled by the configured vertex order; with use_blocks the
/// relabelled graph is factored into its blocks, which share one memo store.
inline TutteResult tutte(const Multigraph& g, const EngineConfig& cfg = {}) {
  if (g.vertex_count() == 0) throw InputError("tutte: empty graph");
  if (!is_connected(g)) throw InputError("tutte: graph is disconnected");
  if (cfg.iso_mode == IsoMode::Full && cfg.min_iso_vertices < 1)
    throw InputError("tutte: min_iso_vertices must be at least 1");

  const Multigraph ordered = apply_order(g, make_order(g, cfg.order, cfg.seed));
  detail::TutteRun run(cfg);
  BiPoly poly;
  if (cfg.use_blocks) {
    poly = BiPoly::constant(1);
    for (const Multigraph& b : blocks(ordered)) poly = poly * run.solve(b);
  } else {
    poly = run.solve(ordered);
  }
  return {std::move(poly), std::move(run.finish())};
}

}  // namespace tutte
