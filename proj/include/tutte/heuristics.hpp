#pragma once

#include <string>
#include <string_view>

#include "tutte/errors.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {

enum class Heuristic { MinDeg, VorderPull, VorderPush };

inline std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::MinDeg: return "mindeg";
    case Heuristic::VorderPull: return "vorder-pull";
    case Heuristic::VorderPush: return "vorder-push";
  }
  return "?";
}

inline Heuristic parse_heuristic(std::string_view s) {
  if (s == "mindeg") return Heuristic::MinDeg;
  if (s == "vorder-pull" || s == "vorder_pull") return Heuristic::VorderPull;
  if (s == "vorder-push" || s == "vorder_push") return Heuristic::VorderPush;
  throw InputError("unknown heuristic '" + std::string(s) + "'");
}

/// Which endpoint of the selected edge survives contraction. MINDEG keeps its
/// anchor vertex, as VORDER-pull does.
inline ContractMode contract_mode(Heuristic h) noexcept {
  return h == Heuristic::VorderPush ? ContractMode::Push : ContractMode::Pull;
}

/// Picks the next edge e = (u, v) to delete and contract.
///
/// MINDEG: u is the lowest-labelled vertex of minimum positive degree and v
/// the lowest-labelled neighbour of u of minimum degree. VORDER: u is the
/// lowest-labelled vertex with an edge and v the first entry of its list.
/// The graph should be loopless and bridgeless so the result is neither.
inline Edge select_edge(const Multigraph& g, Heuristic h) {
  if (g.edge_count() == 0) throw InputError("select_edge: graph has no edges");
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (h != Heuristic::MinDeg) {
    for (Vertex u = 1; u <= n; ++u) {
      auto nb = g.neighbors(u);
      if (!nb.empty()) return {u, nb.front()};
    }
  }
  Vertex u = 0;
  for (Vertex x = 1; x <= n; ++x) {
    const auto d = g.degree(x);
    if (d > 0 && (u == 0 || d < g.degree(u))) u = x;
  }
  Vertex v = 0;
  for (Vertex w : g.neighbors(u)) {
    if (w == u) continue;
    if (v == 0 || g.degree(w) < g.degree(v)) v = w;
  }
  // Only loops at u; fall back to the loop itself.
  return {u, v == 0 ? u : v};
}

}  // namespace tutte
