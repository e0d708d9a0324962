#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tutte/errors.hpp"

namespace tutte {

/// Vertex labels are 1-based.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  [[nodiscard]] bool is_loop() const noexcept { return u == v; }
  [[nodiscard]] Edge normalized() const noexcept {
    return u <= v ? *this : Edge{v, u};
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ContractMode {
  Pull,  // the first endpoint survives
  Push,  // the second endpoint survives
};

/// Undirected multigraph on vertices 1..n stored as sorted neighbour lists.
///
/// Every edge end contributes one entry, so a loop at v appears twice in the
/// list of v and parallel edges appear with multiplicity. Values are
/// immutable; every structural operation returns a new graph.
class Multigraph {
 public:
  Multigraph() : offsets_(1, 0) {}

  static Multigraph from_edges(std::size_t n, std::span<const Edge> edges) {
    for (const Edge& e : edges) {
      if (e.u < 1 || e.v < 1 || e.u > n || e.v > n)
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has a label outside 1.." + std::to_string(n));
    }
    return build(n, edges);
  }

  static Multigraph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {nbrs_.data() + offsets_[v - 1], nbrs_.data() + offsets_[v]};
  }

  [[nodiscard]] std::size_t degree(Vertex v) const noexcept {
    return offsets_[v] - offsets_[v - 1];
  }

  /// Number of parallel u-v edges; for u == v the number of loops.
  [[nodiscard]] std::size_t multiplicity(Vertex u, Vertex v) const noexcept {
    auto nb = neighbors(u);
    auto [lo, hi] = std::equal_range(nb.begin(), nb.end(), v);
    const auto c = static_cast<std::size_t>(hi - lo);
    return u == v ? c / 2 : c;
  }

  [[nodiscard]] std::size_t loop_count(Vertex v) const noexcept { return multiplicity(v, v); }

  [[nodiscard]] bool has_edge(Edge e) const noexcept {
    return e.u >= 1 && e.v >= 1 && e.u <= vertex_count() && e.v <= vertex_count() &&
           multiplicity(e.u, e.v) > 0;
  }

  /// All edges with u <= v in ascending order, one entry per parallel copy.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    const auto n = static_cast<Vertex>(vertex_count());
    for (Vertex u = 1; u <= n; ++u) {
      bool skip = false;
      for (Vertex w : neighbors(u)) {
        if (w > u) {
          out.push_back({u, w});
        } else if (w == u) {
          if (!skip) out.push_back({u, u});
          skip = !skip;
        }
      }
    }
    return out;
  }

  [[nodiscard]] std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> out(vertex_count());
    for (Vertex v = 1; v <= vertex_count(); ++v) {
      auto nb = neighbors(v);
      out[v - 1].assign(nb.begin(), nb.end());
    }
    return out;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

  /// Rough heap footprint, used for memory accounting.
  [[nodiscard]] std::size_t footprint_bytes() const noexcept {
    return offsets_.capacity() * sizeof(std::uint32_t) + nbrs_.capacity() * sizeof(Vertex);
  }

  // Unchecked construction; labels must already lie in 1..n.
  static Multigraph build(std::size_t n, std::span<const Edge> edges) {
    Multigraph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : edges) {
      ++g.offsets_[e.u];
      ++g.offsets_[e.v];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.nbrs_.resize(g.offsets_[n]);
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
      g.nbrs_[fill[e.u - 1]++] = e.v;
      g.nbrs_[fill[e.v - 1]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v)
      std::sort(g.nbrs_.begin() + g.offsets_[v], g.nbrs_.begin() + g.offsets_[v + 1]);
    g.edges_ = edges.size();
    return g;
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> nbrs_;
  std::size_t edges_ = 0;
};

namespace detail {

inline void require_edge(const Multigraph& g, Edge e) {
  if (!g.has_edge(e))
    throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not present");
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

inline void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7U;
  }
  out.push_back(static_cast<char>(v));
}

}  // namespace detail

/// Applies a vertex map (new_label[v-1] in 1..new_n) and drops the listed
/// edges (each entry removes one copy).
inline Multigraph quotient(const Multigraph& g, std::span<const Vertex> new_label,
                           std::size_t new_n, std::span<const Edge> removed = {}) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) e = e.normalized();
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  auto d = drop.begin();
  for (const Edge& e : g.edges()) {
    while (d != drop.end() && *d < e) ++d;
    if (d != drop.end() && *d == e) {
      ++d;
      continue;
    }
    kept.push_back({new_label[e.u - 1], new_label[e.v - 1]});
  }
  return Multigraph::build(new_n, kept);
}

inline Multigraph delete_edge(const Multigraph& g, Edge e) {
  detail::require_edge(g, e);
  const Edge one[] = {e};
  std::vector<Vertex> id(g.vertex_count());
  std::iota(id.begin(), id.end(), Vertex{1});
  return quotient(g, id, g.vertex_count(), one);
}

/// Contracts one copy of e = (u, v). Pull keeps u, push keeps v; the removed
/// endpoint's label disappears and higher labels shift down by one. Other
/// parallel u-v copies become loops.
inline Multigraph contract_edge(const Multigraph& g, Edge e, ContractMode mode) {
  detail::require_edge(g, e);
  if (e.is_loop()) throw InputError("cannot contract a loop");
  const Vertex keep = mode == ContractMode::Pull ? e.u : e.v;
  const Vertex gone = mode == ContractMode::Pull ? e.v : e.u;
  std::vector<Vertex> label(g.vertex_count());
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    const Vertex target = x == gone ? keep : x;
    label[x - 1] = target - (target > gone ? 1 : 0);
  }
  const Edge one[] = {e};
  return quotient(g, label, g.vertex_count() - 1, one);
}

/// Returns the loopless graph and the number of loops removed.
inline std::pair<Multigraph, std::size_t> strip_loops(const Multigraph& g) {
  std::vector<Edge> kept;
  std::size_t loops = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop())
      ++loops;
    else
      kept.push_back(e);
  }
  if (loops == 0) return {g, 0};
  return {Multigraph::build(g.vertex_count(), kept), loops};
}

/// Cut-edges, each reported as (lower, higher) in ascending order.
inline std::vector<Edge> bridges(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> disc(n + 1, 0), low(n + 1, 0);
  std::vector<Edge> out;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::uint32_t next;
    bool parent_skipped;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, 0, 0, false});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (w == f.v) continue;
        if (w == f.parent && !f.parent_skipped) {
          f.parent_skipped = true;
          continue;
        }
        if (disc[w] == 0) {
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0, false});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Vertex v = f.v;
        const Vertex p = f.parent;
        stack.pop_back();
        if (p != 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.push_back(Edge{p, v}.normalized());
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_connected(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> todo{1};
  seen[1] = 1;
  std::size_t count = 1;
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        todo.push_back(w);
      }
    }
  }
  return count == n;
}

/// Biconnected components of a connected graph, each relabelled to 1..k in
/// the relative order of its original labels. A bridge forms a two-vertex
/// block and every loop its own one-vertex block. Blocks are ordered by
/// their smallest original label, then by their label sets.
inline std::vector<Multigraph> blocks(const Multigraph& g) {
  if (!is_connected(g)) throw InputError("blocks: graph is disconnected");
  const std::size_t n = g.vertex_count();
  const std::vector<Edge> all = g.edges();

  struct Inc {
    Vertex to;
    std::uint32_t id;
  };
  std::vector<std::vector<Inc>> inc(n + 1);
  std::vector<std::pair<std::vector<Vertex>, std::vector<Edge>>> parts;
  for (std::uint32_t id = 0; id < all.size(); ++id) {
    const Edge& e = all[id];
    if (e.is_loop()) {
      parts.push_back({{e.u}, {e}});
      continue;
    }
    inc[e.u].push_back({e.v, id});
    inc[e.v].push_back({e.u, id});
  }

  std::vector<std::uint32_t> disc(n + 1, 0), low(n + 1, 0);
  std::vector<std::uint32_t> edge_stack;
  struct Frame {
    Vertex v;
    std::uint32_t via;  // edge id used to enter v
    std::size_t next;
  };
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  auto emit = [&](std::uint32_t stop_id) {
    std::vector<Edge> es;
    std::vector<Vertex> vs;
    for (;;) {
      const std::uint32_t id = edge_stack.back();
      edge_stack.pop_back();
      es.push_back(all[id]);
      vs.push_back(all[id].u);
      vs.push_back(all[id].v);
      if (id == stop_id) break;
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    parts.push_back({std::move(vs), std::move(es)});
  };

  if (n >= 1) {
    disc[1] = low[1] = ++timer;
    stack.push_back({1, kNone, 0});
  }
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < inc[f.v].size()) {
      const Inc in = inc[f.v][f.next++];
      if (in.id == f.via) continue;
      if (disc[in.to] == 0) {
        edge_stack.push_back(in.id);
        disc[in.to] = low[in.to] = ++timer;
        stack.push_back({in.to, in.id, 0});
      } else if (disc[in.to] < disc[f.v]) {
        edge_stack.push_back(in.id);
        low[f.v] = std::min(low[f.v], disc[in.to]);
      }
    } else {
      const Vertex v = f.v;
      const std::uint32_t via = f.via;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) emit(via);
    }
  }

  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.size() < b.second.size();
  });
  std::vector<Multigraph> out;
  out.reserve(parts.size());
  for (auto& [vs, es] : parts) {
    std::vector<Edge> local;
    local.reserve(es.size());
    auto rank = [&vs](Vertex x) {
      return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin() + 1);
    };
    for (const Edge& e : es) local.push_back({rank(e.u), rank(e.v)});
    out.push_back(Multigraph::build(vs.size(), local));
  }
  return out;
}

/// Shortest cycle length (a loop counts 1, a parallel pair 2); nullopt for a
/// forest.
inline std::optional<std::size_t> girth(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  bool parallel = false;
  for (Vertex v = 1; v <= n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) return 1;
      if (i + 1 < nb.size() && nb[i] == nb[i + 1]) parallel = true;
    }
  }
  if (parallel) return 2;
  std::optional<std::size_t> best;
  std::vector<std::int64_t> dist(n + 1);
  std::vector<Vertex> parent(n + 1);
  for (Vertex root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    parent[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const Vertex a = q.front();
      q.pop();
      if (best && static_cast<std::size_t>(2 * dist[a]) >= *best) break;
      for (Vertex b : g.neighbors(a)) {
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          q.push(b);
        } else if (b != parent[a]) {
          const auto len = static_cast<std::size_t>(dist[a] + dist[b] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// Serialises (n, sorted neighbour lists); equal strings iff equal labelled
/// multigraphs. Only the upper half of each list is written since the lower
/// half is implied by symmetry.
inline std::string encode_key(const Multigraph& g) {
  std::string out;
  const std::size_t n = g.vertex_count();
  out.reserve(n + g.edge_count() + 4);
  detail::put_varint(out, n);
  for (Vertex v = 1; v <= n; ++v) {
    auto nb = g.neighbors(v);
    auto first = std::lower_bound(nb.begin(), nb.end(), v);
    detail::put_varint(out, static_cast<std::uint64_t>(nb.end() - first));
    Vertex prev = v;
    for (auto it = first; it != nb.end(); ++it) {
      detail::put_varint(out, *it - prev);
      prev = *it;
    }
  }
  return out;
}

/// Bijective relabelling: vertex v becomes new_label[v-1].
inline Multigraph relabel(const Multigraph& g, std::span<const Vertex> new_label) {
  return quotient(g, new_label, g.vertex_count());
}

}  // namespace tutte
