#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {

enum class OrderStrategy { Input, Random, Bfs, Sharc };

inline std::string_view to_string(OrderStrategy s) {
  switch (s) {
    case OrderStrategy::Input: return "input";
    case OrderStrategy::Random: return "random";
    case OrderStrategy::Bfs: return "bfs";
    case OrderStrategy::Sharc: return "sharc";
  }
  return "?";
}

inline OrderStrategy parse_order_strategy(std::string_view s) {
  if (s == "input") return OrderStrategy::Input;
  if (s == "random") return OrderStrategy::Random;
  if (s == "bfs") return OrderStrategy::Bfs;
  if (s == "sharc") return OrderStrategy::Sharc;
  throw InputError("unknown order '" + std::string(s) + "'");
}

/// A sequence S of vertex labels; the vertex at position i is relabelled i.
struct VertexOrder {
  std::vector<Vertex> perm;
  OrderStrategy strategy = OrderStrategy::Input;
  std::uint64_t seed = 0;
};

namespace detail {

// Sorted, de-duplicated, loop-free neighbour lists.
inline std::vector<std::vector<Vertex>> simple_neighbors(const Multigraph& g) {
  std::vector<std::vector<Vertex>> out(g.vertex_count() + 1);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w != v && (out[v].empty() || out[v].back() != w)) out[v].push_back(w);
    }
  }
  return out;
}

inline void require_connected(const Multigraph& g, const char* what) {
  if (g.vertex_count() == 0) throw InputError(std::string(what) + ": empty graph");
  if (!is_connected(g)) throw InputError(std::string(what) + ": graph is disconnected");
}

}  // namespace detail

inline VertexOrder input_order(std::size_t n) {
  VertexOrder o;
  o.perm.resize(n);
  std::iota(o.perm.begin(), o.perm.end(), Vertex{1});
  return o;
}

inline VertexOrder random_order(std::size_t n, std::uint64_t seed) {
  VertexOrder o = input_order(n);
  o.strategy = OrderStrategy::Random;
  o.seed = seed;
  std::mt19937_64 rng(seed);
  std::shuffle(o.perm.begin(), o.perm.end(), rng);
  return o;
}

/// Breadth-first order from vertex 1 with ascending neighbour scans.
inline VertexOrder bfs_order(const Multigraph& g) {
  detail::require_connected(g, "bfs_order");
  const auto nb = detail::simple_neighbors(g);
  VertexOrder o;
  o.strategy = OrderStrategy::Bfs;
  std::vector<char> seen(g.vertex_count() + 1, 0);
  o.perm.push_back(1);
  seen[1] = 1;
  for (std::size_t head = 0; head < o.perm.size(); ++head) {
    for (Vertex w : nb[o.perm[head]]) {
      if (!seen[w]) {
        seen[w] = 1;
        o.perm.push_back(w);
      }
    }
  }
  return o;
}

/// Short-arc order.
///
/// Starting from S = [1], each round runs a breadth-first search outward from
/// S and appends the interior of the first path found that leaves S and
/// returns to it. The frontier is seeded by scanning the vertices of S in
/// ascending label order; a frontier vertex reached from two different
/// vertices of S closes a one-vertex path immediately. Otherwise the first
/// dequeued vertex x that sees an S vertex, or a discovered vertex of a
/// different search branch, closes the path. The interior is appended
/// starting from the end that was discovered first: the branch of the seen
/// vertex, root to leaf, then x's branch leaf to root. If no path exists the
/// least vertex adjacent to S is appended on its own.
inline VertexOrder sharc_order(const Multigraph& g) {
  detail::require_connected(g, "sharc_order");
  const std::size_t n = g.vertex_count();
  const auto nb = detail::simple_neighbors(g);

  VertexOrder o;
  o.strategy = OrderStrategy::Sharc;
  o.perm.push_back(1);
  std::vector<char> in_s(n + 1, 0);
  in_s[1] = 1;

  std::vector<Vertex> parent(n + 1), root(n + 1);
  std::vector<Vertex> queue;

  // Vertices from v up to (excluding) S.
  auto upward = [&](Vertex v) {
    std::vector<Vertex> path;
    for (; !in_s[v]; v = parent[v]) path.push_back(v);
    return path;
  };

  while (o.perm.size() < n) {
    std::fill(parent.begin(), parent.end(), 0);
    queue.clear();
    std::vector<Vertex> segment;

    for (Vertex u = 1; u <= n && segment.empty(); ++u) {
      if (!in_s[u]) continue;
      for (Vertex v : nb[u]) {
        if (in_s[v]) continue;
        if (parent[v] != 0) {
          segment = {v};
          break;
        }
        parent[v] = u;
        root[v] = v;
        queue.push_back(v);
      }
    }

    for (std::size_t head = 0; head < queue.size() && segment.empty(); ++head) {
      const Vertex x = queue[head];
      for (Vertex w : nb[x]) {
        if (w == parent[x]) continue;
        if (in_s[w]) {
          segment = upward(x);
          break;
        }
        if (parent[w] != 0) {
          if (root[w] == root[x]) continue;
          segment = upward(w);
          std::reverse(segment.begin(), segment.end());
          const auto tail = upward(x);
          segment.insert(segment.end(), tail.begin(), tail.end());
          break;
        }
        parent[w] = x;
        root[w] = root[x];
        queue.push_back(w);
      }
    }

    if (segment.empty()) {
      // Only cut-edges leave S.
      Vertex least = 0;
      for (Vertex u = 1; u <= n; ++u) {
        if (!in_s[u]) continue;
        for (Vertex v : nb[u])
          if (!in_s[v] && (least == 0 || v < least)) least = v;
      }
      segment = {least};
    }
    for (Vertex v : segment) {
      in_s[v] = 1;
      o.perm.push_back(v);
    }
  }
  return o;
}

inline VertexOrder make_order(const Multigraph& g, OrderStrategy s, std::uint64_t seed = 0) {
  switch (s) {
    case OrderStrategy::Random: return random_order(g.vertex_count(), seed);
    case OrderStrategy::Bfs: return bfs_order(g);
    case OrderStrategy::Sharc: return sharc_order(g);
    case OrderStrategy::Input: break;
  }
  return input_order(g.vertex_count());
}

/// Relabels so that the vertex at position i of the order receives label i.
inline Multigraph apply_order(const Multigraph& g, const VertexOrder& o) {
  const std::size_t n = g.vertex_count();
  if (o.perm.size() != n) throw InputError("apply_order: order has wrong length");
  std::vector<Vertex> new_label(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex old = o.perm[i];
    if (old < 1 || old > n || new_label[old - 1] != 0)
      throw InputError("apply_order: not a permutation of 1..n");
    new_label[old - 1] = static_cast<Vertex>(i + 1);
  }
  return relabel(g, new_label);
}

}  // namespace tutte
