#pragma once

// Test-only graph sources and brute-force reference computations. Nothing in
// here shares code with the engine beyond the Multigraph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tutte/multigraph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte::fixtures {

using EdgeList = std::vector<Edge>;

inline EdgeList sorted_normalized(EdgeList e) {
  for (auto& x : e) x = x.normalized();
  std::sort(e.begin(), e.end());
  return e;
}

/// Lexicographically least edge list over all n! relabellings.
inline EdgeList canonical_form(std::size_t n, const EdgeList& edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  EdgeList best;
  bool first = true;
  EdgeList cur(edges.size());
  do {
    for (std::size_t i = 0; i < edges.size(); ++i)
      cur[i] = Edge{perm[edges[i].u - 1], perm[edges[i].v - 1]}.normalized();
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) {
      best = cur;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected_edges(std::size_t n, const EdgeList& edges) {
  std::vector<Vertex> root(n + 1);
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::size_t parts = n;
  for (const Edge& e : edges) {
    auto a = find(e.u);
    auto b = find(e.v);
    if (a != b) {
      root[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

/// Every connected multigraph (loops and parallel edges allowed) with
/// 1 <= n <= max_n vertices and at most max_m edges, one per isomorphism class.
inline std::vector<Multigraph> connected_catalog(std::size_t max_n, std::size_t max_m) {
  std::vector<Multigraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u; v <= n; ++v) slots.push_back({u, v});
    std::set<EdgeList> level{EdgeList{}};
    std::set<EdgeList> all = level;
    for (std::size_t m = 1; m <= max_m; ++m) {
      std::set<EdgeList> next;
      for (const auto& g : level) {
        for (const Edge& s : slots) {
          EdgeList h = g;
          h.push_back(s);
          next.insert(canonical_form(n, h));
        }
      }
      all.insert(next.begin(), next.end());
      level = std::move(next);
    }
    for (const auto& g : all)
      if (connected_edges(n, g)) out.push_back(Multigraph::from_edges(n, g));
  }
  return out;
}

/// Connected multigraph with n vertices and m >= n - 1 edges: a random
/// spanning tree plus random extra pairs, which may be loops or repeats.
inline Multigraph random_connected(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  EdgeList edges;
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> pick(1, v - 1);
    edges.push_back({pick(rng), v});
  }
  std::uniform_int_distribution<Vertex> any(1, static_cast<Vertex>(n));
  while (edges.size() < m) edges.push_back({any(rng), any(rng)});
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) e = {perm[e.u - 1], perm[e.v - 1]};
  std::shuffle(edges.begin(), edges.end(), rng);
  return Multigraph::from_edges(n, edges);
}

/// Number of proper colourings with k colours by exhaustive assignment.
inline std::uint64_t count_colorings(const Multigraph& g, std::uint32_t k) {
  const std::size_t n = g.vertex_count();
  const auto edges = g.edges();
  for (const Edge& e : edges)
    if (e.is_loop()) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  std::vector<std::uint32_t> col(n + 1, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const Edge& e : edges) {
      if (col[e.u] == col[e.v]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 1;
    while (i <= n && ++col[i] == k) col[i++] = 0;
    if (i > n) break;
  }
  return count;
}

/// Connection probability as a polynomial in p by summing over all edge
/// failure patterns: coefficient list, lowest degree first.
inline std::vector<Integer> reliability_by_enumeration(const Multigraph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Integer> poly(m + 1, 0);
  // binom[i][j]
  std::vector<std::vector<Integer>> binom(m + 1, std::vector<Integer>(m + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    EdgeList alive;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1U << i)) alive.push_back(edges[i]);
    if (!connected_edges(g.vertex_count(), alive)) continue;
    // p^(failed) (1-p)^(alive)
    const std::size_t failed = m - alive.size();
    const std::size_t up = alive.size();
    for (std::size_t j = 0; j <= up; ++j) {
      const Integer term = (j % 2 == 0 ? 1 : -1) * binom[up][j];
      poly[failed + j] += term;
    }
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

/// Isomorphism by trying every bijection.
inline bool isomorphic_bruteforce(const Multigraph& a, const Multigraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const EdgeList target = sorted_normalized(b.edges());
  const EdgeList src = a.edges();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  EdgeList cur(src.size());
  do {
    for (std::size_t i = 0; i < src.size(); ++i)
      cur[i] = Edge{perm[src[i].u - 1], perm[src[i].v - 1]}.normalized();
    std::sort(cur.begin(), cur.end());
    if (cur == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{1});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace tutte::fixtures
