#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/ti_data.hpp"

namespace tutte {

/// Generalised Petersen graph P(n,k): outer cycle 1..n, spokes i -- n+i and
/// inner edges n+i -- n+((i+k-1) mod n)+1.
inline Multigraph petersen(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k >= n) throw InputError("petersen: need 1 <= k < n/2");
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto v = static_cast<Vertex>(i);
    const auto nn = static_cast<Vertex>(n);
    edges.push_back({v, static_cast<Vertex>(i % n + 1)});
    edges.push_back({v, nn + v});
    edges.push_back({nn + v, nn + static_cast<Vertex>((i + k - 1) % n + 1)});
  }
  return Multigraph::build(2 * n, edges);
}

inline Multigraph complete(std::size_t n) {
  if (n < 1) throw InputError("complete: need n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Multigraph::build(n, edges);
}

/// rows x cols lattice, vertices numbered row-major.
inline Multigraph grid(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw InputError("grid: need rows, cols >= 1");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c + 1); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Multigraph::build(rows * cols, edges);
}

inline constexpr std::size_t kRandomRegularMaxAttempts = 100000;

/// Uniform pairing model; samples with loops, parallel edges or more than one
/// component are rejected and redrawn.
inline Multigraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n || (n * d) % 2 != 0)
    throw GenerationError("random_regular: need d < n and n*d even");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  points.reserve(n * d);
  for (Vertex v = 1; v <= n; ++v)
    for (std::size_t i = 0; i < d; ++i) points.push_back(v);
  for (std::size_t attempt = 0; attempt < kRandomRegularMaxAttempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const Edge e = Edge{points[i], points[i + 1]}.normalized();
      simple = !e.is_loop() && seen.insert(e).second;
      edges.push_back(e);
    }
    if (!simple) continue;
    Multigraph g = Multigraph::build(n, edges);
    if (is_connected(g)) return g;
  }
  throw GenerationError("random_regular: rejection limit reached");
}

namespace detail {
template <std::size_t N>
Multigraph from_table(int n, const std::array<std::pair<int, int>, N>& table) {
  std::vector<Edge> edges;
  edges.reserve(N);
  for (const auto& [u, v] : table) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  return Multigraph::build(static_cast<std::size_t>(n), edges);
}
}  // namespace detail

/// Truncated icosahedron (60 vertices, numbered in concentric rings around a
/// pentagon) or its dual (32 vertices).
inline Multigraph truncated_icosahedron(bool dual = false) {
  return dual ? detail::from_table(data::kTruncatedIcosahedronDualVertices,
                                   data::kTruncatedIcosahedronDualEdges)
              : detail::from_table(data::kTruncatedIcosahedronVertices,
                                   data::kTruncatedIcosahedronEdges);
}

}  // namespace tutte
