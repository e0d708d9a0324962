#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

/// Characteristic polynomial of the Laplacian D - A over F_p, lowest degree
/// first, plus the sorted per-vertex loop counts (loops do not affect D - A).
struct CharPolyFingerprint {
  std::uint64_t prime = kDefaultPrime;
  std::vector<std::uint64_t> coeffs;
  std::vector<std::uint32_t> loops;

  friend bool operator==(const CharPolyFingerprint&, const CharPolyFingerprint&) = default;
};

struct CharPolyFingerprintHash {
  std::size_t operator()(const CharPolyFingerprint& f) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ f.prime;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6U) + (h >> 2U);
    };
    for (auto c : f.coeffs) mix(c);
    for (auto l : f.loops) mix(l);
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e != 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

inline std::vector<std::uint32_t> loop_profile(const Multigraph& g) {
  std::vector<std::uint32_t> loops;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto l = g.loop_count(v);
    if (l != 0) loops.push_back(static_cast<std::uint32_t>(l));
  }
  std::sort(loops.begin(), loops.end());
  return loops;
}

}  // namespace detail

/// Reduces D - A to upper Hessenberg form by modular similarity transforms and
/// reads off det(tI - (D - A)) with the standard Hessenberg recurrence;
/// O(n^3) operations in F_p.
inline CharPolyFingerprint laplacian_charpoly_modp(const Multigraph& g,
                                                   std::uint64_t p = kDefaultPrime) {
  if (p >= (std::uint64_t{1} << 32U) || !detail::is_prime(p))
    throw InputError("laplacian_charpoly_modp: modulus must be a prime below 2^32");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n, 0));
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w == v) continue;
      h[v - 1][v - 1] = (h[v - 1][v - 1] + 1) % p;
      h[v - 1][w - 1] = (h[v - 1][w - 1] + p - 1) % p;
    }
  }

  for (std::size_t m = 1; m + 1 < n; ++m) {
    const std::size_t c = m - 1;
    std::size_t piv = m;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const std::uint64_t inv = detail::pow_mod(h[m][c], p - 2, p);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][c] == 0) continue;
      const std::uint64_t u = h[j][c] * inv % p;
      for (std::size_t k = 0; k < n; ++k) h[j][k] = (h[j][k] + (p - u) * h[m][k]) % p;
      for (std::size_t k = 0; k < n; ++k) h[k][m] = (h[k][m] + u * h[k][j]) % p;
    }
  }

  // polys[k] = characteristic polynomial of the leading k x k block.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& pk = polys[k];
    pk.assign(k + 1, 0);
    const auto& prev = polys[k - 1];
    const std::uint64_t diag = h[k - 1][k - 1];
    for (std::size_t e = 0; e < prev.size(); ++e) {
      pk[e + 1] = (pk[e + 1] + prev[e]) % p;
      pk[e] = (pk[e] + (p - diag) * prev[e]) % p;
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = prod * h[i][i - 1] % p;
      const std::uint64_t f = h[i - 1][k - 1] * prod % p;
      if (f != 0) {
        for (std::size_t e = 0; e < polys[i - 1].size(); ++e)
          pk[e] = (pk[e] + (p - f) * polys[i - 1][e]) % p;
      }
    }
  }
  return {p, std::move(polys[n]), detail::loop_profile(g)};
}

namespace detail {

// Colour refinement run jointly on both graphs so colour ids are comparable.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine_colors(
    const Multigraph& a, const Multigraph& b) {
  const std::size_t n = a.vertex_count();
  std::vector<std::uint32_t> ca(n + 1), cb(n + 1);
  {
    std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> ids;
    auto id = [&ids](std::size_t d, std::size_t l) {
      return ids.try_emplace({d, l}, static_cast<std::uint32_t>(ids.size())).first->second;
    };
    for (Vertex v = 1; v <= n; ++v) {
      ca[v] = id(a.degree(v), a.loop_count(v));
      cb[v] = id(b.degree(v), b.loop_count(v));
    }
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    auto signature = [](const Multigraph& g, const std::vector<std::uint32_t>& col, Vertex v) {
      std::vector<std::uint32_t> sig;
      for (Vertex w : g.neighbors(v))
        if (w != v) sig.push_back(col[w]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), col[v]);
      return sig;
    };
    std::vector<std::uint32_t> na(n + 1), nb(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      na[v] = ids.try_emplace(signature(a, ca, v), static_cast<std::uint32_t>(ids.size()))
                  .first->second;
    }
    for (Vertex v = 1; v <= n; ++v) {
      nb[v] = ids.try_emplace(signature(b, cb, v), static_cast<std::uint32_t>(ids.size()))
                  .first->second;
    }
    ca = std::move(na);
    cb = std::move(nb);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(ca), std::move(cb)};
}

inline std::vector<std::uint16_t> multiplicity_matrix(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint16_t> mat(n * n, 0);
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex w : g.neighbors(v)) ++mat[(v - 1) * n + (w - 1)];
  return mat;
}

}  // namespace detail

/// Exact multigraph isomorphism: cheap invariant rejects, colour refinement,
/// then backtracking over colour-compatible maps with adjacency pruning.
inline bool isomorphic(const Multigraph& a, const Multigraph& b, bool check_fingerprint = true) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n <= 1) return a == b;
  {
    std::vector<std::size_t> da, db;
    for (Vertex v = 1; v <= n; ++v) {
      da.push_back(a.degree(v));
      db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (detail::loop_profile(a) != detail::loop_profile(b)) return false;
  }
  if (a == b) return true;
  if (check_fingerprint && laplacian_charpoly_modp(a) != laplacian_charpoly_modp(b))
    return false;

  auto [ca, cb] = detail::refine_colors(a, b);
  std::map<std::uint32_t, int> hist;
  for (Vertex v = 1; v <= n; ++v) {
    ++hist[ca[v]];
    --hist[cb[v]];
  }
  for (const auto& [c, k] : hist)
    if (k != 0) return false;
  std::map<std::uint32_t, std::size_t> class_size;
  for (Vertex v = 1; v <= n; ++v) ++class_size[ca[v]];

  const auto ma = detail::multiplicity_matrix(a);
  const auto mb = detail::multiplicity_matrix(b);

  // Most constrained first: most already-placed neighbours, then rarest
  // colour, then highest degree.
  std::vector<Vertex> order;
  std::vector<char> placed(n + 1, 0);
  std::vector<std::size_t> links(n + 1, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (placed[v]) continue;
      if (best == 0) {
        best = v;
        continue;
      }
      const auto key = [&](Vertex x) {
        return std::tuple(links[x], -static_cast<long>(class_size[ca[x]]), a.degree(x));
      };
      if (key(v) > key(best)) best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : a.neighbors(best))
      if (!placed[w]) ++links[w];
  }

  std::vector<Vertex> image(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex x = order[depth];
    for (Vertex y = 1; y <= n; ++y) {
      if (used[y] || cb[y] != ca[x]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex px = order[k];
        ok = ma[(x - 1) * n + (px - 1)] == mb[(y - 1) * n + (image[px] - 1)];
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (extend(depth + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(0);
}

/// Number of spanning trees by the Matrix-Tree theorem: Bareiss elimination
/// on the Laplacian with the last row and column removed.
inline Integer spanning_trees(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || !is_connected(g)) throw InputError("spanning_trees: graph is disconnected");
  if (n == 1) return 1;
  const std::size_t k = n - 1;
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k, 0));
  for (Vertex v = 1; v <= k; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w == v) continue;
      a[v - 1][v - 1] += 1;
      if (w <= k) a[v - 1][w - 1] -= 1;
    }
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    if (a[c][c] == 0) {
      std::size_t r = c + 1;
      while (r < k && a[r][c] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[r], a[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < k; ++r) {
      for (std::size_t j = c + 1; j < k; ++j)
        a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace tutte
