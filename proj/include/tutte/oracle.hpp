#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

inline constexpr std::size_t kOracleMaxEdges = 20;

/// Rank-generating-function expansion over all 2^m edge subsets A:
///   T = sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)),  r(A) = n - components(V, A).
/// Independent of the deletion-contraction engine; only for small graphs.
inline BiPoly tutte_bruteforce(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  if (m > kOracleMaxEdges) throw ResourceError("tutte_bruteforce: more than 20 edges");
  if (n == 0 || !is_connected(g)) throw InputError("tutte_bruteforce: graph is disconnected");

  const std::size_t full_rank = n - 1;
  // counts[a][b] = number of subsets with corank a and nullity b.
  std::vector<std::vector<std::uint64_t>> counts(full_rank + 1,
                                                 std::vector<std::uint64_t>(m + 1, 0));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    detail::UnionFind uf(n);
    std::size_t rank = 0;
    std::size_t size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1U)) continue;
      ++size;
      if (uf.unite(edges[i].u - 1, edges[i].v - 1)) ++rank;
    }
    ++counts[full_rank - rank][size - rank];
  }

  auto binomial_row = [](std::size_t k) {
    std::vector<Integer> row{1};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Integer> next(row.size() + 1);
      for (std::size_t j = 0; j < row.size(); ++j) {
        next[j] += row[j];
        next[j + 1] += row[j];
      }
      row = std::move(next);
    }
    return row;
  };

  // (x-1)^a (y-1)^b = sum_i sum_j C(a,i) C(b,j) (-1)^(a-i+b-j) x^i y^j
  std::vector<BiPoly::Term> terms;
  for (std::size_t a = 0; a <= full_rank; ++a) {
    const auto ca = binomial_row(a);
    for (std::size_t b = 0; b <= m; ++b) {
      if (counts[a][b] == 0) continue;
      const auto cb = binomial_row(b);
      for (std::size_t i = 0; i <= a; ++i) {
        for (std::size_t j = 0; j <= b; ++j) {
          Integer c = ca[i] * cb[j] * counts[a][b];
          if ((a - i + b - j) % 2 == 1) c = -c;
          terms.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           std::move(c)});
        }
      }
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

}  // namespace tutte
