#pragma once

#include <cstddef>
#include <vector>

#include "tutte/engine.hpp"
#include "tutte/errors.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

/// R_p = (1-p)^(n-1) p^(m-n+1) T(1, 1/p), written as
/// (1-p)^(n-1) * sum_j c_j p^(m-n+1-j) where c_j is the y^j coefficient of T(1, y).
inline UniPoly reliability_from_tutte(const BiPoly& t, std::size_t n, std::size_t m) {
  const std::size_t nullity = m + 1 - n;
  std::vector<Integer> inner(nullity + 1);
  for (const auto& term : t.terms()) {
    if (term.y > nullity) throw InputError("reliability: y-degree exceeds nullity");
    inner[nullity - term.y] += term.coeff;
  }
  UniPoly r(std::move(inner), Variable::P);
  const UniPoly one_minus_p(std::vector<Integer>{1, -1}, Variable::P);
  for (std::size_t i = 0; i + 1 < n; ++i) r = r * one_minus_p;
  return r.with_variable(Variable::P);
}

/// P_lambda = (-1)^(n-1) lambda T(1-lambda, 0).
inline UniPoly chromatic_from_tutte(const BiPoly& t, std::size_t n) {
  std::vector<BiPoly::Term> base;
  for (const auto& term : t.terms())
    if (term.y == 0) base.push_back(term);
  UniPoly p = substitute_x_linear(BiPoly::from_terms(std::move(base)), 1, -1, Variable::Lambda);
  const Integer sign = (n - 1) % 2 == 0 ? 1 : -1;
  return p * UniPoly::monomial(1, sign, Variable::Lambda);
}

inline UniPoly reliability(const Multigraph& g, const EngineConfig& cfg = {}) {
  const auto res = tutte(g, cfg);
  return reliability_from_tutte(res.poly, g.vertex_count(), g.edge_count());
}

inline UniPoly chromatic(const Multigraph& g, const EngineConfig& cfg = {}) {
  const auto res = tutte(g, cfg);
  return chromatic_from_tutte(res.poly, g.vertex_count());
}

}  // namespace tutte
