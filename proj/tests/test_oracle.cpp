#include <gtest/gtest.h>

#include <random>

#include "support/catalog.hpp"
#include "tutte/tutte.hpp"

using namespace tutte;

TEST(Oracle, Examples) {
  EXPECT_EQ(tutte_bruteforce(complete(2)), BiPoly::monomial(1, 0));
  EXPECT_EQ(tutte_bruteforce(Multigraph::from_edges(1, {{1, 1}})), BiPoly::monomial(0, 1));
  EXPECT_EQ(tutte_bruteforce(complete(3)).to_string(), "x^2 + x + y");
  EXPECT_EQ(tutte_bruteforce(Multigraph::from_edges(1, {})), BiPoly::constant(1));
  EXPECT_EQ(tutte_bruteforce(complete(4)).to_string(),
            "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y");
}

TEST(Oracle, Errors) {
  EXPECT_THROW(tutte_bruteforce(complete(7)), ResourceError);  // 21 edges
  EXPECT_THROW(tutte_bruteforce(Multigraph::from_edges(2, {})), InputError);
  EXPECT_NO_THROW(tutte_bruteforce(grid(3, 4)));  // 17 edges
}

TEST(Oracle, Identities) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const auto g = fixtures::random_connected(n, n - 1 + rng() % 8, rng);
    const BiPoly t = tutte_bruteforce(g);
    EXPECT_EQ(t.eval(1, 1), Rational(spanning_trees(g)));
    EXPECT_EQ(t.eval(2, 2), Rational(Integer(1) << g.edge_count()));
    EXPECT_LE(t.x_degree(), n - 1);
    EXPECT_LE(t.y_degree(), g.edge_count() + 1 - n);
    for (const auto& term : t.terms()) EXPECT_GT(term.coeff, 0);
  }
}

TEST(Catalog, KnownCounts) {
  // Simple connected graphs up to isomorphism: 1, 1, 2, 6 on 1..4 vertices
  // and 19 on 5 vertices with at most 8 edges (21 overall minus K5 and K5-e).
  const auto cat = fixtures::connected_catalog(5, 8);
  std::vector<int> simple(6, 0);
  for (const auto& g : cat) {
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && !e.is_loop() && g.multiplicity(e.u, e.v) == 1;
    if (ok) ++simple[g.vertex_count()];
  }
  EXPECT_EQ(simple, (std::vector<int>{0, 1, 1, 2, 6, 19}));
}
