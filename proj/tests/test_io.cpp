#include <gtest/gtest.h>

#include "tutte/tutte.hpp"

using namespace tutte;

TEST(GraphText, Parse) {
  const auto g = parse_graph("# triangle with a loop\n3 4\n1 2\n2 3\n\n3 1\n2 2\n");
  EXPECT_EQ(g, Multigraph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}, {2, 2}}));
  EXPECT_EQ(parse_graph("1 0\n"), Multigraph::from_edges(1, {}));
  EXPECT_EQ(parse_graph("2 2\n1 2\r\n1 2\n").multiplicity(1, 2), 2u);
}

TEST(GraphText, Errors) {
  EXPECT_THROW(parse_graph(""), InputError);
  EXPECT_THROW(parse_graph("# only a comment\n"), InputError);
  EXPECT_THROW(parse_graph("3 2\n1 2\n"), InputError);
  EXPECT_THROW(parse_graph("3 1\n1 4\n"), InputError);
  EXPECT_THROW(parse_graph("3 1\n1 x\n"), InputError);
  EXPECT_THROW(parse_graph("3 1\n1 2 3\n"), InputError);
  EXPECT_THROW(parse_graph("0 0\n"), InputError);
}

TEST(GraphText, RoundTrip) {
  for (const auto& g : {petersen(5, 2), grid(3, 2), Multigraph::from_edges(2, {{1, 2}, {1, 2}, {2, 2}})}) {
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
  EXPECT_EQ(format_graph(complete(3)), "3 3\n1 2\n1 3\n2 3\n");
}
