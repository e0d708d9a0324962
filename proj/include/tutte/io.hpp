#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {

/// Reads "n m" followed by m lines "u v"; lines starting with '#' are skipped.
inline Multigraph read_graph(std::istream& in) {
  std::string line;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw InputError("line " + std::to_string(lineno) + ": expected two integers");
    if (n < 0) {
      if (a < 1 || b < 0) throw InputError("header: need n >= 1 and m >= 0");
      n = a;
      m = b;
      continue;
    }
    if (a < 1 || b < 1 || a > n || b > n)
      throw InputError("line " + std::to_string(lineno) + ": vertex label out of range");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (n < 0) throw InputError("missing header line");
  if (static_cast<long long>(edges.size()) != m)
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Multigraph::from_edges(static_cast<std::size_t>(n), edges);
}

inline Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace tutte
