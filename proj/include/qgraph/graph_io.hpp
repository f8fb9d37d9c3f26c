#pragma once

// Graph text format shared with the CLI:
//   line 1: ell
//   then one edge per line, "i j" (1-based, whitespace separated)
//   '#' starts a comment line; blank lines are ignored
// serialize() emits the canonical form (sorted edges), which round-trips
// byte for byte.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

inline Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int ell = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (ell < 0) {
      if (!(ls >> ell) || ell < 1)
        throw input_error("graph file line " + std::to_string(lineno) +
                          ": expected vertex count");
      continue;
    }
    int a = 0, b = 0;
    if (!(ls >> a >> b))
      throw input_error("graph file line " + std::to_string(lineno) + ": expected 'i j'");
    std::string rest;
    if (ls >> rest && rest[0] != '#')
      throw input_error("graph file line " + std::to_string(lineno) + ": trailing tokens");
    edges.push_back({a, b});
  }
  if (ell < 0) throw input_error("graph file: missing vertex count");
  return Graph(ell, edges);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file: " + path);
  return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.ell() << "\n";
  for (const Edge& e : g.edges()) os << e.first << " " << e.second << "\n";
  return os.str();
}

}  // namespace qgraph
