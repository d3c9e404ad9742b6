#ifndef TREENV_GRAPH_HPP
#define TREENV_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treenv {

// Finite simple connected (q+1)-regular graph with 0-indexed vertices.
// Neighbor lists are kept sorted so equality and hashing are canonical.
// Immutable after construction; safe to share between threads.
struct Graph {
  int n = 0;                               // vertex count
  int degree = 0;                          // common degree d = q + 1
  int q = 0;                               // branching number d - 1
  std::vector<std::vector<int>> adjacency; // per-vertex sorted neighbor lists

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.adjacency == b.adjacency;
  }
};

// Validates and builds a graph from an edge list. Throws on self-loops,
// duplicate edges, irregularity, disconnectedness, or degree < 3.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Built-in families:
//   complete m            (m >= 4, q = m - 2)
//   complete_bipartite k  (k >= 3, K_{k,k}, q = k - 1)
//   petersen              (10 vertices, q = 2)
//   circular_ladder n     (n >= 3, C_n x K_2, q = 2)
Graph named_graph(std::string_view name, const std::vector<int>& params);

// Text format: optional '#' comment lines, a header "n m", then m lines
// "u v" with 0-based endpoints. parse(write(g)) == g.
Graph parse_graph_file(std::string_view text);
std::string write_graph_file(const Graph& g);

std::size_t edge_count(const Graph& g);

// 2-coloring by breadth-first search.
bool is_bipartite(const Graph& g);

}  // namespace treenv

#endif
