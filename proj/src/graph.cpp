#include "treenv/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <queue>
#include <set>
#include <sstream>

#include "treenv/errors.hpp"

namespace treenv {

namespace {

void check_connected(const Graph& g) {
  std::vector<char> seen(g.n, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : g.adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  if (reached != g.n) {
    fail(errc::not_connected, "graph is not connected: reached " +
                                  std::to_string(reached) + " of " +
                                  std::to_string(g.n) + " vertices");
  }
}

}  // namespace

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0) fail(errc::bad_params, "vertex count must be positive");
  Graph g;
  g.n = n;
  g.adjacency.assign(n, {});

  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(errc::bad_params, "edge endpoint out of range: (" +
                                 std::to_string(u) + ", " + std::to_string(v) +
                                 ")");
    }
    if (u == v) {
      fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      fail(errc::duplicate_edge, "duplicate edge (" + std::to_string(key.first) +
                                     ", " + std::to_string(key.second) + ")");
    }
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());

  int d = static_cast<int>(g.adjacency[0].size());
  for (int v = 0; v < n; ++v) {
    int dv = static_cast<int>(g.adjacency[v].size());
    if (dv != d) {
      fail(errc::not_regular, "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(dv) + ", expected " +
                                  std::to_string(d));
    }
  }
  g.degree = d;
  g.q = d - 1;

  check_connected(g);

  if (d < 3) {
    fail(errc::degree_too_small,
         "degree " + std::to_string(d) + " < 3 (need branching number q >= 2)");
  }
  return g;
}

Graph named_graph(std::string_view name, const std::vector<int>& params) {
  auto want_params = [&](std::size_t count) {
    if (params.size() != count) {
      fail(errc::bad_params, std::string(name) + " expects " +
                                 std::to_string(count) + " parameter(s), got " +
                                 std::to_string(params.size()));
    }
  };
  std::vector<std::pair<int, int>> edges;

  if (name == "complete") {
    want_params(1);
    int m = params[0];
    if (m < 4) fail(errc::bad_params, "complete m requires m >= 4");
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return build_graph(m, edges);
  }
  if (name == "complete_bipartite") {
    want_params(1);
    int k = params[0];
    if (k < 3) fail(errc::bad_params, "complete_bipartite k requires k >= 3");
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) edges.emplace_back(u, k + v);
    return build_graph(2 * k, edges);
  }
  if (name == "petersen") {
    want_params(0);
    // Outer 5-cycle 0..4, inner pentagram 5..9 (i adjacent to i+-2 mod 5),
    // spokes i -- i+5.
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      edges.emplace_back(i, 5 + i);
    }
    return build_graph(10, edges);
  }
  if (name == "circular_ladder") {
    want_params(1);
    int m = params[0];
    if (m < 3) fail(errc::bad_params, "circular_ladder n requires n >= 3");
    // C_n x K_2: vertex (i, s) -> i + s*m.
    for (int i = 0; i < m; ++i) {
      edges.emplace_back(i, (i + 1) % m);
      edges.emplace_back(m + i, m + (i + 1) % m);
      edges.emplace_back(i, m + i);
    }
    return build_graph(2 * m, edges);
  }
  fail(errc::unknown_name, "unknown graph name: " + std::string(name));
}

namespace {

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
  int line_no = 0;
  int n = -1;
  long m = -1;
  std::vector<std::pair<int, int>> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, end - pos);
    pos = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;

    std::istringstream fields{std::string(line)};
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);

    if (n < 0) {
      int mm = 0;
      if (tokens.size() != 2 || !parse_int(tokens[0], n) ||
          !parse_int(tokens[1], mm) || n <= 0 || mm < 0) {
        fail(errc::syntax_error, "line " + std::to_string(line_no) +
                                     ": expected header \"n m\"");
      }
      m = mm;
      continue;
    }
    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) ||
        !parse_int(tokens[1], v)) {
      fail(errc::syntax_error,
           "line " + std::to_string(line_no) + ": expected edge \"u v\"");
    }
    edges.emplace_back(u, v);
  }

  if (n < 0) fail(errc::syntax_error, "missing header line \"n m\"");
  if (static_cast<long>(edges.size()) != m) {
    fail(errc::syntax_error, "header declares " + std::to_string(m) +
                                 " edges, found " +
                                 std::to_string(edges.size()));
  }
  return build_graph(n, edges);
}

std::string write_graph_file(const Graph& g) {
  std::string out =
      std::to_string(g.n) + " " + std::to_string(edge_count(g)) + "\n";
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.adjacency[u]) {
      if (u < v) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
      }
    }
  }
  return out;
}

std::size_t edge_count(const Graph& g) {
  std::size_t twice = 0;
  for (const auto& list : g.adjacency) twice += list.size();
  return twice / 2;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  std::queue<int> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : g.adjacency[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        queue.push(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace treenv
