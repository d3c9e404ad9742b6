#include "treenv/covering.hpp"

#include <string>

#include "treenv/errors.hpp"

namespace treenv {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(errc::overflow, "non-backtracking walk count exceeds 64 bits");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(errc::overflow, "non-backtracking walk count exceeds 64 bits");
  }
  return out;
}

void check_root(const Graph& g, int root) {
  if (root < 0 || root >= g.n) {
    fail(errc::root_out_of_range,
         "root " + std::to_string(root) + " outside [0, " +
             std::to_string(g.n) + ")");
  }
}

}  // namespace

std::vector<CountMatrix> nb_walk_counts(const Graph& g, int n_max) {
  if (n_max < 0) fail(errc::bad_params, "n_max must be >= 0");
  const int n = g.n;
  const std::int64_t q = g.q;

  auto zero = CountMatrix(n, std::vector<std::int64_t>(n, 0));
  std::vector<CountMatrix> walks;
  walks.reserve(n_max + 1);

  CountMatrix identity = zero;
  for (int i = 0; i < n; ++i) identity[i][i] = 1;
  walks.push_back(identity);
  if (n_max == 0) return walks;

  CountMatrix adj = zero;
  for (int u = 0; u < n; ++u)
    for (int v : g.adjacency[u]) adj[u][v] = 1;
  walks.push_back(adj);

  auto adj_times = [&](const CountMatrix& m) {
    // Row u of A_1 * M via the sparse neighbor lists.
    CountMatrix out = zero;
    for (int u = 0; u < n; ++u)
      for (int w : g.adjacency[u])
        for (int v = 0; v < n; ++v)
          out[u][v] = checked_add(out[u][v], m[w][v]);
    return out;
  };

  for (int step = 2; step <= n_max; ++step) {
    CountMatrix next = adj_times(walks[step - 1]);
    // Length-2 closed backtracking returns number q+1 per vertex, and q per
    // edge afterwards.
    const std::int64_t back = (step == 2) ? q + 1 : q;
    const CountMatrix& detract = (step == 2) ? walks[0] : walks[step - 2];
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        next[u][v] = checked_add(next[u][v], -checked_mul(back, detract[u][v]));
    walks.push_back(std::move(next));
  }
  return walks;
}

FiberCountTable fiber_counts(const Graph& g, int root, int r_max) {
  check_root(g, root);
  if (r_max < 0) fail(errc::bad_params, "r_max must be >= 0");

  auto walks = nb_walk_counts(g, r_max);
  FiberCountTable table;
  table.root = root;
  table.counts.assign(r_max + 1, std::vector<std::int64_t>(g.n, 0));
  for (int v = 0; v < g.n; ++v) {
    std::int64_t running = 0;
    for (int r = 0; r <= r_max; ++r) {
      running = checked_add(running, walks[r][v][root]);
      table.counts[r][v] = running;
    }
  }
  return table;
}

std::vector<double> oracle_nv(const Graph& g, int root, int r_max) {
  auto table = fiber_counts(g, root, r_max);
  const std::int64_t n = g.n;

  std::vector<double> nv(r_max + 1);
  for (int r = 0; r <= r_max; ++r) {
    std::int64_t sum = 0, sum_sq = 0;
    for (int v = 0; v < g.n; ++v) {
      std::int64_t c = table.counts[r][v];
      sum = checked_add(sum, c);
      sum_sq = checked_add(sum_sq, checked_mul(c, c));
    }
    // (1/n) sum c^2 - ((1/n) sum c)^2 with exact integer numerators.
    std::int64_t numerator =
        checked_add(checked_mul(n, sum_sq), -checked_mul(sum, sum));
    nv[r] = static_cast<double>(numerator) /
            (static_cast<double>(n) * static_cast<double>(n));
  }
  return nv;
}

CoverBallCount enumerate_cover_ball(const Graph& g, int root, int r) {
  check_root(g, root);
  if (r < 0) fail(errc::bad_params, "radius must be >= 0");
  if (r > 12) {
    fail(errc::radius_too_large,
         "explicit path enumeration is guarded at r <= 12");
  }

  CoverBallCount count{1, 1};  // the empty path sits at the root
  // Depth-first over non-backtracking extensions.
  struct Frame {
    int vertex;
    int previous;
    int depth;
  };
  std::vector<Frame> stack;
  if (r >= 1) {
    for (int v : g.adjacency[root]) stack.push_back({v, root, 1});
  }
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    ++count.ball_size;
    if (f.vertex == root) ++count.fiber_hits;
    if (f.depth == r) continue;
    for (int w : g.adjacency[f.vertex]) {
      if (w != f.previous) stack.push_back({w, f.vertex, f.depth + 1});
    }
  }
  return count;
}

}  // namespace treenv
