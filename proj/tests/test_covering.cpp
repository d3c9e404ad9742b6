#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "treenv/covering.hpp"
#include "treenv/errors.hpp"
#include "treenv/graph.hpp"
#include "treenv/spectral.hpp"
#include "treenv/spherical.hpp"

using namespace treenv;

namespace {

// Brute-force count of non-backtracking walks of length n from u to v,
// independent of the matrix recursion.
std::int64_t brute_force_nb_walks(const Graph& g, int from, int to, int n) {
  if (n == 0) return from == to ? 1 : 0;
  std::int64_t total = 0;
  struct Frame {
    int vertex;
    int previous;
    int depth;
  };
  std::vector<Frame> stack;
  for (int w : g.adjacency[from]) stack.push_back({w, from, 1});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == n) {
      if (f.vertex == to) ++total;
      continue;
    }
    for (int w : g.adjacency[f.vertex]) {
      if (w != f.previous) stack.push_back({w, f.vertex, f.depth + 1});
    }
  }
  return total;
}

}  // namespace

TEST_CASE("walk matrices against brute force enumeration") {
  for (const char* name : {"complete", "petersen", "complete_bipartite"}) {
    Graph g = (std::string(name) == "complete")
                  ? named_graph("complete", {4})
                  : (std::string(name) == "petersen")
                        ? named_graph("petersen", {})
                        : named_graph("complete_bipartite", {3});
    auto walks = nb_walk_counts(g, 4);
    for (int n = 0; n <= 4; ++n) {
      for (int u = 0; u < g.n; ++u) {
        for (int v = 0; v < g.n; ++v) {
          CHECK(walks[n][u][v] == brute_force_nb_walks(g, u, v, n));
        }
      }
    }
  }
}

TEST_CASE("walk matrix closed forms for the tetrahedron") {
  Graph k4 = named_graph("complete", {4});
  auto walks = nb_walk_counts(k4, 3);
  // A^2 = 2A + 3I for K4, so A_2 = A^2 - 3I = 2 A_1.
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      CHECK(walks[2][u][v] == 2 * walks[1][u][v]);
    }
  }
  CHECK(walks[3][0][0] == 6);
}

TEST_CASE("walk matrices are symmetric with regular row sums") {
  for (const char* name : {"petersen", "circular_ladder"}) {
    Graph g = (std::string(name) == "petersen")
                  ? named_graph("petersen", {})
                  : named_graph("circular_ladder", {6});
    auto walks = nb_walk_counts(g, 10);
    for (int n = 1; n <= 10; ++n) {
      std::int64_t expected =
          static_cast<std::int64_t>(std::llround(sphere_size_d(n, g.q)));
      std::int64_t diag = walks[n][0][0];
      for (int u = 0; u < g.n; ++u) {
        std::int64_t row = 0;
        for (int v = 0; v < g.n; ++v) {
          row += walks[n][u][v];
          CHECK(walks[n][u][v] == walks[n][v][u]);
          CHECK(walks[n][u][v] >= 0);
        }
        CHECK(row == expected);
        // Vertex-transitive: the closed-walk count is the same at every
        // vertex, so trace/n is that common value.
        CHECK(walks[n][u][u] == diag);
      }
    }
  }
}

TEST_CASE("walk count overflow is detected") {
  Graph k4 = named_graph("complete", {4});
  CHECK_THROWS_AS(nb_walk_counts(k4, 90), error);
}

TEST_CASE("fiber counts") {
  Graph k4 = named_graph("complete", {4});
  auto table = fiber_counts(k4, 0, 3);
  CHECK(table.counts[0][0] == 1);
  CHECK(table.counts[0][1] == 0);
  CHECK(table.counts[3][0] == 7);
  for (int v = 1; v < 4; ++v) CHECK(table.counts[3][v] == 5);

  Graph b3 = named_graph("complete_bipartite", {3});
  auto tb = fiber_counts(b3, 0, 1);
  CHECK(tb.counts[1][0] == 1);
  CHECK(tb.counts[1][1] == 0);
  CHECK(tb.counts[1][2] == 0);
  for (int v = 3; v < 6; ++v) CHECK(tb.counts[1][v] == 1);
}

TEST_CASE("fiber count column sums give ball volumes") {
  std::vector<Graph> graphs = {
      named_graph("complete", {4}), named_graph("complete_bipartite", {3}),
      named_graph("petersen", {}), named_graph("circular_ladder", {24})};
  for (const Graph& g : graphs) {
    auto table = fiber_counts(g, 0, 20);
    for (int r = 0; r <= 20; ++r) {
      std::int64_t sum = 0;
      for (int v = 0; v < g.n; ++v) {
        sum += table.counts[r][v];
        if (r > 0) CHECK(table.counts[r][v] >= table.counts[r - 1][v]);
      }
      CHECK(sum == ball_volume(r, g.q));
    }
  }
}

TEST_CASE("oracle number variance known values") {
  Graph k4 = named_graph("complete", {4});
  auto nv = oracle_nv(k4, 0, 5);
  CHECK(nv[0] == doctest::Approx(3.0 / 16).epsilon(1e-15));
  CHECK(nv[1] == doctest::Approx(0.0));
  CHECK(nv[2] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(nv[3] == doctest::Approx(0.75).epsilon(1e-15));

  Graph b3 = named_graph("complete_bipartite", {3});
  CHECK(oracle_nv(b3, 0, 1)[1] == doctest::Approx(2.0 / 9).epsilon(1e-15));

  Graph petersen = named_graph("petersen", {});
  CHECK(oracle_nv(petersen, 0, 0)[0] ==
        doctest::Approx(9.0 / 100).epsilon(1e-15));
}

TEST_CASE("explicit cover ball enumeration") {
  Graph k4 = named_graph("complete", {4});
  auto r2 = enumerate_cover_ball(k4, 0, 2);
  CHECK(r2.ball_size == 10);
  CHECK(r2.fiber_hits == 1);
  auto r3 = enumerate_cover_ball(k4, 0, 3);
  CHECK(r3.ball_size == 22);
  CHECK(r3.fiber_hits == 7);

  Graph petersen = named_graph("petersen", {});
  auto r4 = enumerate_cover_ball(petersen, 0, 4);
  CHECK(r4.ball_size == 46);
  auto table = fiber_counts(petersen, 0, 4);
  CHECK(r4.fiber_hits == table.counts[4][0]);

  CHECK_THROWS_AS(enumerate_cover_ball(k4, 0, 13), error);
}

TEST_CASE("enumeration agrees with fiber counts wherever both run") {
  std::vector<Graph> graphs = {named_graph("complete", {4}),
                               named_graph("complete_bipartite", {3}),
                               named_graph("petersen", {}),
                               named_graph("circular_ladder", {24})};
  for (const Graph& g : graphs) {
    auto table = fiber_counts(g, 0, 10);
    for (int r = 0; r <= 10; ++r) {
      auto ball = enumerate_cover_ball(g, 0, r);
      CHECK(ball.ball_size == ball_volume(r, g.q));
      CHECK(ball.fiber_hits == table.counts[r][0]);
    }
  }
}

TEST_CASE("walk matrices act on eigenvectors as sphere times spherical") {
  std::vector<Graph> graphs = {named_graph("complete", {4}),
                               named_graph("complete_bipartite", {3}),
                               named_graph("petersen", {}),
                               named_graph("circular_ladder", {12})};
  for (const Graph& g : graphs) {
    auto eigen = symmetric_eigen(g);
    auto walks = nb_walk_counts(g, 15);
    for (int n = 0; n <= 15; ++n) {
      for (int k = 0; k < g.n; ++k) {
        double expected_scale =
            sphere_size_d(n, g.q) *
            spherical_function_recursive(eigen.eigenvalues[k], n, g.q);
        for (int u = 0; u < g.n; ++u) {
          double image = 0.0;
          for (int v = 0; v < g.n; ++v) {
            image += static_cast<double>(walks[n][u][v]) *
                     eigen.eigenvectors[k][v];
          }
          CHECK(std::abs(image - expected_scale * eigen.eigenvectors[k][u]) <=
                1e-6);
        }
      }
    }
  }
}
