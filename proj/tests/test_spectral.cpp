#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "treenv/errors.hpp"
#include "treenv/graph.hpp"
#include "treenv/spectral.hpp"
#include "treenv/spherical.hpp"

using namespace treenv;

namespace {

// Multiset view of a decomposition: representative -> multiplicity.
std::map<int, int> rounded_spectrum(const EigenDecomposition& e) {
  std::map<int, int> out;
  for (const auto& c : e.clusters) {
    out[static_cast<int>(std::lround(c.alpha))] += c.multiplicity;
  }
  return out;
}

}  // namespace

TEST_CASE("spectra of the reference graphs") {
  auto k4 = symmetric_eigen(named_graph("complete", {4}));
  CHECK(rounded_spectrum(k4) == std::map<int, int>{{3, 1}, {-1, 3}});
  for (const auto& c : k4.clusters) {
    double target = (c.multiplicity == 1) ? 3.0 : -1.0;
    for (int k : c.members) {
      CHECK(std::abs(k4.eigenvalues[k] - target) < 1e-10);
    }
  }

  auto petersen = symmetric_eigen(named_graph("petersen", {}));
  CHECK(rounded_spectrum(petersen) ==
        std::map<int, int>{{3, 1}, {1, 5}, {-2, 4}});

  auto b3 = symmetric_eigen(named_graph("complete_bipartite", {3}));
  CHECK(rounded_spectrum(b3) == std::map<int, int>{{3, 1}, {0, 4}, {-3, 1}});
}

TEST_CASE("circular ladder spectrum against the product closed form") {
  // C_n x K_2 eigenvalues are 2 cos(2 pi k / n) + s for k in [0, n), s = +-1.
  const int n = 24;
  auto eigen = symmetric_eigen(named_graph("circular_ladder", {n}));
  std::vector<double> expected;
  for (int k = 0; k < n; ++k) {
    for (int s : {1, -1}) {
      expected.push_back(2.0 * std::cos(2.0 * M_PI * k / n) + s);
    }
  }
  std::sort(expected.rbegin(), expected.rend());
  REQUIRE(eigen.eigenvalues.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(eigen.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-11));
  }
}

TEST_CASE("eigenvector quality") {
  for (const char* name : {"petersen", "circular_ladder"}) {
    Graph g = (std::string(name) == "petersen")
                  ? named_graph("petersen", {})
                  : named_graph("circular_ladder", {24});
    auto eigen = symmetric_eigen(g);
    const int n = g.n;

    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double dot = 0.0;
        for (int v = 0; v < n; ++v) {
          dot += eigen.eigenvectors[i][v] * eigen.eigenvectors[j][v];
        }
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-10);
      }
    }

    double trace = 0.0, trace_sq = 0.0;
    for (double a : eigen.eigenvalues) {
      trace += a;
      trace_sq += a * a;
    }
    CHECK(std::abs(trace) <= 1e-8);
    CHECK(trace_sq == doctest::Approx(n * (g.q + 1.0)).epsilon(1e-8));
  }
}

TEST_CASE("alpha to lambda round trips") {
  std::mt19937_64 rng(20240811);
  for (int q : {2, 3, 4, 9}) {
    std::uniform_real_distribution<double> dist(-(q + 1.0), q + 1.0);
    for (int i = 0; i < 1000; ++i) {
      double alpha = dist(rng);
      double back = lambda_to_alpha(alpha_to_lambda(alpha, q));
      CHECK(std::abs(back - alpha) <= 1e-12);
    }
  }
}

TEST_CASE("alpha to lambda branch placement") {
  TreeGeometry geo2(2);
  SpectralParam zero = alpha_to_lambda(0.0, 2);
  CHECK(zero.branch == Branch::principal);
  CHECK(zero.value == doctest::Approx(0.25 * geo2.tau).epsilon(1e-14));

  SpectralParam trivial = alpha_to_lambda(3.0, 2);
  CHECK(trivial.branch == Branch::complementary);
  CHECK(trivial.value == 0.5);

  SpectralParam sign = alpha_to_lambda(-3.0, 2);
  CHECK(sign.branch == Branch::signed_complementary);
  CHECK(sign.value == 0.5);

  SpectralParam k4 = alpha_to_lambda(-1.0, 2);
  CHECK(k4.branch == Branch::principal);
  CHECK(2.0 * std::sqrt(2.0) * std::cos(std::log(2.0) * k4.value) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(k4.value == doctest::Approx(2.787467).epsilon(1e-4));

  CHECK(lambda_to_alpha(trivial_param(2)) == doctest::Approx(3.0));
  CHECK(lambda_to_alpha(sign_param(2)) == doctest::Approx(-3.0));
  CHECK(lambda_to_alpha(principal_param(0.25 * TreeGeometry(3).tau, 3)) ==
        doctest::Approx(0.0).epsilon(1e-14));

  CHECK_THROWS_AS(alpha_to_lambda(3.5, 2), error);
}

TEST_CASE("boundary snapping") {
  double edge = 2.0 * std::sqrt(2.0);
  bool snapped = false;

  SpectralParam on_edge = alpha_to_lambda(edge + 5e-10, 2, 1e-9, &snapped);
  CHECK(on_edge.branch == Branch::complementary);
  CHECK(on_edge.value == 0.0);
  CHECK(snapped);

  SpectralParam neg_edge = alpha_to_lambda(-edge - 5e-10, 2, 1e-9, &snapped);
  CHECK(neg_edge.branch == Branch::signed_complementary);
  CHECK(neg_edge.value == 0.0);
  CHECK(snapped);

  // An exact boundary value is canonicalized without reporting a snap.
  SpectralParam exact = alpha_to_lambda(3.0, 2, 1e-9, &snapped);
  CHECK(exact.value == 0.5);
  CHECK(!snapped);

  SpectralParam near_trivial = alpha_to_lambda(3.0 - 2e-10, 2, 1e-9, &snapped);
  CHECK(near_trivial.value == 0.5);
  CHECK(snapped);

  // Just outside the tolerance: lands on the open branch.
  SpectralParam inside = alpha_to_lambda(edge - 1e-6, 2, 1e-9, &snapped);
  CHECK(inside.branch == Branch::principal);
  CHECK(!snapped);
}

TEST_CASE("atom masses for the reference graphs") {
  struct Case {
    const char* name;
    std::vector<int> params;
    std::map<int, double> expected;  // rounded alpha -> mass
  };
  const std::vector<Case> cases = {
      {"complete", {4}, {{3, 1.0 / 16}, {-1, 3.0 / 16}}},
      {"petersen", {}, {{3, 0.01}, {1, 0.05}, {-2, 0.04}}},
      {"complete_bipartite", {3}, {{3, 1.0 / 36}, {0, 4.0 / 36}, {-3, 1.0 / 36}}},
  };
  for (const auto& c : cases) {
    Graph g = named_graph(c.name, c.params);
    auto eigen = symmetric_eigen(g);
    auto atoms = atom_masses(eigen, 0, g.n);
    REQUIRE(atoms.size() == c.expected.size());
    double total = 0.0;
    for (const auto& atom : atoms) {
      int key = static_cast<int>(std::lround(atom.alpha));
      REQUIRE(c.expected.count(key) == 1);
      CHECK(atom.mass == doctest::Approx(c.expected.at(key)).epsilon(1e-10));
      total += atom.mass;
    }
    CHECK(total == doctest::Approx(1.0 / g.n).epsilon(1e-10));
  }
}

TEST_CASE("atom masses are root independent on vertex-transitive graphs") {
  std::vector<Graph> graphs = {
      named_graph("complete", {5}), named_graph("complete_bipartite", {4}),
      named_graph("petersen", {}), named_graph("circular_ladder", {8})};
  for (const Graph& g : graphs) {
    auto eigen = symmetric_eigen(g);
    auto base = atom_masses(eigen, 0, g.n);
    for (int root : {1, g.n / 2, g.n - 1}) {
      auto other = atom_masses(eigen, root, g.n);
      REQUIRE(other.size() == base.size());
      for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(other[i].mass == doctest::Approx(base[i].mass).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("masses sum to 1/n with a random root") {
  std::mt19937_64 rng(7);
  for (const char* name : {"complete", "circular_ladder"}) {
    Graph g = (std::string(name) == "complete")
                  ? named_graph("complete", {7})
                  : named_graph("circular_ladder", {11});
    auto eigen = symmetric_eigen(g);
    int root = static_cast<int>(rng() % g.n);
    auto atoms = atom_masses(eigen, root, g.n);
    double total = 0.0;
    for (const auto& a : atoms) total += a.mass;
    CHECK(total == doctest::Approx(1.0 / g.n).epsilon(1e-10));
    CHECK(atoms.front().mass ==
          doctest::Approx(1.0 / (g.n * static_cast<double>(g.n)))
              .epsilon(1e-10));
  }
}

TEST_CASE("bipartite graphs carry the sign parameter") {
  for (int k : {3, 4, 6}) {
    Graph g = named_graph("complete_bipartite", {k});
    auto atoms = atom_masses(symmetric_eigen(g), 0, g.n);
    bool has_sign = false;
    for (const auto& a : atoms) {
      if (a.param.branch == Branch::signed_complementary && a.param.value == 0.5)
        has_sign = true;
    }
    CHECK(has_sign);
  }
  for (const char* name : {"petersen", "complete"}) {
    Graph g = (std::string(name) == "petersen") ? named_graph("petersen", {})
                                                : named_graph("complete", {5});
    auto atoms = atom_masses(symmetric_eigen(g), 0, g.n);
    for (const auto& a : atoms) {
      CHECK(!(a.param.branch == Branch::signed_complementary &&
              a.param.value == 0.5));
    }
  }
}

TEST_CASE("root out of range") {
  Graph g = named_graph("complete", {4});
  auto eigen = symmetric_eigen(g);
  CHECK_THROWS_AS(atom_masses(eigen, 4, g.n), error);
  CHECK_THROWS_AS(atom_masses(eigen, -1, g.n), error);
}

TEST_CASE("cluster structure invariants") {
  Graph g = named_graph("circular_ladder", {24});
  double cluster_tol = 1e-7;
  auto eigen = symmetric_eigen(g, 1e-12, cluster_tol);
  int covered = 0;
  for (std::size_t i = 0; i < eigen.clusters.size(); ++i) {
    const auto& c = eigen.clusters[i];
    covered += c.multiplicity;
    for (int k : c.members) {
      CHECK(std::abs(eigen.eigenvalues[k] - c.alpha) < cluster_tol);
    }
    if (i + 1 < eigen.clusters.size()) {
      CHECK(c.alpha - eigen.clusters[i + 1].alpha >= cluster_tol);
    }
  }
  CHECK(covered == g.n);
}
