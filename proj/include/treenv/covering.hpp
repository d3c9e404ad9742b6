#ifndef TREENV_COVERING_HPP
#define TREENV_COVERING_HPP

#include <cstdint>
#include <vector>

#include "treenv/graph.hpp"

namespace treenv {

// Combinatorial ground truth for the spectral pipeline: counts in the
// universal covering tree are read off from non-backtracking walks in the
// quotient graph.

using CountMatrix = std::vector<std::vector<std::int64_t>>;

// A_0 = I, A_1 = adjacency, A_2 = A_1^2 - (q+1) I,
// A_{n+1} = A_1 A_n - q A_{n-1} for n >= 2.
// (A_n)_{v,u} counts non-backtracking walks of length n from v to u, i.e.
// covering-tree vertices at distance exactly n over u. Exact 64-bit with
// overflow detection.
std::vector<CountMatrix> nb_walk_counts(const Graph& g, int n_max);

// c_r(v) = number of tree vertices within distance r of a lift of v that
// project to the root u; c_r(v) = sum_{n <= r} (A_n)_{v,u}.
struct FiberCountTable {
  int root = 0;
  std::vector<std::vector<std::int64_t>> counts;  // counts[r][v]
};

FiberCountTable fiber_counts(const Graph& g, int root, int r_max);

// Number variance of the random lattice orbit: the orbit count in a ball
// depends only on the quotient vertex, uniformly distributed, so
// NV(r) = (1/n) sum_v c_r(v)^2 - ((1/n) sum_v c_r(v))^2.
// Includes every atom except the trivial one (the full ordinary variance).
std::vector<double> oracle_nv(const Graph& g, int root, int r_max);

// Recursion-free second oracle: explicitly enumerates all non-backtracking
// paths from the root of length <= r (each one is a covering-tree vertex).
// Guarded at r <= 12.
struct CoverBallCount {
  std::int64_t ball_size = 0;   // must equal |B_r|
  std::int64_t fiber_hits = 0;  // paths ending at the root, = c_r(root)
};

CoverBallCount enumerate_cover_ball(const Graph& g, int root, int r);

}  // namespace treenv

#endif
