#ifndef TREENV_SPECTRAL_HPP
#define TREENV_SPECTRAL_HPP

#include <vector>

#include "treenv/graph.hpp"
#include "treenv/spectral_param.hpp"

namespace treenv {

struct EigenCluster {
  double alpha = 0.0;        // representative eigenvalue (cluster mean)
  int multiplicity = 0;
  std::vector<int> members;  // indices into eigenvalues/eigenvectors
};

// Full decomposition of the dense symmetric 0/1 adjacency matrix, sorted by
// descending eigenvalue, eigenvectors orthonormal and aligned.
struct EigenDecomposition {
  int q = 0;  // branching number of the source graph
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<EigenCluster> clusters;
};

// Cyclic Jacobi rotations; converged when the off-diagonal Frobenius norm
// drops below 1e-14 * ||A||_F, capped at 100 sweeps. Eigenvalue clusters are
// grouped with absolute tolerance cluster_tol.
EigenDecomposition symmetric_eigen(const Graph& g, double eig_tol = 1e-12,
                                   double cluster_tol = 1e-7);

struct Atom {
  SpectralParam param;
  double mass = 0.0;
  double alpha = 0.0;
  int multiplicity = 0;
  bool snapped = false;  // parameter snapped to a branch boundary
};

// One atom per eigenvalue cluster: mass = (1/n) sum over the cluster of
// phi_k(root)^2, i.e. the root diagonal entry of the spectral projector
// divided by n. The trivial cluster (alpha = q+1) always carries mass 1/n^2.
std::vector<Atom> atom_masses(const EigenDecomposition& eigen, int root, int n,
                              double snap_tol = 1e-9);

}  // namespace treenv

#endif
