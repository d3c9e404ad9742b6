#include "treenv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "treenv/errors.hpp"

namespace treenv {

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
  double sum = 0.0;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) sum += a[i][j] * a[i][j];
  return std::sqrt(sum);
}

void rotate(std::vector<std::vector<double>>& a,
            std::vector<std::vector<double>>& v, int p, int r) {
  double apr = a[p][r];
  if (apr == 0.0) return;
  const int n = static_cast<int>(a.size());

  double theta = (a[r][r] - a[p][p]) / (2.0 * apr);
  double t = std::copysign(1.0, theta) /
             (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  double c = 1.0 / std::sqrt(1.0 + t * t);
  double s = t * c;

  for (int k = 0; k < n; ++k) {
    double akp = a[k][p];
    double akr = a[k][r];
    a[k][p] = c * akp - s * akr;
    a[k][r] = s * akp + c * akr;
  }
  for (int k = 0; k < n; ++k) {
    double apk = a[p][k];
    double ark = a[r][k];
    a[p][k] = c * apk - s * ark;
    a[r][k] = s * apk + c * ark;
  }
  for (int k = 0; k < n; ++k) {
    double vkp = v[k][p];
    double vkr = v[k][r];
    v[k][p] = c * vkp - s * vkr;
    v[k][r] = s * vkp + c * vkr;
  }
}

}  // namespace

EigenDecomposition symmetric_eigen(const Graph& g, double eig_tol,
                                   double cluster_tol) {
  if (eig_tol <= 0.0) fail(errc::bad_params, "eig_tol must be positive");
  if (cluster_tol <= 0.0) fail(errc::bad_params, "cluster_tol must be positive");
  const int n = g.n;

  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int u = 0; u < n; ++u)
    for (int v : g.adjacency[u]) a[u][v] = 1.0;

  std::vector<std::vector<double>> vecs(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) vecs[i][i] = 1.0;

  // ||A||_F = sqrt(2m) for a 0/1 adjacency matrix.
  const double norm_a = std::sqrt(2.0 * static_cast<double>(edge_count(g)));
  const double target = 1e-14 * norm_a;

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) < target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int r = p + 1; r < n; ++r) rotate(a, vecs, p, r);
  }
  if (!converged && off_diagonal_norm(a) >= target) {
    fail(errc::no_convergence, "Jacobi did not converge within 100 sweeps");
  }

  EigenDecomposition out;
  out.q = g.q;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i][i] > a[j][j]; });

  out.eigenvalues.resize(n);
  out.eigenvectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    int col = order[k];
    out.eigenvalues[k] = a[col][col];
    for (int i = 0; i < n; ++i) out.eigenvectors[k][i] = vecs[i][col];
  }

  // Residual check ties the decomposition to the input matrix.
  for (int k = 0; k < n; ++k) {
    const auto& phi = out.eigenvectors[k];
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      double av = 0.0;
      for (int j : g.adjacency[i]) av += phi[j];
      worst = std::max(worst, std::abs(av - out.eigenvalues[k] * phi[i]));
    }
    if (worst > eig_tol) {
      fail(errc::no_convergence,
           "eigenpair residual " + std::to_string(worst) + " exceeds eig_tol");
    }
  }

  for (int k = 0; k < n;) {
    EigenCluster cluster;
    int j = k;
    while (j < n &&
           std::abs(out.eigenvalues[j] - out.eigenvalues[k]) < cluster_tol) {
      cluster.members.push_back(j);
      ++j;
    }
    cluster.multiplicity = j - k;
    double sum = 0.0;
    for (int idx : cluster.members) sum += out.eigenvalues[idx];
    cluster.alpha = sum / cluster.multiplicity;
    out.clusters.push_back(std::move(cluster));
    k = j;
  }

  // Connectedness puts q+1 on top with multiplicity 1.
  if (out.clusters.empty() || out.clusters.front().multiplicity != 1 ||
      std::abs(out.clusters.front().alpha - (g.q + 1.0)) > 1e-8) {
    fail(errc::no_convergence,
         "top eigenvalue is not the simple trivial eigenvalue q+1");
  }
  return out;
}

std::vector<Atom> atom_masses(const EigenDecomposition& eigen, int root, int n,
                              double snap_tol) {
  if (static_cast<int>(eigen.eigenvalues.size()) != n) {
    fail(errc::bad_params, "vertex count does not match the decomposition");
  }
  if (root < 0 || root >= n) {
    fail(errc::root_out_of_range, "root " + std::to_string(root) +
                                      " outside [0, " + std::to_string(n) +
                                      ")");
  }

  std::vector<Atom> atoms;
  atoms.reserve(eigen.clusters.size());
  for (const auto& cluster : eigen.clusters) {
    Atom atom;
    atom.alpha = cluster.alpha;
    atom.multiplicity = cluster.multiplicity;
    double projector_diag = 0.0;
    for (int k : cluster.members) {
      double phi = eigen.eigenvectors[k][root];
      projector_diag += phi * phi;
    }
    atom.mass = projector_diag / n;
    atom.param = alpha_to_lambda(cluster.alpha, eigen.q, snap_tol, &atom.snapped);
    atoms.push_back(atom);
  }

  // The trivial eigenvector is constant 1/sqrt(n), so the top mass is 1/n^2.
  double trivial_mass = atoms.front().mass;
  double expected = 1.0 / (static_cast<double>(n) * n);
  if (std::abs(trivial_mass - expected) > 1e-10) {
    fail(errc::no_convergence, "trivial atom mass " +
                                   std::to_string(trivial_mass) +
                                   " deviates from 1/n^2");
  }
  return atoms;
}

}  // namespace treenv
