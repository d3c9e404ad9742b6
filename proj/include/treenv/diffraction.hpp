#ifndef TREENV_DIFFRACTION_HPP
#define TREENV_DIFFRACTION_HPP

#include <string>
#include <vector>

#include "treenv/graph.hpp"
#include "treenv/spectral.hpp"

namespace treenv {

// A diffraction measure: finitely many atoms on the spherical parameter set
// plus an optional scalar multiple of the Plancherel density. The trivial
// atom (complementary s = 1/2) carries mass intensity^2 and is always
// present. Immutable once constructed.
struct DiffractionMeasure {
  int q = 2;
  std::vector<Atom> atoms;  // distinct canonical parameters, trivial first
  double plancherel_coefficient = 0.0;  // 1 for unit-intensity Poisson
  std::vector<std::string> notes;       // snap events collected on build
};

// Unit-intensity invariant Poisson process: trivial atom of mass 1 plus the
// full Plancherel density.
DiffractionMeasure poisson_diffraction(int q);

// Random lattice orbit of the fundamental group of a finite regular graph:
// purely atomic on the quotient adjacency spectrum, trivial mass 1/n^2.
DiffractionMeasure lattice_orbit_diffraction(const Graph& g, int root = 0,
                                             double eig_tol = 1e-12,
                                             double cluster_tol = 1e-7,
                                             double snap_tol = 1e-9);

struct Classification {
  bool ramanujan = false;
  bool stealthy = false;
  bool spectrally_hyperuniform = false;
  bool hyperfluctuating = false;
  bool has_rational_principal_atom = false;
  std::vector<std::string> notes;
};

// True when no diffraction sits on the open complementary branches and none
// on the boundary parameters 0, tau/2, and the Plancherel part vanishes.
bool is_stealthy(const DiffractionMeasure& m);

Classification classify(const DiffractionMeasure& m);

}  // namespace treenv

#endif
