#include "treenv/diffraction.hpp"

#include <cmath>
#include <cstdio>

#include "treenv/errors.hpp"
#include "treenv/rational.hpp"
#include "treenv/spherical.hpp"

namespace treenv {

namespace {

std::string short_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

DiffractionMeasure poisson_diffraction(int q) {
  if (q < 2) fail(errc::bad_params, "branching number q must be >= 2");
  DiffractionMeasure m;
  m.q = q;
  Atom trivial;
  trivial.param = trivial_param(q);
  trivial.mass = 1.0;  // intensity^2
  trivial.alpha = q + 1.0;
  trivial.multiplicity = 1;
  m.atoms.push_back(trivial);
  m.plancherel_coefficient = 1.0;
  return m;
}

DiffractionMeasure lattice_orbit_diffraction(const Graph& g, int root,
                                             double eig_tol,
                                             double cluster_tol,
                                             double snap_tol) {
  auto eigen = symmetric_eigen(g, eig_tol, cluster_tol);
  DiffractionMeasure m;
  m.q = g.q;
  m.atoms = atom_masses(eigen, root, g.n, snap_tol);
  m.plancherel_coefficient = 0.0;
  for (const auto& atom : m.atoms) {
    if (atom.snapped) {
      m.notes.push_back("eigenvalue " + short_float(atom.alpha) +
                        " snapped to branch boundary " +
                        branch_name(atom.param.branch) + "(" +
                        short_float(atom.param.value) + ")");
    }
  }
  return m;
}

bool is_stealthy(const DiffractionMeasure& m) {
  if (m.plancherel_coefficient > 0.0) return false;
  for (const auto& atom : m.atoms) {
    if (atom.param.branch == Branch::principal) continue;
    if (atom.param.value < 0.5) return false;  // open branch or boundary
  }
  return true;
}

Classification classify(const DiffractionMeasure& m) {
  Classification result;
  result.notes = m.notes;

  const TreeGeometry geo(m.q);
  bool open_complementary = false;
  bool boundary = false;
  bool sign_atom = false;

  for (const auto& atom : m.atoms) {
    if (atom.param.branch == Branch::principal) continue;
    double s = atom.param.value;
    if (s == 0.0) boundary = true;
    else if (s < 0.5) open_complementary = true;
    else if (atom.param.branch == Branch::signed_complementary) sign_atom = true;
  }

  result.ramanujan = !open_complementary;
  if (m.plancherel_coefficient > 0.0) {
    // The Plancherel density has exactly Poissonian cubic decay at the
    // endpoints, so the process is neither stealthy nor sub-Poissonian.
    result.stealthy = false;
    result.spectrally_hyperuniform = false;
    result.notes.push_back(
        "Plancherel component present: endpoint decay is exactly cubic");
  } else {
    result.stealthy = result.ramanujan && !boundary;
    result.spectrally_hyperuniform = result.stealthy;
  }
  result.hyperfluctuating = open_complementary || boundary;

  if (sign_atom && result.stealthy) {
    result.notes.push_back(
        "sign atom tau/2 + i/2 present (bipartite); stealth unaffected");
  }

  for (const auto& atom : m.atoms) {
    if (atom.param.branch != Branch::principal) continue;
    // Probe t / (tau/2) for rationality; a reconstruction only counts if it
    // reproduces the eigenvalue to 1e-10.
    double y = atom.param.value / (0.5 * geo.tau);
    auto rec = reconstruct_rational(y, 10000, 1e-12);
    if (!rec || rec->den < 2 || rec->p <= 0) continue;
    double alpha_check = 2.0 * std::sqrt(static_cast<double>(m.q)) *
                         std::cos(M_PI * static_cast<double>(rec->p) /
                                  static_cast<double>(rec->den));
    if (std::abs(alpha_check - atom.alpha) > 1e-10) continue;

    result.has_rational_principal_atom = true;
    RationalAngle angle(rec->p, rec->den);
    std::string label = "principal atom at (" + std::to_string(rec->p) + "/" +
                        std::to_string(rec->den) + ") tau/2";
    if (lambda_rat_member(m.q, angle)) {
      result.notes.push_back(label + ": rational spectrum member");
    } else {
      result.notes.push_back(label +
                             ": exceptional rational (periodic minimum vanishes)");
    }
  }
  return result;
}

}  // namespace treenv
