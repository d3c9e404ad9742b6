#include "treenv/report.hpp"

namespace treenv {

using nlohmann::ordered_json;

ordered_json atom_json(const Atom& atom) {
  ordered_json j;
  j["branch"] = branch_name(atom.param.branch);
  j["value"] = atom.param.value;
  j["alpha"] = atom.alpha;
  j["mass"] = atom.mass;
  return j;
}

ordered_json spectrum_json(const EigenDecomposition& eigen,
                           const std::vector<Atom>& atoms) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < eigen.clusters.size(); ++i) {
    ordered_json j;
    j["eigenvalue"] = eigen.clusters[i].alpha;
    j["multiplicity"] = eigen.clusters[i].multiplicity;
    j["branch"] = branch_name(atoms[i].param.branch);
    j["value"] = atoms[i].param.value;
    j["mass"] = atoms[i].mass;
    list.push_back(j);
  }
  return list;
}

ordered_json measure_json(const DiffractionMeasure& m) {
  ordered_json j;
  j["q"] = m.q;
  ordered_json atoms = ordered_json::array();
  for (const auto& atom : m.atoms) atoms.push_back(atom_json(atom));
  j["atoms"] = atoms;
  j["plancherel_coefficient"] = m.plancherel_coefficient;
  return j;
}

ordered_json classification_json(const Classification& c) {
  ordered_json j;
  j["ramanujan"] = c.ramanujan;
  j["stealthy"] = c.stealthy;
  j["spectrally_hyperuniform"] = c.spectrally_hyperuniform;
  j["hyperfluctuating"] = c.hyperfluctuating;
  j["has_rational_principal_atom"] = c.has_rational_principal_atom;
  return j;
}

ordered_json report_json(const DiffractionMeasure& m,
                         const Classification& c) {
  ordered_json j = measure_json(m);
  j["classification"] = classification_json(c);
  j["notes"] = c.notes;
  return j;
}

ordered_json scan_json(const ScanResult& scan) {
  ordered_json j;
  j["min_ratio"] = scan.min_ratio;
  j["argmin"] = scan.argmin;
  ordered_json trace = ordered_json::array();
  for (const auto& rec : scan.trace) {
    trace.push_back(ordered_json{{"r", rec.r}, {"ratio", rec.ratio}});
  }
  j["trace"] = trace;
  return j;
}

}  // namespace treenv
