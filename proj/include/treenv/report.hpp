#ifndef TREENV_REPORT_HPP
#define TREENV_REPORT_HPP

#include <json.hpp>

#include "treenv/diffraction.hpp"
#include "treenv/spectral.hpp"
#include "treenv/variance.hpp"

namespace treenv {

// JSON views of the core results. Keys are emitted in a fixed order so that
// identical inputs produce byte-identical documents.
nlohmann::ordered_json atom_json(const Atom& atom);
nlohmann::ordered_json spectrum_json(const EigenDecomposition& eigen,
                                     const std::vector<Atom>& atoms);
nlohmann::ordered_json measure_json(const DiffractionMeasure& m);
nlohmann::ordered_json classification_json(const Classification& c);
nlohmann::ordered_json report_json(const DiffractionMeasure& m,
                                   const Classification& c);
nlohmann::ordered_json scan_json(const ScanResult& scan);

}  // namespace treenv

#endif
