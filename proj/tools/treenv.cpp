// Command-line frontend: graph ingestion, spectrum/diffraction reports,
// number-variance curves, liminf scans, and the desk-scale verification
// subcommands.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "treenv/covering.hpp"
#include "treenv/diffraction.hpp"
#include "treenv/errors.hpp"
#include "treenv/graph.hpp"
#include "treenv/quadrature.hpp"
#include "treenv/rational.hpp"
#include "treenv/report.hpp"
#include "treenv/spectral.hpp"
#include "treenv/spherical.hpp"
#include "treenv/variance.hpp"

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string graph_path;
  std::string name;
  std::vector<int> params;
  bool poisson = false;
  int q = 2;
  int root = 0;
  std::int64_t r_max = 10;
  std::int64_t r_min = 1;
  std::int64_t modulus = 0;
  std::int64_t residue = 0;
  double tol_eig = 1e-12;
  double tol_cluster = 1e-7;
  double tol_zero = 1e-9;
  std::int64_t b_max = 12;
  bool oracle = false;
  int jobs = 1;
  std::string out;
  std::string format;  // per-subcommand default when empty
  bool show_config = false;
};

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void add_source_options(CLI::App* cmd, RunConfig& cfg, bool allow_poisson) {
  cmd->add_option("--graph", cfg.graph_path, "graph file path");
  cmd->add_option("--name", cfg.name,
                  "named graph: complete | complete_bipartite | petersen | "
                  "circular_ladder");
  cmd->add_option("--params", cfg.params, "named graph parameters");
  cmd->add_option("--root", cfg.root, "root vertex (default 0)");
  if (allow_poisson) {
    cmd->add_flag("--poisson", cfg.poisson, "use the Poisson measure");
    cmd->add_option("--q", cfg.q, "branching number for --poisson");
  }
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tol-eig", cfg.tol_eig, "eigen residual tolerance");
  cmd->add_option("--tol-cluster", cfg.tol_cluster, "eigenvalue cluster tolerance");
  cmd->add_option("--tol-zero", cfg.tol_zero,
                  "boundary snap / zero detection tolerance");
  cmd->add_option("--jobs", cfg.jobs, "worker threads for scans");
  cmd->add_option("--out", cfg.out, "output path (default: stdout)");
  cmd->add_option("--format", cfg.format, "csv | json");
  cmd->add_flag("--show-config", cfg.show_config,
                "dump the resolved configuration to stderr");
}

treenv::Graph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_path.empty()) {
    std::ifstream in(cfg.graph_path, std::ios::binary);
    if (!in) {
      treenv::fail(treenv::errc::syntax_error,
                   "cannot open graph file: " + cfg.graph_path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return treenv::parse_graph_file(text.str());
  }
  if (!cfg.name.empty()) return treenv::named_graph(cfg.name, cfg.params);
  treenv::fail(treenv::errc::bad_params,
               "a graph source is required: --graph PATH or --name NAME");
}

treenv::DiffractionMeasure load_measure(const RunConfig& cfg) {
  if (cfg.poisson) return treenv::poisson_diffraction(cfg.q);
  return treenv::lattice_orbit_diffraction(load_graph(cfg), cfg.root,
                                           cfg.tol_eig, cfg.tol_cluster,
                                           cfg.tol_zero);
}

void emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.out.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) {
    treenv::fail(treenv::errc::bad_params, "cannot open output: " + cfg.out);
  }
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
}

void dump_config(const RunConfig& cfg, const std::string& subcommand) {
  if (!cfg.show_config) return;
  ordered_json j;
  j["subcommand"] = subcommand;
  j["graph"] = cfg.graph_path;
  j["name"] = cfg.name;
  j["params"] = cfg.params;
  j["poisson"] = cfg.poisson;
  j["q"] = cfg.q;
  j["root"] = cfg.root;
  j["rmax"] = cfg.r_max;
  j["rmin"] = cfg.r_min;
  j["mod"] = cfg.modulus;
  j["res"] = cfg.residue;
  j["tol_eig"] = cfg.tol_eig;
  j["tol_cluster"] = cfg.tol_cluster;
  j["tol_zero"] = cfg.tol_zero;
  j["bmax"] = cfg.b_max;
  j["oracle"] = cfg.oracle;
  j["jobs"] = cfg.jobs;
  j["format"] = cfg.format;
  std::cerr << j.dump(2) << "\n";
}

int cmd_spectrum(const RunConfig& cfg) {
  dump_config(cfg, "spectrum");
  treenv::Graph g = load_graph(cfg);
  auto eigen = treenv::symmetric_eigen(g, cfg.tol_eig, cfg.tol_cluster);
  auto atoms = treenv::atom_masses(eigen, cfg.root, g.n, cfg.tol_zero);
  if (cfg.format == "csv") {  // default: json
    std::string body = "eigenvalue,multiplicity,branch,value,mass\n";
    for (std::size_t i = 0; i < eigen.clusters.size(); ++i) {
      body += fmt17(eigen.clusters[i].alpha) + "," +
              std::to_string(eigen.clusters[i].multiplicity) + "," +
              treenv::branch_name(atoms[i].param.branch) + "," +
              fmt17(atoms[i].param.value) + "," + fmt17(atoms[i].mass) + "\n";
    }
    emit(cfg, body);
  } else {
    emit(cfg, treenv::spectrum_json(eigen, atoms).dump(2) + "\n");
  }
  return 0;
}

int cmd_diffraction(const RunConfig& cfg) {
  dump_config(cfg, "diffraction");
  auto m = load_measure(cfg);
  emit(cfg, treenv::measure_json(m).dump(2) + "\n");
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  dump_config(cfg, "classify");
  auto m = load_measure(cfg);
  auto c = treenv::classify(m);
  emit(cfg, treenv::report_json(m, c).dump(2) + "\n");
  return 0;
}

int cmd_nv(const RunConfig& cfg) {
  dump_config(cfg, "nv");
  auto m = load_measure(cfg);
  auto curve = treenv::nv_curve(m, static_cast<int>(cfg.r_max));

  std::vector<double> oracle;
  double max_discrepancy = 0.0;
  if (cfg.oracle) {
    if (cfg.poisson) {
      treenv::fail(treenv::errc::bad_params,
                   "--oracle needs a graph source (combinatorial oracle)");
    }
    treenv::Graph g = load_graph(cfg);
    oracle = treenv::oracle_nv(g, cfg.root, static_cast<int>(cfg.r_max));
    for (const auto& row : curve.rows) {
      double diff = std::abs(row.nv - oracle[row.r]);
      max_discrepancy =
          std::max(max_discrepancy, diff / std::max(1.0, oracle[row.r]));
    }
  }

  if (cfg.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& row : curve.rows) {
      ordered_json j;
      j["r"] = row.r;
      j["volume"] = row.volume;
      j["nv"] = row.nv;
      j["nv_star"] = row.nv_star;
      j["ratio_star"] = row.ratio_star;
      if (cfg.oracle) j["oracle_nv"] = oracle[row.r];
      rows.push_back(j);
    }
    ordered_json top;
    top["rows"] = rows;
    if (cfg.oracle) top["max_discrepancy"] = max_discrepancy;
    emit(cfg, top.dump(2) + "\n");
  } else {
    std::string body = "r,volume,nv,nv_star,ratio_star";
    if (cfg.oracle) body += ",oracle_nv";
    body += "\n";
    for (const auto& row : curve.rows) {
      body += std::to_string(row.r) + "," + fmt17(row.volume) + "," +
              fmt17(row.nv) + "," + fmt17(row.nv_star) + "," +
              fmt17(row.ratio_star);
      if (cfg.oracle) body += "," + fmt17(oracle[row.r]);
      body += "\n";
    }
    if (cfg.oracle) {
      body += "# max_discrepancy = " + fmt17(max_discrepancy) + "\n";
    }
    emit(cfg, body);
  }

  if (cfg.oracle && max_discrepancy > 1e-6) return 3;
  return 0;
}

int cmd_scan(const RunConfig& cfg) {
  dump_config(cfg, "scan");
  auto m = load_measure(cfg);
  std::optional<treenv::ResidueFilter> filter;
  if (cfg.modulus > 0) filter = treenv::ResidueFilter{cfg.modulus, cfg.residue};
  auto scan =
      treenv::liminf_scan(m, cfg.r_max, filter, cfg.r_min, cfg.jobs);

  if (cfg.format == "json") {
    emit(cfg, treenv::scan_json(scan).dump(2) + "\n");
  } else {
    std::string body = "r,ratio_star\n";
    for (const auto& rec : scan.trace) {
      body += std::to_string(rec.r) + "," + fmt17(rec.ratio) + "\n";
    }
    body += "# min_ratio = " + fmt17(scan.min_ratio) +
            ", argmin = " + std::to_string(scan.argmin) + "\n";
    emit(cfg, body);
  }
  return 0;
}

int cmd_atoms(const RunConfig& cfg) {
  dump_config(cfg, "atoms");
  auto hits = treenv::find_solutions(cfg.q, cfg.b_max);
  if (cfg.format == "json") {
    ordered_json list = ordered_json::array();
    for (const auto& h : hits) {
      list.push_back(ordered_json{
          {"q", cfg.q}, {"a", h.a}, {"b", h.b}, {"r", h.r}, {"lhs", h.lhs}});
    }
    emit(cfg, list.dump(2) + "\n");
  } else {
    std::string body = "q,a,b,r,lhs\n";
    for (const auto& h : hits) {
      body += std::to_string(cfg.q) + "," + std::to_string(h.a) + "," +
              std::to_string(h.b) + "," + std::to_string(h.r) + "," +
              fmt17(h.lhs) + "\n";
    }
    emit(cfg, body);
  }
  return 0;
}

int cmd_plancherel_check(const RunConfig& cfg) {
  dump_config(cfg, "plancherel-check");
  const int q = cfg.q;
  const treenv::TreeGeometry geo(q);
  std::string body;
  bool ok = true;

  double mass = treenv::integrate(
      [&](double t) {
        return treenv::plancherel_density(treenv::principal_param(t, q));
      },
      0.0, 0.5 * geo.tau, 1e-11);
  bool mass_ok = std::abs(mass - 1.0) <= 1e-8;
  ok = ok && mass_ok;
  body += "plancherel_mass " + fmt17(mass) + (mass_ok ? " PASS" : " FAIL");
  body += "\n";

  double edge = 2.0 * std::sqrt(static_cast<double>(q));
  double km = treenv::integrate(
      [&](double a) { return treenv::kesten_mckay_density(a, q); }, -edge, edge,
      1e-11);
  bool km_ok = std::abs(km - 1.0) <= 1e-8;
  ok = ok && km_ok;
  body += "kesten_mckay_mass " + fmt17(km) + (km_ok ? " PASS" : " FAIL");
  body += "\n";

  for (int r = 0; r <= cfg.r_max && r <= 12; ++r) {
    double integral = treenv::integrate(
        [&](double t) {
          treenv::SpectralParam p = treenv::principal_param(t, q);
          double bt = treenv::ball_transform(p, r);
          return bt * bt * treenv::plancherel_density(p);
        },
        0.0, 0.5 * geo.tau, 1e-10);
    double volume = static_cast<double>(treenv::ball_volume(r, q));
    double rel = std::abs(integral - volume) / volume;
    bool row_ok = rel <= 1e-6;
    ok = ok && row_ok;
    body += "ball_identity r=" + std::to_string(r) + " rel_err=" + fmt17(rel) +
            (row_ok ? " PASS" : " FAIL") + "\n";
  }
  emit(cfg, body);
  return ok ? 0 : 1;
}

int cmd_cover_check(const RunConfig& cfg) {
  dump_config(cfg, "cover-check");
  treenv::Graph g = load_graph(cfg);
  int r_cap = static_cast<int>(std::min<std::int64_t>(cfg.r_max, 12));
  auto table = treenv::fiber_counts(g, cfg.root, r_cap);
  std::string body;
  bool ok = true;
  for (int r = 0; r <= r_cap; ++r) {
    auto ball = treenv::enumerate_cover_ball(g, cfg.root, r);
    bool size_ok = ball.ball_size == treenv::ball_volume(r, g.q);
    bool fiber_ok = ball.fiber_hits == table.counts[r][cfg.root];
    ok = ok && size_ok && fiber_ok;
    body += "cover r=" + std::to_string(r) +
            " ball=" + std::to_string(ball.ball_size) +
            " fiber=" + std::to_string(ball.fiber_hits) +
            (size_ok && fiber_ok ? " PASS" : " FAIL") + "\n";
  }
  emit(cfg, body);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diffraction, number variance and hyperuniformity toolkit for "
               "regular trees"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue clusters with "
                                                  "spherical parameters");
  add_source_options(spectrum, cfg, false);
  add_common_options(spectrum, cfg);

  auto* diffraction =
      app.add_subcommand("diffraction", "diffraction measure as JSON");
  add_source_options(diffraction, cfg, true);
  add_common_options(diffraction, cfg);

  auto* classify = app.add_subcommand("classify", "classification report");
  add_source_options(classify, cfg, true);
  add_common_options(classify, cfg);

  auto* nv = app.add_subcommand("nv", "number-variance curve");
  add_source_options(nv, cfg, true);
  nv->add_option("--rmax", cfg.r_max, "largest radius");
  nv->add_flag("--oracle", cfg.oracle,
               "append the combinatorial oracle column");
  add_common_options(nv, cfg);

  auto* scan = app.add_subcommand("scan", "record minima of nv_star/volume");
  add_source_options(scan, cfg, true);
  scan->add_option("--rmax", cfg.r_max, "largest radius");
  scan->add_option("--rmin", cfg.r_min, "smallest radius (default 1)");
  scan->add_option("--mod", cfg.modulus, "residue filter modulus");
  scan->add_option("--res", cfg.residue, "residue class for --mod");
  add_common_options(scan, cfg);

  auto* atoms = app.add_subcommand("atoms", "sine-equation solution table");
  atoms->add_option("--q", cfg.q, "branching number");
  atoms->add_option("--bmax", cfg.b_max, "largest denominator");
  add_common_options(atoms, cfg);

  auto* plancherel =
      app.add_subcommand("plancherel-check", "density mass and ball identity");
  plancherel->add_option("--q", cfg.q, "branching number");
  plancherel->add_option("--rmax", cfg.r_max, "largest radius for the identity");
  add_common_options(plancherel, cfg);

  auto* cover = app.add_subcommand("cover-check",
                                   "fiber counts vs explicit enumeration");
  add_source_options(cover, cfg, false);
  cover->add_option("--rmax", cfg.r_max, "largest radius (capped at 12)");
  add_common_options(cover, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (diffraction->parsed()) return cmd_diffraction(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (nv->parsed()) return cmd_nv(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    if (atoms->parsed()) return cmd_atoms(cfg);
    if (plancherel->parsed()) return cmd_plancherel_check(cfg);
    if (cover->parsed()) return cmd_cover_check(cfg);
  } catch (const treenv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
