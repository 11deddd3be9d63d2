/*
 * Copyright 2026 The casimir-lifshitz Developers
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// casimir: Lifshitz-theory calculator for the Casimir interaction between
// material plates. Subcommands: compute, scan, band, ingest, nernst.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/material_library.hpp"
#include "casimir/optics.hpp"
#include "casimir/sweep.hpp"
#include "casimir/thermo.hpp"

namespace {

using json = nlohmann::json;
using namespace casimir;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Plain-text key = value configuration; flags given on the command line win.
struct FileConfig {
  std::optional<double> rel_tol;
  std::optional<double> y_max_offset;
  std::optional<long> l_max_cap;
  std::optional<std::string> cache_dir;
};

FileConfig read_config(const std::string& path) {
  FileConfig fc;
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string key, eq, value;
    if (!(ss >> key)) continue;
    if (!(ss >> eq >> value) || eq != "=")
      throw DataError("config: expected key = value: " + line);
    if (key == "rel_tol") fc.rel_tol = std::stod(value);
    else if (key == "y_max_offset") fc.y_max_offset = std::stod(value);
    else if (key == "l_max_cap") fc.l_max_cap = std::stol(value);
    else if (key == "cache_dir") fc.cache_dir = value;
    else throw DataError("config: unknown key " + key);
  }
  return fc;
}

struct CommonOpts {
  std::string model, model1, model2;
  std::string config_path;
  double mu0 = 0.0;  // 0 = keep the material's own value
  double rel_tol = 0.0;
  double y_max = 0.0;
  long l_max = 0;

  lifshitz::MatsubaraConfig engine_config(double temperature_k) const {
    lifshitz::MatsubaraConfig cfg;
    cfg.temperature_k = temperature_k;
    if (!config_path.empty()) {
      const FileConfig fc = read_config(config_path);
      if (fc.rel_tol) cfg.rel_tol = *fc.rel_tol;
      if (fc.y_max_offset) cfg.y_max_offset = *fc.y_max_offset;
      if (fc.l_max_cap) cfg.l_max_cap = *fc.l_max_cap;
    }
    if (rel_tol > 0.0) cfg.rel_tol = rel_tol;
    if (y_max > 0.0) cfg.y_max_offset = y_max;
    if (l_max > 0) cfg.l_max_cap = l_max;
    return cfg;
  }

  std::pair<materials::MaterialModel, materials::MaterialModel> plates() const {
    std::string m1 = model1.empty() ? model : model1;
    std::string m2 = model2.empty() ? m1 : model2;
    if (m1.empty()) throw CLI::ValidationError("--model", "no material given");
    auto p1 = material_library::resolve(m1);
    auto p2 = material_library::resolve(m2);
    if (mu0 > 0.0) {
      p1.mu0 = mu0;
      p2.mu0 = mu0;
      p1.validate();
      p2.validate();
    }
    return {p1, p2};
  }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--model", o.model, "material for both plates");
  cmd->add_option("--model1", o.model1, "material of plate 1");
  cmd->add_option("--model2", o.model2, "material of plate 2");
  cmd->add_option("--mu0", o.mu0, "override the static permeability mu(0)");
  cmd->add_option("--config", o.config_path, "key = value configuration file");
  cmd->add_option("--rel-tol", o.rel_tol, "relative tolerance of the engine");
  cmd->add_option("--y-max", o.y_max, "dimensionless quadrature cutoff");
  cmd->add_option("--l-max", o.l_max, "Matsubara index cap");
}

struct SphereOpts {
  double radius = 0.0;
  double beta = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;

  std::optional<geometry::SpherePlate> sphere(double a) const {
    if (radius <= 0.0) return std::nullopt;
    return geometry::SpherePlate{radius, a, beta, delta1, delta2};
  }
};

void add_sphere(CLI::App* cmd, SphereOpts& o) {
  cmd->add_option("--radius", o.radius, "sphere radius (m), enables gradient");
  cmd->add_option("--beta", o.beta, "PFA correction coefficient");
  cmd->add_option("--delta1", o.delta1, "roughness dispersion, body 1 (m)");
  cmd->add_option("--delta2", o.delta2, "roughness dispersion, body 2 (m)");
}

sweep::SweepQuantity parse_quantity(const std::string& q) {
  if (q == "free_energy") return sweep::SweepQuantity::FreeEnergy;
  if (q == "pressure") return sweep::SweepQuantity::Pressure;
  if (q == "gradient") return sweep::SweepQuantity::Gradient;
  if (q == "entropy") return sweep::SweepQuantity::Entropy;
  if (q == "thermal_correction") return sweep::SweepQuantity::ThermalCorrection;
  throw CLI::ValidationError("--quantity", "unknown quantity " + q);
}

const char* quantity_units(sweep::SweepQuantity q) {
  switch (q) {
    case sweep::SweepQuantity::FreeEnergy: return "J/m^2";
    case sweep::SweepQuantity::Pressure: return "N/m^2";
    case sweep::SweepQuantity::Gradient: return "N/m";
    case sweep::SweepQuantity::Entropy: return "J/(m^2 K)";
    case sweep::SweepQuantity::ThermalCorrection: return "1";
  }
  return "";
}

std::string cache_directory(const CommonOpts& o) {
  if (!o.config_path.empty()) {
    const FileConfig fc = read_config(o.config_path);
    if (fc.cache_dir) return *fc.cache_dir;
  }
  if (const char* env = std::getenv("CASIMIR_CACHE_DIR")) return env;
  return ".";
}

// ---------------------------------------------------------------- compute

int cmd_compute(const CommonOpts& common, const SphereOpts& sphere_opts,
                double a, double T, const std::string& quantity_name,
                const std::string& convention_name) {
  if (!(a > 0.0))
    throw CLI::ValidationError("--a", "separation must be positive");
  if (T < 0.0)
    throw CLI::ValidationError("--T", "temperature must be >= 0");
  const auto quantity = parse_quantity(quantity_name);
  const auto cfg = common.engine_config(T);
  const auto [p1, p2] = common.plates();

  json out;
  out["separation_m"] = a;
  out["temperature_K"] = T;
  out["quantity"] = quantity_name;
  out["units"] = quantity_units(quantity);

  auto fill = [&](const lifshitz::CasimirResult& r) {
    out["value"] = r.value;
    out["truncation_error"] = r.truncation_error;
    out["terms_used"] = r.terms_used;
    out["converged"] = r.converged;
    if (!r.converged)
      throw NumericError("not converged within l_max_cap; " + out.dump());
  };

  switch (quantity) {
    case sweep::SweepQuantity::FreeEnergy:
      fill(T > 0.0 ? lifshitz::free_energy(a, T, p1, p2, cfg)
                   : lifshitz::energy_zero_t(a, p1, p2, cfg));
      break;
    case sweep::SweepQuantity::Pressure:
      fill(T > 0.0 ? lifshitz::pressure(a, T, p1, p2, cfg)
                   : lifshitz::force_zero_t(a, p1, p2, cfg));
      break;
    case sweep::SweepQuantity::Gradient: {
      auto sp = sphere_opts.sphere(a);
      if (!sp)
        throw CLI::ValidationError("--radius", "gradient needs a sphere radius");
      const auto r = T > 0.0 ? lifshitz::pressure(a, T, p1, p2, cfg)
                             : lifshitz::force_zero_t(a, p1, p2, cfg);
      fill(r);
      auto g = geometry::pfa_gradient(*sp, r.value);
      double v = geometry::beta_corrected_gradient(*sp, g.value);
      auto rough = geometry::roughness_corrected_gradient(*sp, v);
      out["value"] = rough.value;
      for (const auto& w : g.warnings) out["warnings"].push_back(w);
      break;
    }
    case sweep::SweepQuantity::Entropy: {
      if (!(T > 0.0))
        throw CLI::ValidationError("--T", "entropy needs T > 0");
      const auto s = thermo::entropy(a, T, p1, p2, cfg);
      out["value"] = s.entropy_J_per_m2K;
      out["fd_step_K"] = s.fd_step_k;
      out["fd_error_estimate"] = s.fd_error_estimate;
      out["reliable"] = s.reliable;
      break;
    }
    case sweep::SweepQuantity::ThermalCorrection: {
      if (!(T > 0.0))
        throw CLI::ValidationError("--T", "thermal correction needs T > 0");
      const auto conv = convention_name == "at_zero"
                            ? thermo::CorrectionConvention::AtZero
                            : thermo::CorrectionConvention::AtT;
      out["value"] = thermo::thermal_correction(a, T, p1, p2, cfg, conv);
      out["convention"] = convention_name;
      break;
    }
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// ------------------------------------------------------------- scan/band

void write_plot_script(const std::string& csv_path, const std::string& xcol,
                       const std::string& ycol) {
  const std::string path = csv_path + ".gnuplot";
  std::ofstream out(path);
  out << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set logscale x\n"
      << "plot '" << csv_path << "' using 1:2 with linespoints title '" << ycol
      << " vs " << xcol << "'\n";
}

int emit_csv(const std::string& text, const std::string& output,
             bool plot_script, const std::string& xcol,
             const std::string& ycol) {
  if (output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(output);
  if (!out) throw DataError("cannot write " + output);
  out << text;
  if (plot_script) write_plot_script(output, xcol, ycol);
  return kExitOk;
}

sweep::SweepSpec make_spec(const CommonOpts& common, const SphereOpts& sph,
                           const std::string& variable, double vmin,
                           double vmax, int count, const std::string& spacing,
                           double fixed_a, double fixed_T,
                           const std::string& quantity_name,
                           const std::string& convention_name) {
  sweep::SweepSpec spec;
  if (variable == "separation")
    spec.variable = sweep::SweepVariable::Separation;
  else if (variable == "temperature")
    spec.variable = sweep::SweepVariable::Temperature;
  else
    throw CLI::ValidationError("--variable", "separation or temperature");
  spec.min = vmin;
  spec.max = vmax;
  spec.count = count;
  spec.spacing =
      spacing == "log" ? sweep::Spacing::Log : sweep::Spacing::Linear;
  spec.quantity = parse_quantity(quantity_name);
  spec.fixed_separation_m = fixed_a;
  spec.fixed_temperature_k = fixed_T;
  spec.cfg = common.engine_config(fixed_T);
  spec.convention = convention_name == "at_zero"
                        ? thermo::CorrectionConvention::AtZero
                        : thermo::CorrectionConvention::AtT;
  auto [p1, p2] = common.plates();
  spec.plate1 = std::move(p1);
  spec.plate2 = std::move(p2);
  spec.sphere = sph.sphere(fixed_a);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("scan", e.what());
  }
  return spec;
}

int cmd_scan(const sweep::SweepSpec& spec, const std::string& output,
             bool plot_script) {
  const auto rows = sweep::run_sweep(spec);
  std::ostringstream csv;
  const char* xcol = sweep::abscissa_column(spec.variable);
  const char* ycol = sweep::quantity_column(spec.quantity);
  csv << xcol << "," << ycol << ",error_estimate,terms_used,error\n";
  bool any_error = false;
  for (const auto& r : rows) {
    csv << fmt(r.abscissa) << "," << fmt(r.value) << ","
        << fmt(r.error_estimate) << "," << r.terms_used << "," << r.error
        << "\n";
    any_error = any_error || !r.error.empty();
  }
  const int rc = emit_csv(csv.str(), output, plot_script, xcol, ycol);
  if (any_error) throw NumericError("one or more sweep rows failed");
  return rc;
}

int cmd_band(const sweep::SweepSpec& spec, const std::string& parameter,
             double pmin, double pmax, int pcount, const std::string& output,
             bool plot_script) {
  sweep::BandParameter par;
  if (parameter == "omega_p")
    par = sweep::BandParameter::OmegaP;
  else if (parameter == "gamma")
    par = sweep::BandParameter::Gamma;
  else
    throw CLI::ValidationError("--parameter", "omega_p or gamma");
  const auto rows = sweep::run_band(spec, par, pmin, pmax, pcount);
  std::ostringstream csv;
  const char* xcol = sweep::abscissa_column(spec.variable);
  const std::string ycol = sweep::quantity_column(spec.quantity);
  csv << xcol << "," << ycol << "_low," << ycol << "_high,error\n";
  bool any_error = false;
  for (const auto& r : rows) {
    csv << fmt(r.abscissa) << "," << fmt(r.low) << "," << fmt(r.high) << ","
        << r.error << "\n";
    any_error = any_error || !r.error.empty();
  }
  const int rc = emit_csv(csv.str(), output, plot_script, xcol, ycol);
  if (any_error) throw NumericError("one or more band rows failed");
  return rc;
}

// ---------------------------------------------------------------- ingest

int cmd_ingest(const CommonOpts& common, const std::string& input,
               const std::string& mode_name, double omega_p, double gamma,
               double T, long l_max, std::string output) {
  optics::ExtrapolationSpec ext;
  if (mode_name == "plasma")
    ext.mode = optics::ExtrapolationSpec::Mode::Plasma;
  else if (mode_name == "drude")
    ext.mode = optics::ExtrapolationSpec::Mode::Drude;
  else
    throw CLI::ValidationError("--mode", "drude or plasma");
  ext.omega_p_ev = omega_p;
  ext.gamma_ev = gamma;
  try {
    ext.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("ingest", e.what());
  }
  optics::OpticalDataTable table;
  try {
    table = optics::load_table_file(input);
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
  const auto digest = optics::ingestion_digest(table, ext, T, l_max);
  char digest_hex[24];
  std::snprintf(digest_hex, sizeof digest_hex, "%016llx",
                static_cast<unsigned long long>(digest));
  if (output.empty())
    output = cache_directory(common) + "/" + digest_hex + ".epscache";
  optics::write_cache(output, table, ext, T, l_max);

  json out;
  out["rows"] = table.omega_ev.size();
  out["digest"] = digest_hex;
  out["cache"] = output;
  out["temperature_K"] = T;
  out["l_max"] = l_max;
  out["eps_at_xi1"] =
      optics::kk_to_imag_axis(table, ext, lifshitz::matsubara_frequency(1, T));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- nernst

int cmd_nernst(const CommonOpts& common, double a, double t_max, double t_min,
               int points) {
  if (!(a > 0.0))
    throw CLI::ValidationError("--a", "separation must be positive");
  const auto cfg = common.engine_config(t_max);
  const auto [p1, p2] = common.plates();
  const auto grid = thermo::log_grid_descending(t_max, t_min, points);
  const auto rep = thermo::nernst_scan(a, p1, p2, grid, cfg);

  json out;
  out["separation_m"] = a;
  out["limit_estimate_J_per_m2K"] = rep.limit_estimate;
  out["fitted_exponent"] = rep.fitted_exponent;
  out["threshold_J_per_m2K"] = rep.threshold;
  switch (rep.verdict) {
    case thermo::NernstVerdict::Satisfied: out["verdict"] = "satisfied"; break;
    case thermo::NernstVerdict::Violated: out["verdict"] = "violated"; break;
    case thermo::NernstVerdict::Inconclusive:
      out["verdict"] = "inconclusive";
      break;
  }
  for (const auto& s : rep.samples) {
    out["samples"].push_back({{"temperature_K", s.temperature_k},
                              {"entropy_J_per_m2K", s.entropy_J_per_m2K},
                              {"fd_step_K", s.fd_step_k},
                              {"fd_error_estimate", s.fd_error_estimate},
                              {"reliable", s.reliable}});
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir free energy, pressure, force gradients, thermal "
               "corrections, and entropy between material plates via the "
               "Lifshitz theory"};
  app.require_subcommand(1);

  CommonOpts common;
  SphereOpts sphere;

  // compute
  auto* compute = app.add_subcommand("compute", "single-point computation");
  double a = 0.0, T = 300.0;
  std::string quantity = "pressure", convention = "at_T";
  add_common(compute, common);
  add_sphere(compute, sphere);
  compute->add_option("--a", a, "separation (m)")->required();
  compute->add_option("--T", T, "temperature (K); 0 selects the T = 0 limit");
  compute->add_option("--quantity", quantity,
                      "free_energy|pressure|gradient|entropy|thermal_correction");
  compute->add_option("--convention", convention, "at_T|at_zero");

  // scan
  auto* scan = app.add_subcommand("scan", "parameter sweep, CSV output");
  std::string variable = "separation", spacing = "linear", output;
  double vmin = 0.0, vmax = 0.0, fixed_a = 1e-6, fixed_T = 300.0;
  int count = 0;
  bool plot_script = false;
  add_common(scan, common);
  add_sphere(scan, sphere);
  scan->add_option("--variable", variable, "separation|temperature");
  scan->add_option("--min", vmin, "range start")->required();
  scan->add_option("--max", vmax, "range end")->required();
  scan->add_option("--count", count, "grid points")->required();
  scan->add_option("--spacing", spacing, "linear|log");
  scan->add_option("--a", fixed_a, "fixed separation (m)");
  scan->add_option("--T", fixed_T, "fixed temperature (K)");
  scan->add_option("--quantity", quantity, "quantity to sweep");
  scan->add_option("--convention", convention, "at_T|at_zero");
  scan->add_option("--output", output, "CSV file (default stdout)");
  scan->add_flag("--plot", plot_script, "write a gnuplot script next to the CSV");

  // band
  auto* band = app.add_subcommand("band", "theory band over a parameter");
  std::string parameter = "omega_p";
  double pmin = 0.0, pmax = 0.0;
  int pcount = 0;
  add_common(band, common);
  add_sphere(band, sphere);
  band->add_option("--variable", variable, "separation|temperature");
  band->add_option("--min", vmin, "range start")->required();
  band->add_option("--max", vmax, "range end")->required();
  band->add_option("--count", count, "grid points")->required();
  band->add_option("--spacing", spacing, "linear|log");
  band->add_option("--a", fixed_a, "fixed separation (m)");
  band->add_option("--T", fixed_T, "fixed temperature (K)");
  band->add_option("--quantity", quantity, "quantity to sweep");
  band->add_option("--parameter", parameter, "omega_p|gamma");
  band->add_option("--param-min", pmin, "parameter interval start")->required();
  band->add_option("--param-max", pmax, "parameter interval end")->required();
  band->add_option("--param-count", pcount, "parameter grid points")->required();
  band->add_option("--output", output, "CSV file (default stdout)");
  band->add_flag("--plot", plot_script, "write a gnuplot script next to the CSV");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "optical data -> eps(i xi) cache");
  std::string input, mode = "drude", cache_out;
  double omega_p = 0.0, gamma = 0.0, ingest_T = 300.0;
  long l_max_index = 200;
  add_common(ingest, common);
  ingest->add_option("--input", input, "optical data file")->required();
  ingest->add_option("--mode", mode, "drude|plasma extrapolation");
  ingest->add_option("--omega-p", omega_p, "extrapolation omega_p (eV)")
      ->required();
  ingest->add_option("--gamma", gamma, "extrapolation gamma (eV, drude mode)");
  ingest->add_option("--T", ingest_T, "temperature of the Matsubara grid (K)");
  ingest->add_option("--l-max-index", l_max_index, "number of cached indices");
  ingest->add_option("--output", cache_out, "cache path (default: cache dir)");

  // nernst
  auto* nernst = app.add_subcommand("nernst", "low-temperature entropy scan");
  double nernst_a = 0.0, t_max = 30.0, t_min = 0.3;
  int points = 8;
  add_common(nernst, common);
  nernst->add_option("--a", nernst_a, "separation (m)")->required();
  nernst->add_option("--t-max", t_max, "highest temperature (K)");
  nernst->add_option("--t-min", t_min, "lowest temperature (K)");
  nernst->add_option("--points", points, "grid points (>= 6)");

  try {
    app.parse(argc, argv);
    if (compute->parsed())
      return cmd_compute(common, sphere, a, T, quantity, convention);
    if (scan->parsed())
      return cmd_scan(make_spec(common, sphere, variable, vmin, vmax, count,
                                spacing, fixed_a, fixed_T, quantity,
                                convention),
                      output, plot_script);
    if (band->parsed())
      return cmd_band(make_spec(common, sphere, variable, vmin, vmax, count,
                                spacing, fixed_a, fixed_T, quantity,
                                convention),
                      parameter, pmin, pmax, pcount, output, plot_script);
    if (ingest->parsed())
      return cmd_ingest(common, input, mode, omega_p, gamma, ingest_T,
                        l_max_index, cache_out);
    if (nernst->parsed())
      return cmd_nernst(common, nernst_a, t_max, t_min, points);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
