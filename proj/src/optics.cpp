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

#include "casimir/optics.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir::optics {

namespace con = casimir::constants;

void OpticalDataTable::validate() const {
  if (omega_ev.size() != im_eps.size())
    throw std::invalid_argument("optical table: column length mismatch");
  if (omega_ev.size() < 20)
    throw std::invalid_argument("optical table: need at least 20 rows");
  if (!(omega_ev.front() > 0.0))
    throw std::invalid_argument("optical table: frequencies must be positive");
  for (std::size_t i = 0; i + 1 < omega_ev.size(); ++i)
    if (!(omega_ev[i] < omega_ev[i + 1]))
      throw std::invalid_argument(
          "optical table: frequencies must be strictly increasing");
  for (double v : im_eps)
    if (v < 0.0)
      throw std::invalid_argument("optical table: Im eps must be >= 0");
  if (omega_max() / omega_min() < 100.0)
    throw std::invalid_argument("optical table: must span >= 2 decades");
}

void ExtrapolationSpec::validate() const {
  if (!(omega_p_ev > 0.0))
    throw std::invalid_argument("extrapolation: omega_p must be positive");
  if (mode == Mode::Drude && !(gamma_ev > 0.0))
    throw std::invalid_argument("extrapolation: Drude mode needs gamma > 0");
}

namespace {

// Int_0^w domega / ((omega^2+g^2)(omega^2+x^2)) in closed form.
double drude_kernel_integral(double w, double g, double x) {
  if (std::abs(x - g) < 1e-9 * g) x = g * (1.0 + 1e-9);
  const double pf = 1.0 / (x * x - g * g);
  return pf * (std::atan(w / g) / g - std::atan(w / x) / x);
}

// Trapezoid in log omega of omega Im eps / (omega^2 + xi^2).
double table_integral(const OpticalDataTable& t, double xi) {
  double acc = 0.0;
  auto h = [&](std::size_t i) {
    const double w = t.omega_ev[i];
    return w * w * t.im_eps[i] / (w * w + xi * xi);
  };
  for (std::size_t i = 0; i + 1 < t.omega_ev.size(); ++i) {
    const double dt = std::log(t.omega_ev[i + 1] / t.omega_ev[i]);
    acc += 0.5 * dt * (h(i) + h(i + 1));
  }
  return acc;
}

// Tail above omega_max assuming Im eps = A / omega^3.
double high_tail(const OpticalDataTable& t, double xi) {
  const double wm = t.omega_max();
  const double A = t.im_eps.back() * wm * wm * wm;
  if (A == 0.0) return 0.0;
  // Int_wm^inf domega / (omega^2 (omega^2 + xi^2))
  const double inner =
      (1.0 / wm - (con::pi / 2.0 - std::atan(wm / xi)) / xi) / (xi * xi);
  return A * inner;
}

}  // namespace

double kk_to_imag_axis(const OpticalDataTable& table,
                       const ExtrapolationSpec& ext, double xi_ev) {
  table.validate();
  ext.validate();
  if (!(xi_ev >= 1e-6))
    throw std::domain_error(
        "kk_to_imag_axis: xi below the 1e-6 eV resolution floor; the l = 0 "
        "behavior is fixed by the extrapolation tag");
  const double core = table_integral(table, xi_ev) + high_tail(table, xi_ev);
  if (ext.mode == ExtrapolationSpec::Mode::Drude) {
    const double low = ext.omega_p_ev * ext.omega_p_ev * ext.gamma_ev *
                       drude_kernel_integral(table.omega_min(), ext.gamma_ev,
                                             xi_ev);
    return 1.0 + 2.0 / con::pi * (low + core);
  }
  return 1.0 + ext.omega_p_ev * ext.omega_p_ev / (xi_ev * xi_ev) +
         2.0 / con::pi * core;
}

materials::MaterialModel build_material(const OpticalDataTable& table,
                                        const ExtrapolationSpec& ext,
                                        double temperature_k, long l_max) {
  if (!(temperature_k > 0.0)) throw std::domain_error("T must be positive");
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  materials::TabulatedEps tab;
  tab.extrapolation = ext.mode == ExtrapolationSpec::Mode::Drude
                          ? materials::TabulatedEps::Extrapolation::Drude
                          : materials::TabulatedEps::Extrapolation::Plasma;
  tab.omega_p_ev = ext.omega_p_ev;
  tab.gamma_ev = ext.gamma_ev;
  tab.xi_ev.reserve(l_max);
  tab.eps.reserve(l_max);
  for (long l = 1; l <= l_max; ++l) {
    const double xi = lifshitz::matsubara_frequency(l, temperature_k);
    tab.xi_ev.push_back(xi);
    tab.eps.push_back(kk_to_imag_axis(table, ext, xi));
  }
  return materials::MaterialModel::tabulated(std::move(tab));
}

OpticalDataTable load_table(std::istream& in) {
  OpticalDataTable t;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<double> cols;
    double v;
    while (ss >> v) cols.push_back(v);
    if (!ss.eof()) {
      throw std::invalid_argument("optical table line " +
                                  std::to_string(lineno) + ": not numeric");
    }
    if (cols.empty()) continue;
    double omega, imeps;
    if (cols.size() == 2) {
      omega = cols[0];
      imeps = cols[1];
    } else if (cols.size() == 3) {
      omega = cols[0];
      imeps = 2.0 * cols[1] * cols[2];  // Im eps = 2 n k
    } else {
      throw std::invalid_argument("optical table line " +
                                  std::to_string(lineno) +
                                  ": expected 2 or 3 columns");
    }
    if (!(omega > 0.0))
      throw std::invalid_argument("optical table line " +
                                  std::to_string(lineno) +
                                  ": frequency must be positive");
    if (imeps < 0.0)
      throw std::invalid_argument("optical table line " +
                                  std::to_string(lineno) +
                                  ": Im eps must be >= 0");
    if (!t.omega_ev.empty() && !(omega > t.omega_ev.back()))
      throw std::invalid_argument("optical table line " +
                                  std::to_string(lineno) +
                                  ": frequencies must be increasing");
    t.omega_ev.push_back(omega);
    t.im_eps.push_back(imeps);
  }
  t.validate();
  return t;
}

OpticalDataTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open optical table: " + path);
  return load_table(in);
}

namespace {

void digest_feed(std::uint64_t& h, const char* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 1099511628211ULL;
  }
}

void digest_double(std::uint64_t& h, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g;", v);
  digest_feed(h, buf, std::strlen(buf));
}

}  // namespace

std::uint64_t ingestion_digest(const OpticalDataTable& table,
                               const ExtrapolationSpec& ext,
                               double temperature_k, long l_max) {
  std::uint64_t h = 14695981039346656037ULL;
  const char* tag = ext.mode == ExtrapolationSpec::Mode::Drude ? "drude" : "plasma";
  digest_feed(h, tag, std::strlen(tag));
  digest_double(h, ext.omega_p_ev);
  digest_double(h, ext.gamma_ev);
  digest_double(h, temperature_k);
  digest_double(h, static_cast<double>(l_max));
  for (std::size_t i = 0; i < table.omega_ev.size(); ++i) {
    digest_double(h, table.omega_ev[i]);
    digest_double(h, table.im_eps[i]);
  }
  return h;
}

void write_cache(const std::string& path, const OpticalDataTable& table,
                 const ExtrapolationSpec& ext, double temperature_k,
                 long l_max) {
  const std::uint64_t digest = ingestion_digest(table, ext, temperature_k, l_max);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache: " + tmp);
    char buf[64];
    out << "# casimir-eps-cache v1\n";
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(digest));
    out << "# digest " << buf << "\n";
    out << "# mode "
        << (ext.mode == ExtrapolationSpec::Mode::Drude ? "drude" : "plasma")
        << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", ext.omega_p_ev);
    out << "# omega_p_ev " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", ext.gamma_ev);
    out << "# gamma_ev " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", temperature_k);
    out << "# temperature_k " << buf << "\n";
    out << "# columns l xi_ev eps\n";
    for (long l = 1; l <= l_max; ++l) {
      const double xi = lifshitz::matsubara_frequency(l, temperature_k);
      const double eps = kk_to_imag_axis(table, ext, xi);
      char row[96];
      std::snprintf(row, sizeof row, "%ld %.17g %.17g\n", l, xi, eps);
      out << row;
    }
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot replace cache: " + path);
}

materials::MaterialModel material_from_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cache: " + path);
  materials::TabulatedEps tab;
  bool mode_seen = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "mode") {
        std::string m;
        ss >> m;
        tab.extrapolation = m == "plasma"
                                ? materials::TabulatedEps::Extrapolation::Plasma
                                : materials::TabulatedEps::Extrapolation::Drude;
        mode_seen = true;
      } else if (key == "omega_p_ev") {
        ss >> tab.omega_p_ev;
      } else if (key == "gamma_ev") {
        ss >> tab.gamma_ev;
      }
      continue;
    }
    std::istringstream ss(line);
    long l;
    double xi, eps;
    if (!(ss >> l >> xi >> eps))
      throw std::invalid_argument("cache: malformed row in " + path);
    tab.xi_ev.push_back(xi);
    tab.eps.push_back(eps);
  }
  if (!mode_seen || tab.xi_ev.empty())
    throw std::invalid_argument("cache: missing header or rows in " + path);
  return materials::MaterialModel::tabulated(std::move(tab));
}

}  // namespace casimir::optics
