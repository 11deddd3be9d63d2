// Exercises the installed CLI binary end to end: JSON/CSV outputs, exit
// codes, and determinism. The binary path arrives as argv[1] from ctest.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using json = nlohmann::json;

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string g_bin;

RunResult run(const std::string& args) {
  const std::string out_path = "cli_test_out.txt";
  const std::string cmd = g_bin + " " + args + " > " + out_path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = rc == -1 ? -1 : WEXITSTATUS(rc);
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

void write_drude_table(const std::string& path) {
  std::ofstream f(path);
  f << "# synthetic gold loss function\n";
  const double wp = 9.0, g = 0.035;
  const int n = 241;
  for (int i = 0; i < n; ++i) {
    const double w = 1e-3 * std::pow(1e6, static_cast<double>(i) / (n - 1));
    f << w << " " << wp * wp * g / (w * (w * w + g * g)) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-casimir-binary>\n";
    return 2;
  }
  g_bin = argv[1];

  // compute: ideal metal at T = 0 reproduces the zero-temperature force
  {
    auto r = run("compute --model ideal-metal --a 1e-6 --T 0 --quantity pressure");
    expect(r.exit_code == 0, "compute T=0 exits 0");
    auto j = json::parse(r.out, nullptr, false);
    expect(!j.is_discarded(), "compute emits JSON");
    const double v = j["value"].get<double>();
    expect(std::abs(v - (-1.300126e-3)) < 1e-3 * 1.3e-3,
           "T=0 ideal-metal pressure value, got " + std::to_string(v));
    expect(j["units"] == "N/m^2", "pressure units label");
  }

  // compute: classical Drude pressure at 6 um
  {
    auto r = run("compute --model drude:au --a 6e-6 --T 300 --quantity pressure");
    auto j = json::parse(r.out, nullptr, false);
    const double v = j["value"].get<double>();
    expect(std::abs(v - (-0.9171407e-6)) < 0.01 * 0.917e-6,
           "Drude classical pressure, got " + std::to_string(v));
  }

  // usage errors exit 1
  {
    auto r = run("compute --model ideal-metal --a 0 --quantity pressure");
    expect(r.exit_code == 1, "a = 0 is a usage error, got " +
                                 std::to_string(r.exit_code));
    auto r2 = run("compute --a 1e-6");
    expect(r2.exit_code == 1, "missing model is a usage error");
    auto r3 = run("scan --model ideal-metal --min 2e-6 --max 2e-6 --count 5");
    expect(r3.exit_code == 1, "zero-length scan range is a usage error");
  }

  // scan: CSV with a units-bearing header, deterministic across runs
  {
    const std::string args =
        "scan --model drude:au --variable separation --min 5e-7 --max 2e-6 "
        "--count 4 --spacing log --T 300 --quantity pressure";
    auto r1 = run(args);
    auto r2 = run(args);
    expect(r1.exit_code == 0, "scan exits 0");
    expect(r1.out == r2.out, "scan output is deterministic");
    expect(r1.out.find("separation_m,pressure_N_per_m2") == 0,
           "scan header names columns and units");
    int lines = 0;
    for (char c : r1.out)
      if (c == '\n') ++lines;
    expect(lines == 5, "scan emits header + 4 rows");
  }

  // band: degenerate parameter interval collapses to low = high
  {
    auto r = run(
        "band --model drude:au --variable separation --min 5e-7 --max 1e-6 "
        "--count 3 --quantity pressure --parameter omega_p --param-min 9.0 "
        "--param-max 9.0 --param-count 1");
    expect(r.exit_code == 0, "degenerate band exits 0");
    std::istringstream ss(r.out);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
      std::stringstream ls(line);
      std::string a, lo, hi;
      std::getline(ls, a, ',');
      std::getline(ls, lo, ',');
      std::getline(ls, hi, ',');
      expect(lo == hi, "band low == high for a fixed parameter");
    }
  }

  // band: plasma-frequency interval produces a proper positive band
  {
    auto r = run(
        "band --model drude:au --variable separation --min 3e-7 --max 3e-7a"
        " --count 2 --quantity gradient --radius 150e-6 --parameter omega_p "
        "--param-min 6.85 --param-max 9.0 --param-count 5");
    // the malformed max above must be rejected, then run the real case
    expect(r.exit_code == 1, "malformed numeric flag is a usage error");
    auto r2 = run(
        "band --model drude:au --variable separation --min 2.9e-7 --max 3.1e-7 "
        "--count 3 --quantity gradient --radius 150e-6 --parameter omega_p "
        "--param-min 6.85 --param-max 9.0 --param-count 5");
    expect(r2.exit_code == 0, "gradient band exits 0");
    std::istringstream ss(r2.out);
    std::string line;
    std::getline(ss, line);
    expect(line.find("force_gradient_N_per_m_low") != std::string::npos,
           "band header names the quantity");
    while (std::getline(ss, line)) {
      std::stringstream ls(line);
      std::string a, lo, hi;
      std::getline(ls, a, ',');
      std::getline(ls, lo, ',');
      std::getline(ls, hi, ',');
      const double vlo = std::stod(lo), vhi = std::stod(hi);
      expect(vlo > 0.0 && vhi > vlo,
             "band at " + a + ": 0 < low (" + lo + ") < high (" + hi + ")");
    }
  }

  // ingest: summary JSON, cache reuse, determinism, bad input line numbers
  {
    write_drude_table("cli_table.txt");
    auto r = run(
        "ingest --input cli_table.txt --mode drude --omega-p 9.0 --gamma "
        "0.035 --T 300 --l-max-index 80 --output cli_eps.cache");
    expect(r.exit_code == 0, "ingest exits 0");
    auto j = json::parse(r.out, nullptr, false);
    expect(!j.is_discarded(), "ingest emits JSON");
    const double eps1 = j["eps_at_xi1"].get<double>();
    expect(std::abs(eps1 - 2526.756) < 0.005 * 2526.756,
           "ingested eps(i xi_1) near the analytic value, got " +
               std::to_string(eps1));

    std::ifstream c1("cli_eps.cache");
    std::stringstream s1;
    s1 << c1.rdbuf();
    auto r2 = run(
        "ingest --input cli_table.txt --mode drude --omega-p 9.0 --gamma "
        "0.035 --T 300 --l-max-index 80 --output cli_eps.cache");
    expect(r2.exit_code == 0, "re-ingest exits 0");
    std::ifstream c2("cli_eps.cache");
    std::stringstream s2;
    s2 << c2.rdbuf();
    expect(s1.str() == s2.str(), "cache bytes identical across reruns");
    expect(json::parse(r.out)["digest"] == json::parse(r2.out)["digest"],
           "digest stable");

    // the cached material drives the engine through the CLI
    auto rc = run(
        "compute --model cache:cli_eps.cache --a 5e-7 --T 300 --quantity "
        "pressure");
    expect(rc.exit_code == 0, "cached material computes");
    auto rd = run("compute --model drude:au --a 5e-7 --T 300 --quantity pressure");
    const double vc = json::parse(rc.out)["value"].get<double>();
    const double vd = json::parse(rd.out)["value"].get<double>();
    expect(std::abs(vc - vd) < 5e-3 * std::abs(vd),
           "cache-backed pressure within 0.5% of analytic");

    std::ofstream bad("cli_bad.txt");
    bad << "0.1 1.0\n0.2 -0.5\n";
    bad.close();
    auto rb = run(
        "ingest --input cli_bad.txt --mode drude --omega-p 9 --gamma 0.035");
    expect(rb.exit_code == 2, "bad table is a data error, got " +
                                  std::to_string(rb.exit_code));
    expect(rb.out.find("line 2") != std::string::npos,
           "error names the offending line");
  }

  // nernst: quick plasma verdict
  {
    auto r = run(
        "nernst --model plasma:au --a 1e-6 --t-max 30 --t-min 0.3 --points 6");
    expect(r.exit_code == 0, "nernst exits 0");
    auto j = json::parse(r.out, nullptr, false);
    expect(!j.is_discarded(), "nernst emits JSON");
    expect(j["verdict"] == "satisfied", "plasma satisfies the Nernst theorem");
    const double expo = j["fitted_exponent"].get<double>();
    expect(std::abs(expo - 2.0) < 0.2,
           "plasma exponent near 2, got " + std::to_string(expo));
  }

  // gradient with sphere parameters and material files
  {
    std::ofstream mf("cli_mat.ini");
    mf << "[au]\nvariant = drude\nomega_p_ev = 9.0\ngamma_ev = 0.035\n";
    mf.close();
    auto r = run(
        "compute --model file:cli_mat.ini#au --a 5e-7 --T 300 --quantity "
        "gradient --radius 150e-6 --beta -0.40 --delta1 4e-9");
    expect(r.exit_code == 0, "gradient from a material file");
    auto j = json::parse(r.out, nullptr, false);
    expect(j["value"].get<double>() > 0.0, "attractive gradient is positive");
  }

  // config file precedence: flag beats file
  {
    std::ofstream cf("cli_cfg.txt");
    cf << "rel_tol = 1e-6\nl_max_cap = 100000\n";
    cf.close();
    auto r = run(
        "compute --model drude:au --a 6e-6 --T 300 --quantity pressure "
        "--config cli_cfg.txt --rel-tol 1e-10");
    expect(r.exit_code == 0, "config + flag accepted");
  }

  std::remove("cli_test_out.txt");
  std::remove("cli_table.txt");
  std::remove("cli_bad.txt");
  std::remove("cli_eps.cache");
  std::remove("cli_mat.ini");
  std::remove("cli_cfg.txt");

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " failures\n";
  return 1;
}
