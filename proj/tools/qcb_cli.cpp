// qcb: quantum Chernoff bound calculator for universal qubit cloning.
//
// Subcommands cover single evaluations (chernoff, clone), the figure sweeps
// (fig1, fig2, surface), and the simulator cross-checks (simulate, verify).
// Exit codes: 0 success, 1 validation error, 2 verification failure,
// 3 resource cap exceeded.

#include "qcb/chernoff.hpp"
#include "qcb/cloning.hpp"
#include "qcb/simulator.hpp"
#include "qcb/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using qcb::Real;

std::string fmt(Real v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string fmt(const qcb::Vector3& v, int precision) {
  return "(" + fmt(v.x(), precision) + ", " + fmt(v.y(), precision) + ", " +
         fmt(v.z(), precision) + ")";
}

qcb::RGrid parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string part;
  std::vector<Real> vals;
  while (std::getline(in, part, ':')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("--r-grid: '" + part + "' is not a number");
    }
  }
  if (vals.size() != 3) {
    throw std::invalid_argument("--r-grid expects start:stop:step");
  }
  return {vals[0], vals[1], vals[2]};
}

void emit_rows(const std::vector<qcb::SweepRow>& rows, const std::string& out_path,
               int precision) {
  if (out_path.empty()) {
    qcb::write_csv(std::cout, rows, precision);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  qcb::write_csv(out, rows, precision);
}

void print_chernoff(const qcb::ChernoffResult& res, int precision) {
  std::cout << "s_star = " << fmt(res.s_star, precision) << "\n"
            << "q_min  = " << fmt(res.q_min, precision) << "\n"
            << "xi     = " << fmt(res.xi, precision) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Chernoff bound for N -> M universal qubit cloning"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key = value config file");

  int precision = 12;
  app.add_option("--precision", precision, "Significant digits in printed values")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  std::vector<Real> rho_vals;
  std::vector<Real> zeta_vals;
  auto* chernoff_cmd =
      app.add_subcommand("chernoff", "Chernoff bound between two qubit states");
  chernoff_cmd->add_option("--rho", rho_vals, "Bloch vector x,y,z of the first state")
      ->required()
      ->delimiter(',')
      ->expected(3);
  chernoff_cmd->add_option("--zeta", zeta_vals, "Bloch vector x,y,z of the second state")
      ->required()
      ->delimiter(',')
      ->expected(3);

  std::int64_t clone_n = 0;
  std::int64_t clone_m = 0;
  Real clone_r = 0;
  auto* clone_cmd =
      app.add_subcommand("clone", "Chernoff bound between an input and its clone");
  clone_cmd->add_option("--n", clone_n, "Input copies N")->required();
  clone_cmd->add_option("--m", clone_m, "Output clones M")->required();
  clone_cmd->add_option("--r", clone_r, "Input Bloch length in [0, 1]")->required();

  std::int64_t fig1_n = 2;
  std::vector<std::int64_t> fig1_m_list{5, 10, 50000};
  std::string fig1_grid = "0:1:0.01";
  std::string fig1_out;
  auto* fig1_cmd = app.add_subcommand("fig1", "Sweep r for fixed N and several M");
  fig1_cmd->add_option("--n", fig1_n, "Fixed input copies N")->capture_default_str();
  fig1_cmd->add_option("--m-list", fig1_m_list, "Clone counts M")->delimiter(',');
  fig1_cmd->add_option("--r-grid", fig1_grid, "Grid start:stop:step")->capture_default_str();
  fig1_cmd->add_option("--out", fig1_out, "Output CSV path (default stdout)");

  std::int64_t fig2_m = 1000000;
  std::vector<std::int64_t> fig2_n_list{2, 4, 10};
  std::string fig2_grid = "0:1:0.01";
  std::string fig2_out;
  auto* fig2_cmd = app.add_subcommand("fig2", "Sweep r for fixed M and several N");
  fig2_cmd->add_option("--m", fig2_m, "Fixed clone count M")->capture_default_str();
  fig2_cmd->add_option("--n-list", fig2_n_list, "Input copy counts N")->delimiter(',');
  fig2_cmd->add_option("--r-grid", fig2_grid, "Grid start:stop:step")->capture_default_str();
  fig2_cmd->add_option("--out", fig2_out, "Output CSV path (default stdout)");

  Real surface_r = 0.3;
  std::vector<std::int64_t> surface_n_list;
  std::vector<std::int64_t> surface_m_list;
  std::string surface_out;
  auto* surface_cmd =
      app.add_subcommand("surface", "Evaluate the (N, M) grid at fixed r");
  surface_cmd->add_option("--r", surface_r, "Input Bloch length")->capture_default_str();
  surface_cmd->add_option("--n-list", surface_n_list, "N values (default 1..20)")
      ->delimiter(',');
  surface_cmd->add_option("--m-list", surface_m_list, "M values (default 1..20)")
      ->delimiter(',');
  surface_cmd->add_option("--out", surface_out, "Output CSV path (default stdout)");

  std::int64_t sim_n = 1;
  std::int64_t sim_m = 2;
  Real sim_a = 0.9;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Cross-check one clone state against the exact simulation");
  simulate_cmd->add_option("--n", sim_n, "Input copies N")->capture_default_str();
  simulate_cmd->add_option("--m", sim_m, "Output clones M")->capture_default_str();
  simulate_cmd->add_option("--a", sim_a, "Larger input eigenvalue, in [0.5, 1]")
      ->capture_default_str();

  Real corrupt_eta = 0;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the full cross-validation battery");
  verify_cmd->add_option("--corrupt-eta", corrupt_eta)->group("");  // test harness hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help and version exit clean, everything else is a 1
  }

  try {
    if (*chernoff_cmd) {
      const qcb::BlochQubit rho(qcb::Vector3(rho_vals[0], rho_vals[1], rho_vals[2]));
      const qcb::BlochQubit zeta(qcb::Vector3(zeta_vals[0], zeta_vals[1], zeta_vals[2]));
      print_chernoff(qcb::chernoff_bound(rho, zeta), precision);
    } else if (*clone_cmd) {
      const qcb::CloneSpec spec(clone_n, clone_m);
      std::cout << "eta    = " << fmt(qcb::shrinking_factor(spec).eta, precision) << "\n";
      print_chernoff(qcb::cloning_chernoff(spec, clone_r), precision);
    } else if (*fig1_cmd) {
      qcb::SweepConfig config;
      config.mode = qcb::SweepMode::kFixN;
      config.n_values = {fig1_n};
      config.m_values = fig1_m_list;
      config.r_grid = parse_grid(fig1_grid);
      emit_rows(qcb::run_fig1_sweep(config), fig1_out, precision);
    } else if (*fig2_cmd) {
      qcb::SweepConfig config;
      config.mode = qcb::SweepMode::kFixM;
      config.m_values = {fig2_m};
      config.n_values = fig2_n_list;
      config.r_grid = parse_grid(fig2_grid);
      emit_rows(qcb::run_fig2_sweep(config), fig2_out, precision);
    } else if (*surface_cmd) {
      qcb::SweepConfig config;
      config.mode = qcb::SweepMode::kFixR;
      config.r = surface_r;
      config.n_values = surface_n_list;
      config.m_values = surface_m_list;
      if (config.n_values.empty()) {
        config.n_values.resize(20);
        std::iota(config.n_values.begin(), config.n_values.end(), 1);
      }
      if (config.m_values.empty()) {
        config.m_values.resize(20);
        std::iota(config.m_values.begin(), config.m_values.end(), 1);
      }
      emit_rows(qcb::run_fig34_surface(config), surface_out, precision);
    } else if (*simulate_cmd) {
      if (!(sim_a >= 0.5 && sim_a <= 1)) {
        throw std::invalid_argument("--a must lie in [0.5, 1]");
      }
      const qcb::OracleReport report =
          qcb::oracle_check(qcb::CloneSpec(sim_n, sim_m), qcb::SpectralQubit(sim_a));
      std::cout << "analytic      = " << fmt(report.analytic.bloch(), precision) << "\n"
                << "simulated     = " << fmt(report.simulated.bloch(), precision) << "\n"
                << "max deviation = " << fmt(report.max_deviation, precision) << "\n";
      if (report.max_deviation > 1e-10) {
        std::cerr << "verification failed: deviation exceeds 1e-10\n";
        return 2;
      }
    } else if (*verify_cmd) {
      qcb::SweepConfig config;
      config.mode = qcb::SweepMode::kVerify;
      const qcb::VerifyReport report = qcb::run_verify(config, {corrupt_eta});
      for (const qcb::VerifyCheck& check : report.checks) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name
                  << ": max deviation " << fmt(check.max_deviation, 3) << " (tolerance "
                  << fmt(check.tolerance, 3) << ")";
        if (!check.note.empty()) std::cout << " " << check.note;
        std::cout << "\n";
      }
      if (!report.all_passed()) {
        std::cerr << "verification failed\n";
        return 2;
      }
      std::cout << "all checks passed\n";
    }
  } catch (const qcb::ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
