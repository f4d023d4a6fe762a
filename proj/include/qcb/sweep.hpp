#pragma once

#include "qcb/cloning.hpp"
#include "qcb/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcb {

enum class SweepMode { kFixN, kFixM, kFixR, kSingle, kSimulate, kVerify };

/// Inclusive [start, stop] grid with uniform step.
struct RGrid {
  Real start = 0;
  Real stop = 1;
  Real step = 0.01;
};

struct SweepConfig {
  SweepMode mode = SweepMode::kFixN;
  std::vector<std::int64_t> n_values;
  std::vector<std::int64_t> m_values;
  RGrid r_grid;
  Real r = 0.3;             // fixed input length for fix-r mode
  std::string output_path;  // empty means stdout
  int precision = 12;       // significant digits in CSV output
};

/// One sweep result; every mode emits the same column set.
struct SweepRow {
  Real r;
  std::int64_t n;
  std::int64_t m;
  Real s_star;
  Real q_min;
  Real xi;
};

/// Grid points start, start + step, ... clamped to stop. Validates
/// 0 <= start <= stop <= 1 and step > 0.
std::vector<Real> expand_grid(const RGrid& grid);

/// N fixed, M varying: rows ordered r-major, then by m_values order.
std::vector<SweepRow> run_fig1_sweep(const SweepConfig& config);

/// M fixed, N varying: rows ordered r-major, then by n_values order.
std::vector<SweepRow> run_fig2_sweep(const SweepConfig& config);

/// r fixed, (N, M) rectangular grid restricted to M >= N; N-major order.
std::vector<SweepRow> run_fig34_surface(const SweepConfig& config);

/// Header `r,N,M,s_star,q_min,xi` plus one line per row; LF line endings,
/// values at `precision` significant digits.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, int precision);
std::string format_csv(const std::vector<SweepRow>& rows, int precision);

struct VerifyOptions {
  /// Test-harness hook: relative corruption applied to the analytic clone
  /// state inside the oracle check. Nonzero values must make verify fail.
  Real eta_perturbation = 0;
};

struct VerifyCheck {
  std::string name;
  bool passed;
  Real max_deviation;
  Real tolerance;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
};

/// Runs the cross-validation battery: simulator-vs-analytic oracle, beta
/// isometry, phased-state orthonormality, product-state decomposition
/// completeness, sandwich bounds on random pairs, the symmetric s* family,
/// and the 2->M formula cross-check. Requires mode kVerify or kSimulate.
/// Resource-cap violations mark the affected check failed without aborting
/// the rest.
VerifyReport run_verify(const SweepConfig& config, const VerifyOptions& opts = {});

}  // namespace qcb
