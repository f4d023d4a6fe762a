#include "qcb/sweep.hpp"

#include "qcb/chernoff.hpp"
#include "qcb/hermitian.hpp"
#include "qcb/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace qcb {

namespace {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      std::size_t i;
      while ((i = next.fetch_add(1)) < count && !failed.load()) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void check_grid(const RGrid& g) {
  if (!(g.step > 0)) throw std::invalid_argument("r grid: step must be > 0");
  if (!(g.start >= 0 && g.stop <= 1 && g.start <= g.stop)) {
    throw std::invalid_argument("r grid must lie within [0, 1] with start <= stop");
  }
}

void require_mode(const SweepConfig& config, SweepMode expected, const char* name) {
  if (config.mode != expected) {
    throw std::invalid_argument(std::string(name) + ": wrong sweep mode for this runner");
  }
}

SweepRow evaluate(Real r, std::int64_t n, std::int64_t m) {
  const ChernoffResult res = cloning_chernoff(CloneSpec(n, m), r);
  return {r, n, m, res.s_star, res.q_min, res.xi};
}

void append_real(std::string& out, Real v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  out += buf;
}

BlochQubit random_bloch(std::mt19937& rng, bool force_pure) {
  std::normal_distribution<Real> gauss;
  Vector3 dir(gauss(rng), gauss(rng), gauss(rng));
  if (dir.norm() < 1e-12) dir = Vector3(0, 0, 1);
  dir.normalize();
  std::uniform_real_distribution<Real> unit(0, 1);
  const Real len = force_pure ? Real(1) : unit(rng);
  return BlochQubit(Vector3(len * dir));
}

using CheckBody = std::function<void(VerifyCheck&)>;

void run_check(VerifyReport& report, const std::string& name, Real tolerance,
               const CheckBody& body) {
  VerifyCheck check{name, false, 0, tolerance, ""};
  try {
    body(check);
    check.passed = check.max_deviation <= tolerance;
  } catch (const ResourceCapError& e) {
    check.note = std::string("resource cap: ") + e.what();
  } catch (const std::exception& e) {
    check.note = e.what();
  }
  report.checks.push_back(std::move(check));
}

}  // namespace

std::vector<Real> expand_grid(const RGrid& grid) {
  check_grid(grid);
  const auto count =
      static_cast<std::size_t>(std::floor((grid.stop - grid.start) / grid.step + 1e-9)) + 1;
  std::vector<Real> points(count);
  for (std::size_t i = 0; i < count; ++i) {
    points[i] = std::min(grid.start + Real(i) * grid.step, grid.stop);
  }
  return points;
}

std::vector<SweepRow> run_fig1_sweep(const SweepConfig& config) {
  require_mode(config, SweepMode::kFixN, "run_fig1_sweep");
  if (config.n_values.size() != 1) {
    throw std::invalid_argument("fix-n sweep: exactly one N value required");
  }
  if (config.m_values.empty()) {
    throw std::invalid_argument("fix-n sweep: at least one M value required");
  }
  const std::int64_t n = config.n_values.front();
  for (const std::int64_t m : config.m_values) {
    [[maybe_unused]] const CloneSpec spec(n, m);  // validates M >= N >= 1
  }
  const std::vector<Real> rs = expand_grid(config.r_grid);
  const std::size_t width = config.m_values.size();
  std::vector<SweepRow> rows(rs.size() * width);
  parallel_for(rows.size(), [&](std::size_t i) {
    rows[i] = evaluate(rs[i / width], n, config.m_values[i % width]);
  });
  return rows;
}

std::vector<SweepRow> run_fig2_sweep(const SweepConfig& config) {
  require_mode(config, SweepMode::kFixM, "run_fig2_sweep");
  if (config.m_values.size() != 1) {
    throw std::invalid_argument("fix-m sweep: exactly one M value required");
  }
  if (config.n_values.empty()) {
    throw std::invalid_argument("fix-m sweep: at least one N value required");
  }
  const std::int64_t m = config.m_values.front();
  for (const std::int64_t n : config.n_values) {
    [[maybe_unused]] const CloneSpec spec(n, m);
  }
  const std::vector<Real> rs = expand_grid(config.r_grid);
  const std::size_t width = config.n_values.size();
  std::vector<SweepRow> rows(rs.size() * width);
  parallel_for(rows.size(), [&](std::size_t i) {
    rows[i] = evaluate(rs[i / width], config.n_values[i % width], m);
  });
  return rows;
}

std::vector<SweepRow> run_fig34_surface(const SweepConfig& config) {
  require_mode(config, SweepMode::kFixR, "run_fig34_surface");
  if (!(config.r >= 0 && config.r <= 1)) {
    throw std::invalid_argument("fix-r sweep: r must lie in [0, 1]");
  }
  if (config.n_values.empty() || config.m_values.empty()) {
    throw std::invalid_argument("fix-r sweep: N and M value lists must be non-empty");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (const std::int64_t n : config.n_values) {
    for (const std::int64_t m : config.m_values) {
      if (m >= n) grid.emplace_back(n, m);
    }
  }
  std::vector<SweepRow> rows(grid.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    rows[i] = evaluate(config.r, grid[i].first, grid[i].second);
  });
  return rows;
}

std::string format_csv(const std::vector<SweepRow>& rows, int precision) {
  if (precision < 1 || precision > 17) {
    throw std::invalid_argument("csv precision must lie in [1, 17]");
  }
  std::string out = "r,N,M,s_star,q_min,xi\n";
  char buf[64];
  for (const SweepRow& row : rows) {
    append_real(out, row.r, precision);
    std::snprintf(buf, sizeof buf, ",%lld,%lld,", static_cast<long long>(row.n),
                  static_cast<long long>(row.m));
    out += buf;
    append_real(out, row.s_star, precision);
    out += ',';
    append_real(out, row.q_min, precision);
    out += ',';
    append_real(out, row.xi, precision);
    out += '\n';
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, int precision) {
  out << format_csv(rows, precision);
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verify(const SweepConfig& config, const VerifyOptions& opts) {
  if (config.mode != SweepMode::kVerify && config.mode != SweepMode::kSimulate) {
    throw std::invalid_argument("run_verify: config mode must be verify or simulate");
  }
  VerifyReport report;

  run_check(report, "oracle-equivalence", 1e-10, [&](VerifyCheck& check) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t m = n; m <= 5; ++m) {
        for (const Real a : {0.5, 0.6, 0.75, 0.9, 0.95, 1.0}) {
          const OracleReport r = oracle_check(CloneSpec(n, m), SpectralQubit(a));
          const Vector3 corrupted = (1 + opts.eta_perturbation) * r.analytic.bloch();
          const Real dev = (corrupted - r.simulated.bloch()).cwiseAbs().maxCoeff();
          check.max_deviation = std::max(check.max_deviation, dev);
        }
      }
    }
  });

  run_check(report, "beta-isometry", 1e-12, [](VerifyCheck& check) {
    for (std::int64_t n = 1; n <= kMaxSimInputs; ++n) {
      for (std::int64_t m_out = n; m_out <= kMaxSimClones; ++m_out) {
        const CloneSpec spec(n, m_out);
        for (int m = 0; m <= n; ++m) {
          Real sum = 0;
          for (int k = 0; k <= m_out - n; ++k) {
            const Real beta = beta_coefficient(spec, m, k);
            sum += beta * beta;
          }
          check.max_deviation = std::max(check.max_deviation, std::abs(sum - 1));
        }
      }
    }
  });

  run_check(report, "phased-orthonormality", 1e-12, [](VerifyCheck& check) {
    for (int n = 1; n <= kMaxSimInputs; ++n) {
      for (int m = 0; m <= n; ++m) {
        const auto configs = binomial(n, m);
        MatrixXc basis(std::int64_t(1) << n, configs);
        for (std::int64_t alpha = 0; alpha < configs; ++alpha) {
          basis.col(alpha) = build_phased_state(n, m, static_cast<int>(alpha)).amplitudes;
        }
        const MatrixXc gram = basis.adjoint() * basis;
        const Real dev = (gram - MatrixXc::Identity(configs, configs)).cwiseAbs().maxCoeff();
        check.max_deviation = std::max(check.max_deviation, dev);
      }
    }
  });

  run_check(report, "decomposition-completeness", 1e-12, [](VerifyCheck& check) {
    for (int n = 1; n <= 4; ++n) {
      for (const Real a : {0.5, 0.75, 0.9, 1.0}) {
        const SpectralQubit input(a);
        const std::int64_t dim = std::int64_t(1) << n;
        MatrixXc sum = MatrixXc::Zero(dim, dim);
        for (int m = 0; m <= n; ++m) {
          const Real weight = std::pow(input.a(), n - m) * std::pow(input.b(), m);
          for (std::int64_t alpha = 0; alpha < binomial(n, m); ++alpha) {
            const VectorXc& amp = build_phased_state(n, m, static_cast<int>(alpha)).amplitudes;
            sum += weight * (amp * amp.adjoint());
          }
        }
        const MatrixXc expected = tensor_power(to_bloch(input), n).entries();
        check.max_deviation =
            std::max(check.max_deviation, (sum - expected).cwiseAbs().maxCoeff());
      }
    }
  });

  run_check(report, "sandwich-bounds", 1e-10, [](VerifyCheck& check) {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 1000; ++trial) {
      const BlochQubit rho = random_bloch(rng, trial % 5 == 0);
      const BlochQubit zeta = random_bloch(rng, trial % 7 == 0);
      const SandwichReport s = verify_sandwich(rho, zeta);
      const Real violation =
          std::max(s.fidelity - s.overlap, s.overlap - s.sqrt_fidelity);
      check.max_deviation = std::max(check.max_deviation, violation);
    }
  });

  run_check(report, "symmetric-s-star", 1e-6, [](VerifyCheck& check) {
    for (int i = 1; i <= 9; ++i) {
      const Real r = Real(i) / 10;
      const ChernoffResult res = chernoff_bound(BlochQubit(0, 0, r), BlochQubit(r, 0, 0));
      check.max_deviation = std::max(check.max_deviation, std::abs(res.s_star - 0.5));
    }
  });

  run_check(report, "clone-vs-2toM", 1e-14, [](VerifyCheck& check) {
    const BlochQubit input(0.3, -0.4, 0.6);
    for (std::int64_t m = 2; m <= 1000; ++m) {
      const Vector3 general = clone_state(CloneSpec(2, m), input).bloch();
      const Vector3 direct = clone_state_2toM(m, input).bloch();
      check.max_deviation =
          std::max(check.max_deviation, (general - direct).cwiseAbs().maxCoeff());
    }
  });

  return report;
}

}  // namespace qcb
