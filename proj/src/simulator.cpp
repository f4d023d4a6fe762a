#include "qcb/simulator.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qcb {

namespace {

// 0! .. 13!, exact.
constexpr std::array<std::int64_t, 14> kFactorial = {
    1,       1,        2,         6,         24,         120,        720,
    5040,    40320,    362880,    3628800,   39916800,   479001600,  6227020800};

void check_sim_caps(const CloneSpec& spec) {
  if (spec.n_in() > kMaxSimInputs || spec.m_out() > kMaxSimClones) {
    throw ResourceCapError("cloning simulator caps are N <= " + std::to_string(kMaxSimInputs) +
                           ", M <= " + std::to_string(kMaxSimClones) + "; got N = " +
                           std::to_string(spec.n_in()) + ", M = " + std::to_string(spec.m_out()));
  }
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("binomial: need 0 <= k <= n");
  }
  if (n >= static_cast<int>(kFactorial.size())) {
    throw ResourceCapError("binomial: factorial table covers n <= 13, got " + std::to_string(n));
  }
  return kFactorial[n] / (kFactorial[k] * kFactorial[n - k]);
}

PhasedSymmetricState build_phased_state(int n, int m, int alpha) {
  if (n < 1) throw std::invalid_argument("build_phased_state: n must be >= 1");
  if (n > kMaxPhasedQubits) {
    throw ResourceCapError("build_phased_state: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kMaxPhasedQubits));
  }
  if (m < 0 || m > n) {
    throw std::invalid_argument("build_phased_state: m must lie in [0, n]");
  }
  const std::int64_t configs = binomial(n, m);
  if (alpha < 0 || alpha >= configs) {
    throw std::invalid_argument("build_phased_state: alpha must lie in [0, C(n,m) - 1]");
  }

  const std::int64_t dim = std::int64_t(1) << n;
  const Real norm = 1 / std::sqrt(Real(configs));
  VectorXc amp = VectorXc::Zero(dim);
  std::int64_t rank = 0;
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    if (std::popcount(static_cast<std::uint64_t>(idx)) != m) continue;
    const std::int64_t phase_num = (std::int64_t(alpha) * rank) % configs;
    amp[idx] = std::polar(norm, 2 * std::numbers::pi_v<Real> * Real(phase_num) / Real(configs));
    ++rank;
  }
  return {n, m, alpha, std::move(amp)};
}

Real beta_coefficient(const CloneSpec& spec, int m, int k) {
  const int n_in = static_cast<int>(spec.n_in());
  const int m_out = static_cast<int>(spec.m_out());
  if (spec.m_out() > kMaxSimClones) {
    throw ResourceCapError("beta_coefficient: factorial table caps M at " +
                           std::to_string(kMaxSimClones));
  }
  if (m < 0 || m > n_in) {
    throw std::invalid_argument("beta_coefficient: m must lie in [0, N]");
  }
  if (k < 0 || k > m_out - n_in) {
    throw std::invalid_argument("beta_coefficient: k must lie in [0, M - N]");
  }
  assert(m + k <= m_out);
  const Real num = Real(binomial(m_out - m - k, n_in - m)) * Real(binomial(m + k, m));
  return std::sqrt(num / Real(binomial(m_out + 1, n_in + 1)));
}

std::vector<UnitaryTerm> apply_cloning_unitary(const CloneSpec& spec, int m, int alpha) {
  check_sim_caps(spec);
  const int n_in = static_cast<int>(spec.n_in());
  const int m_out = static_cast<int>(spec.m_out());
  if (m < 0 || m > n_in) {
    throw std::invalid_argument("apply_cloning_unitary: m must lie in [0, N]");
  }
  if (alpha < 0 || alpha >= binomial(n_in, m)) {
    throw std::invalid_argument("apply_cloning_unitary: alpha must lie in [0, C(N,m) - 1]");
  }
  std::vector<UnitaryTerm> terms;
  terms.reserve(m_out - n_in + 1);
  for (int k = 0; k <= m_out - n_in; ++k) {
    terms.push_back({beta_coefficient(spec, m, k), build_phased_state(m_out, m + k, alpha),
                     AncillaLabel{k, alpha}});
  }
  return terms;
}

CloneOutputMixture simulate_broadcast(const CloneSpec& spec, const SpectralQubit& input) {
  check_sim_caps(spec);
  const int n_in = static_cast<int>(spec.n_in());
  CloneOutputMixture mix{spec, input, {}};
  for (int m = 0; m <= n_in; ++m) {
    const Real base = std::pow(input.a(), n_in - m) * std::pow(input.b(), m);
    if (base == 0) continue;
    for (std::int64_t alpha = 0; alpha < binomial(n_in, m); ++alpha) {
      for (auto& term : apply_cloning_unitary(spec, m, static_cast<int>(alpha))) {
        mix.terms.push_back({base * term.beta * term.beta, m, static_cast<int>(alpha),
                             term.ancilla.k, std::move(term.clone_state)});
      }
    }
  }
  return mix;
}

BlochQubit reduce_to_single_clone(const CloneOutputMixture& mix, int keep_index) {
  const int m_out = static_cast<int>(mix.spec.m_out());
  if (keep_index < 0 || keep_index >= m_out) {
    throw std::invalid_argument("reduce_to_single_clone: keep_index must lie in [0, M - 1]");
  }
  // Qubit q sits at bit (M-1-q); bit 0 means spin-up.
  const std::int64_t mask = std::int64_t(1) << (m_out - 1 - keep_index);
  const std::int64_t dim = std::int64_t(1) << m_out;

  Real p_up = 0, p_down = 0;
  Complex coh = 0;  // <up| rho |down>
  for (const CloneTerm& term : mix.terms) {
    const VectorXc& amp = term.state.amplitudes;
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      if (idx & mask) continue;
      const Complex up = amp[idx];
      const Complex down = amp[idx | mask];
      p_up += term.weight * std::norm(up);
      p_down += term.weight * std::norm(down);
      coh += term.weight * up * std::conj(down);
    }
  }
  // The +0.0 folds IEEE negative zeros (conjugation artifacts) into plain zeros.
  return BlochQubit(2 * coh.real() + 0.0, -2 * coh.imag() + 0.0, p_up - p_down);
}

OracleReport oracle_check(const CloneSpec& spec, const SpectralQubit& input) {
  const BlochQubit analytic = clone_state(spec, to_bloch(input));
  const BlochQubit simulated = reduce_to_single_clone(simulate_broadcast(spec, input), 0);
  const Real dev = (analytic.bloch() - simulated.bloch()).cwiseAbs().maxCoeff();
  return {analytic, simulated, dev};
}

}  // namespace qcb
