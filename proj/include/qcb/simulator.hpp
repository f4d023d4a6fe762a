#pragma once

#include "qcb/cloning.hpp"
#include "qcb/qubit.hpp"
#include "qcb/types.hpp"

#include <cstdint>
#include <vector>

namespace qcb {

/// State-vector caps for the exact cloning simulation.
inline constexpr int kMaxPhasedQubits = 12;  // 2^12 amplitudes per state
inline constexpr int kMaxSimInputs = 6;      // input copies N
inline constexpr int kMaxSimClones = 12;     // output clones M

/// Exact binomial coefficient from the factorial table, 0 <= k <= n <= 13.
std::int64_t binomial(int n, int k);

/// Equal-weight superposition of every n-qubit configuration with m_down
/// down-spins, the j-th configuration (by ascending basis index) carrying
/// phase exp(2 pi i alpha j / C(n, m_down)). alpha = 0 is the Dicke state.
///
/// Basis convention: qubit 0 is the most significant bit of the index and
/// spin-up maps to bit value 0.
struct PhasedSymmetricState {
  int n_qubits;
  int m_down;
  int alpha;
  VectorXc amplitudes;
};

PhasedSymmetricState build_phased_state(int n, int m, int alpha);

/// Abstract orthonormal ancilla state; distinct labels are orthogonal, which
/// is all the partial trace over the ancilla needs.
struct AncillaLabel {
  int k;
  int alpha;
};

/// Coefficient beta_mk of the cloning unitary; beta^2 reduces to
/// C(M-m-k, N-m) C(m+k, m) / C(M+1, N+1), evaluated exactly before the root.
Real beta_coefficient(const CloneSpec& spec, int m, int k);

struct UnitaryTerm {
  Real beta;
  PhasedSymmetricState clone_state;
  AncillaLabel ancilla;
};

/// The cloning unitary applied to the (m, alpha) input state and a blank
/// ancilla: one term per k in [0, M-N], squared betas summing to 1.
std::vector<UnitaryTerm> apply_cloning_unitary(const CloneSpec& spec, int m, int alpha);

struct CloneTerm {
  Real weight;  // a^(N-m) b^m beta_mk^2
  int m;
  int alpha;
  int k;
  PhasedSymmetricState state;  // over M qubits
};

/// Ensemble of M-qubit clone states left after the unitary acts on every
/// diagonal term of rho^(x N) and the ancilla is traced out. Zero-weight
/// members (rank-deficient input) are omitted; weights sum to 1.
struct CloneOutputMixture {
  CloneSpec spec;
  SpectralQubit input;
  std::vector<CloneTerm> terms;
};

CloneOutputMixture simulate_broadcast(const CloneSpec& spec, const SpectralQubit& input);

/// Partial trace of the mixture onto one clone, as a Bloch vector. The
/// output is permutation-symmetric, so keep_index does not change the result.
BlochQubit reduce_to_single_clone(const CloneOutputMixture& mix, int keep_index);

struct OracleReport {
  BlochQubit analytic;
  BlochQubit simulated;
  Real max_deviation;
};

/// Cross-validates the closed-form clone state against the simulated one;
/// max_deviation is the largest Bloch-component difference.
OracleReport oracle_check(const CloneSpec& spec, const SpectralQubit& input);

}  // namespace qcb
