#pragma once

#include "qcb/qubit.hpp"
#include "qcb/types.hpp"

#include <cmath>

namespace qcb {

/// Result of minimizing the Renyi overlap Q_s over s in [0, 1]:
/// s_star is the minimizer, q_min the overlap Q there, xi = -ln(q_min).
/// For states with orthogonal supports q_min = 0 and xi = +infinity.
struct ChernoffResult {
  Real s_star;
  Real q_min;
  Real xi;
};

/// A pair of qubit states to discriminate from `copies` identical copies.
struct DiscriminationTask {
  BlochQubit rho;
  BlochQubit zeta;
  int copies = 1;
};

/// Power of a spectral weight with the support convention: 0^s := 0 for every
/// s in [0, 1], so zero eigenvalues never contribute and s = 0 (or 1) yields
/// the projector onto the support.
inline Real support_pow(Real x, Real e) { return x <= 0 ? Real(0) : std::pow(x, e); }

/// Renyi overlap Q_s = Tr(rho^s zeta^(1-s)), evaluated from the two
/// eigenvalue pairs and the angle between the Bloch vectors.
Real renyi_overlap(const BlochQubit& rho, const BlochQubit& zeta, Real s);

/// Two-term Q_s for collinear Bloch vectors of lengths r and p (the angle
/// term drops out). Fast path for cloning sweeps; agrees with renyi_overlap.
Real renyi_overlap_collinear(Real r, Real p, Real s);

/// Quantum Chernoff overlap Q = min_s Q_s and the bound xi = -ln Q.
ChernoffResult chernoff_bound(const BlochQubit& rho, const BlochQubit& zeta);

/// Minimal error probability of discriminating the pair from k copies,
/// 1/2 (1 - 1/2 ||rho^(x k) - zeta^(x k)||_1). Dense eigensolve; k <= 12.
Real min_error_probability(const DiscriminationTask& task);

/// Pure-state closed form 1/2 (1 - sqrt(1 - t^k)), t the transition
/// probability |<phi|psi>|^2.
Real min_error_pure(Real overlap_sq, int copies);

struct SandwichReport {
  Real fidelity;
  Real overlap;
  Real sqrt_fidelity;
  bool holds;
};

/// Checks F <= Q <= sqrt(F) with 1e-10 slack.
SandwichReport verify_sandwich(const BlochQubit& rho, const BlochQubit& zeta);

}  // namespace qcb
