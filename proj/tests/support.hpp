// Shared helpers for the test suite: reference oracles that recompute results
// through routes independent of the library implementation, plus seeded random
// state generators.
#pragma once

#include "qcb/qubit.hpp"
#include "qcb/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace qcb::test {

// Fidelity by the literal matrix route: [Tr sqrt(sqrt(rho) zeta sqrt(rho))]^2
// with square roots taken through eigendecompositions. Carries ~sqrt(eps)
// noise when an eigenvalue of the inner product is near zero (rank-deficient
// states), so comparisons against it need a tolerance matched to the inputs.
inline Real oracle_fidelity_matrix(const BlochQubit& rho, const BlochQubit& zeta) {
  const auto psd_sqrt = [](const Matrix2c& a) {
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(a);
    Eigen::Vector2d roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return Matrix2c(es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint());
  };
  const Matrix2c s = psd_sqrt(rho.matrix());
  const Real tr = psd_sqrt(s * zeta.matrix() * s).trace().real();
  return tr * tr;
}

// Renyi overlap by explicit matrix powers Tr(rho^s zeta^(1-s)), built from
// eigendecompositions of the 2x2 density matrices. Eigenvalues below 1e-13
// are treated as zero so the support convention matches the definition.
inline Real oracle_renyi_matrix(const BlochQubit& rho, const BlochQubit& zeta, Real s) {
  const auto matrix_pow = [](const Matrix2c& a, Real e) {
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(a);
    Eigen::Vector2d powered;
    for (int i = 0; i < 2; ++i) {
      const Real lam = es.eigenvalues()(i);
      powered(i) = lam <= 1e-13 ? 0.0 : std::pow(lam, e);
    }
    return Matrix2c(es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().adjoint());
  };
  return (matrix_pow(rho.matrix(), s) * matrix_pow(zeta.matrix(), 1 - s)).trace().real();
}

struct GridScanResult {
  Real s_star;
  Real q_min;
};

// Brute-force reference minimization of Q_s: a uniform grid scan with 10^6
// intervals. Each eigenvalue-pair term is either identically zero (a zero
// eigenvalue wipes it out at every s, endpoints included, per the support
// convention) or exp-affine in s, so the scan precomputes logs once.
inline GridScanResult oracle_grid_scan(const BlochQubit& rho, const BlochQubit& zeta,
                                       std::size_t intervals = 1000000) {
  const Real r = rho.length(), p = zeta.length();
  const Real lam[2] = {(1 + r) / 2, (1 - r) / 2};
  const Real mu[2] = {(1 + p) / 2, (1 - p) / 2};

  Real cos2 = 1, sin2 = 0;
  if (r > 1e-14 && p > 1e-14) {
    const Real dot = rho.bloch().dot(zeta.bloch()) / (r * p);
    const Real half = std::acos(std::clamp(dot, Real(-1), Real(1))) / 2;
    cos2 = std::cos(half) * std::cos(half);
    sin2 = std::sin(half) * std::sin(half);
  }
  const Real weight[2][2] = {{cos2, sin2}, {sin2, cos2}};

  struct Term {
    Real log_mu;
    Real log_ratio;  // ln(lam) - ln(mu)
    Real coeff;
  };
  std::vector<Term> terms;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (lam[i] <= 0 || mu[j] <= 0 || weight[i][j] <= 0) continue;
      terms.push_back({std::log(mu[j]), std::log(lam[i]) - std::log(mu[j]), weight[i][j]});
    }
  }

  GridScanResult best{0, std::numeric_limits<Real>::infinity()};
  for (std::size_t g = 0; g <= intervals; ++g) {
    const Real s = Real(g) / Real(intervals);
    Real q = 0;
    for (const Term& t : terms) q += t.coeff * std::exp(t.log_mu + s * t.log_ratio);
    if (q < best.q_min) best = {s, q};
  }
  return best;
}

inline std::mt19937 seeded_rng(unsigned salt = 0) { return std::mt19937(987654321u + salt); }

// Uniformly random direction with the given length (gaussian direction trick).
inline BlochQubit random_state(std::mt19937& rng, Real length) {
  std::normal_distribution<Real> gauss;
  Vector3 dir(gauss(rng), gauss(rng), gauss(rng));
  if (dir.norm() < 1e-12) dir = Vector3(0, 0, 1);
  dir.normalize();
  return BlochQubit(Vector3(length * dir));
}

// Random physical state; every fifth draw is pure (rank-deficient) so the
// degenerate corner stays covered.
inline BlochQubit random_state(std::mt19937& rng) {
  std::uniform_real_distribution<Real> unit(0, 1);
  const bool pure = std::uniform_int_distribution<int>(0, 4)(rng) == 0;
  return random_state(rng, pure ? Real(1) : unit(rng));
}

// Random state bounded away from purity, for comparisons against the noisy
// matrix-square-root oracle.
inline BlochQubit random_mixed_state(std::mt19937& rng, Real max_length = 0.9) {
  std::uniform_real_distribution<Real> unit(0, max_length);
  return random_state(rng, unit(rng));
}

}  // namespace qcb::test
