#include "qcb/qubit.hpp"

#include <algorithm>
#include <cmath>

namespace qcb {

namespace {

// 1 - |v|^2 factored as (1 - |v|)(1 + |v|), which stays accurate when |v| is
// close to 1 (the direct difference would cancel to roundoff there). Negative
// roundoff residue for unit vectors is clamped away.
Real det4(const Vector3& v) {
  const Real len = v.norm();
  return std::max((1 - len) * (1 + len), Real(0));
}

}  // namespace

BlochQubit::BlochQubit(const Vector3& bloch) : bloch_(bloch) {
  const Real len = bloch_.norm();
  if (!(len <= 1 + kPhysicalityTol)) {
    throw std::invalid_argument("BlochQubit: Bloch length " + std::to_string(len) +
                                " exceeds 1 + 1e-12 (unphysical state)");
  }
  if (len > 1) bloch_ /= len;
}

Matrix2c BlochQubit::matrix() const {
  const Real x = bloch_.x(), y = bloch_.y(), z = bloch_.z();
  Matrix2c m;
  m(0, 0) = Complex(1 + z, 0);
  m(0, 1) = Complex(x, -y);
  m(1, 0) = Complex(x, y);
  m(1, 1) = Complex(1 - z, 0);
  return m * Real(0.5);
}

BlochQubit BlochQubit::from_matrix(const Matrix2c& rho) {
  const Real x = 2 * rho(0, 1).real();
  const Real y = -2 * rho(0, 1).imag();
  const Real z = (rho(0, 0) - rho(1, 1)).real();
  return BlochQubit(x, y, z);
}

SpectralQubit::SpectralQubit(Real a, Real b) : a_(a), b_(b) {
  if (std::abs(a + b - 1) > 1e-14) {
    throw std::invalid_argument("SpectralQubit: a + b must equal 1");
  }
  if (a < 0 || a > 1 || b < 0 || b > 1) {
    throw std::invalid_argument("SpectralQubit: a, b must lie in [0, 1]");
  }
  if (a < b) {
    throw std::invalid_argument("SpectralQubit: requires a >= b (canonical ordering)");
  }
}

std::pair<Real, Real> eigenvalues_qubit(const BlochQubit& state) {
  const Real r = state.length();
  return {(1 + r) / 2, (1 - r) / 2};
}

Real fidelity(const BlochQubit& rho, const BlochQubit& zeta) {
  const Vector3& r = rho.bloch();
  const Vector3& p = zeta.bloch();
  // Qubit closed form of [Tr sqrt(sqrt(rho) zeta sqrt(rho))]^2, which equals
  // Tr(rho zeta) + 2 sqrt(det rho det zeta) in dimension two. Evaluating it
  // from the Bloch data avoids the matrix square root's precision loss on
  // rank-deficient states (a near-zero eigenvalue perturbed by roundoff costs
  // ~1e-8 after the root).
  const Real f = (1 + r.dot(p) + std::sqrt(det4(r) * det4(p))) / 2;
  return std::clamp(f, Real(0), Real(1));
}

}  // namespace qcb
