#pragma once

#include "qcb/types.hpp"

#include <utility>

namespace qcb {

/// Inputs whose Bloch length falls in (1, 1 + kPhysicalityTol] are snapped
/// back onto the sphere; anything longer is rejected.
inline constexpr Real kPhysicalityTol = 1e-12;

/// A single-qubit mixed state rho = (I + r.sigma)/2, held as its Bloch
/// vector r. Construction validates |r| <= 1 + kPhysicalityTol.
class BlochQubit {
 public:
  explicit BlochQubit(const Vector3& bloch);
  BlochQubit(Real x, Real y, Real z) : BlochQubit(Vector3(x, y, z)) {}

  const Vector3& bloch() const { return bloch_; }
  Real length() const { return bloch_.norm(); }

  /// 2x2 density matrix in the standard basis (sigma_z diagonal, spin-up first).
  Matrix2c matrix() const;
  static BlochQubit from_matrix(const Matrix2c& rho);

 private:
  Vector3 bloch_;
};

/// Diagonal qubit state rho = a|up><up| + b|down><down| with a + b = 1 and
/// a >= b (canonical ordering).
class SpectralQubit {
 public:
  SpectralQubit(Real a, Real b);
  explicit SpectralQubit(Real a) : SpectralQubit(a, Real(1) - a) {}

  Real a() const { return a_; }
  Real b() const { return b_; }

 private:
  Real a_;
  Real b_;
};

/// Bloch form of a diagonal state: (0, 0, a - b).
inline BlochQubit to_bloch(const SpectralQubit& s) { return BlochQubit(0, 0, s.a() - s.b()); }

/// Eigenvalues ((1+r)/2, (1-r)/2) of the density operator, r the Bloch length.
std::pair<Real, Real> eigenvalues_qubit(const BlochQubit& state);

/// Uhlmann-Jozsa fidelity [Tr sqrt(sqrt(rho) zeta sqrt(rho))]^2, evaluated
/// through the qubit closed form Tr(rho zeta) + 2 sqrt(det rho det zeta),
/// which stays accurate for rank-deficient states.
Real fidelity(const BlochQubit& rho, const BlochQubit& zeta);

}  // namespace qcb
