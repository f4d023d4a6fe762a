#include "qcb/chernoff.hpp"

#include "qcb/hermitian.hpp"
#include "qcb/minimize.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace qcb {

namespace {

void check_s(Real s) {
  if (!(s >= 0 && s <= 1)) {
    throw std::invalid_argument("renyi_overlap: s must lie in [0, 1], got " + std::to_string(s));
  }
}

// Cosine of the angle between Bloch vectors; 1 when either state is
// (numerically) maximally mixed, where Q_s does not depend on the angle.
Real bloch_cosine(const Vector3& r, const Vector3& p) {
  const Real rn = r.norm(), pn = p.norm();
  if (rn < 1e-14 || pn < 1e-14) return 1;
  return std::clamp(r.dot(p) / (rn * pn), Real(-1), Real(1));
}

}  // namespace

Real renyi_overlap(const BlochQubit& rho, const BlochQubit& zeta, Real s) {
  check_s(s);
  const auto [lam, lam_t] = eigenvalues_qubit(rho);
  const auto [mu, mu_t] = eigenvalues_qubit(zeta);
  // Eigenbasis overlap weights via the half-angle identities: exact 0/1 at
  // parallel and antiparallel Bloch vectors, where acos followed by cos/sin
  // would leave ~1e-33 residue (and a spuriously finite exponent for
  // orthogonal pure states).
  const Real cosine = bloch_cosine(rho.bloch(), zeta.bloch());
  const Real c2 = (1 + cosine) / 2;
  const Real s2 = (1 - cosine) / 2;
  const Real aligned = support_pow(lam, s) * support_pow(mu, 1 - s) +
                       support_pow(lam_t, s) * support_pow(mu_t, 1 - s);
  const Real crossed = support_pow(lam, s) * support_pow(mu_t, 1 - s) +
                       support_pow(lam_t, s) * support_pow(mu, 1 - s);
  return aligned * c2 + crossed * s2;
}

Real renyi_overlap_collinear(Real r, Real p, Real s) {
  check_s(s);
  return support_pow((1 + r) / 2, s) * support_pow((1 + p) / 2, 1 - s) +
         support_pow((1 - r) / 2, s) * support_pow((1 - p) / 2, 1 - s);
}

ChernoffResult chernoff_bound(const BlochQubit& rho, const BlochQubit& zeta) {
  // Bitwise-identical inputs have Q_s = Tr(rho) = 1 at every s; shortcutting
  // them keeps xi exactly zero (pow roundoff would otherwise leave ~1e-16 on
  // e.g. the M = N diagonal of the cloning surface).
  if (rho.bloch() == zeta.bloch()) return {0.5, 1, 0};
  const auto m = minimize_unit_interval([&](Real s) { return renyi_overlap(rho, zeta, s); });
  const Real q = std::clamp(m.value, Real(0), Real(1));
  // The + 0.0 turns -log(1) = -0.0 into plain zero.
  const Real xi = q > 0 ? -std::log(q) + 0.0 : std::numeric_limits<Real>::infinity();
  return {m.arg, q, xi};
}

Real min_error_probability(const DiscriminationTask& task) {
  if (task.copies < 1) {
    throw std::invalid_argument("min_error_probability: k must be >= 1");
  }
  if (task.copies > 12) {
    throw ResourceCapError("min_error_probability: k = " + std::to_string(task.copies) +
                           " exceeds the dense-eigensolver cap of 12");
  }
  MatrixXc diff = tensor_power(task.rho, task.copies).entries();
  diff -= tensor_power(task.zeta, task.copies).entries();
  const Real t1 = trace_norm(HermitianOperator(std::move(diff)));
  return std::clamp(Real(0.5) * (1 - Real(0.5) * t1), Real(0), Real(0.5));
}

Real min_error_pure(Real overlap_sq, int copies) {
  if (!(overlap_sq >= 0 && overlap_sq <= 1)) {
    throw std::invalid_argument("min_error_pure: transition probability must lie in [0, 1]");
  }
  if (copies < 1) {
    throw std::invalid_argument("min_error_pure: k must be >= 1");
  }
  return Real(0.5) * (1 - std::sqrt(1 - std::pow(overlap_sq, copies)));
}

SandwichReport verify_sandwich(const BlochQubit& rho, const BlochQubit& zeta) {
  const Real f = fidelity(rho, zeta);
  const Real q = chernoff_bound(rho, zeta).q_min;
  const Real root = std::sqrt(f);
  const bool holds = f <= q + 1e-10 && q <= root + 1e-10;
  return {f, q, root, holds};
}

}  // namespace qcb
