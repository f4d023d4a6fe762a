#pragma once

#include "qcb/types.hpp"

#include <cmath>
#include <vector>

namespace qcb {

struct ScalarMinimum {
  Real arg;
  Real value;
};

/// Golden-section search on [lo, hi], assuming a unimodal objective.
/// Shrinks the bracket to width `tol` and returns the midpoint.
template <typename F>
ScalarMinimum golden_section(F&& f, Real lo, Real hi, Real tol = 1e-10) {
  static const Real kInvPhi = (std::sqrt(Real(5)) - 1) / 2;  // 1/phi
  Real a = lo, b = hi;
  Real c = b - (b - a) * kInvPhi;
  Real d = a + (b - a) * kInvPhi;
  Real fc = f(c);
  Real fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = f(d);
    }
  }
  const Real mid = (a + b) / 2;
  return {mid, f(mid)};
}

namespace detail {

// Strict local minima no deeper than f_min + 1e-9; endpoints count.
inline int count_low_local_minima(const std::vector<Real>& fs, Real f_min) {
  const Real cut = f_min + 1e-9;
  int count = 0;
  const std::size_t n = fs.size();
  if (n >= 2 && fs[0] < fs[1] && fs[0] <= cut) ++count;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (fs[i] < fs[i - 1] && fs[i] < fs[i + 1] && fs[i] <= cut) ++count;
  }
  if (n >= 2 && fs[n - 1] < fs[n - 2] && fs[n - 1] <= cut) ++count;
  return count;
}

template <typename F>
ScalarMinimum scan_unit_interval(F& f, std::size_t points, bool coarse) {
  std::vector<Real> fs(points + 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i <= points; ++i) {
    fs[i] = f(Real(i) / Real(points));
    if (fs[i] < fs[best]) best = i;
  }
  if (coarse) {
    Real fmax = fs[0];
    for (const Real v : fs) fmax = std::max(fmax, v);
    // Constant objective (identical states): tie-break at s = 0.5.
    if (fmax - fs[best] <= 1e-14) return {0.5, f(Real(0.5))};
    if (count_low_local_minima(fs, fs[best]) > 1) {
      return scan_unit_interval(f, 1000000, false);
    }
  }
  const Real step = Real(1) / Real(points);
  const Real lo = best == 0 ? 0 : (best - 1) * step;
  const Real hi = best == points ? 1 : (best + 1) * step;
  return golden_section(f, lo, hi);
}

}  // namespace detail

/// Global minimum of f over [0, 1]: 1001-point coarse grid bracketing a
/// golden-section refinement, with a 10^6-point grid fallback if the coarse
/// scan is not unimodal. A constant objective reports arg = 0.5.
template <typename F>
ScalarMinimum minimize_unit_interval(F&& f) {
  return detail::scan_unit_interval(f, 1000, true);
}

}  // namespace qcb
