#include "qcb/cloning.hpp"

#include <string>

namespace qcb {

CloneSpec::CloneSpec(std::int64_t n_in, std::int64_t m_out) : n_in_(n_in), m_out_(m_out) {
  if (n_in < 1) {
    throw std::invalid_argument("CloneSpec: n_in must be >= 1, got " + std::to_string(n_in));
  }
  if (m_out < n_in) {
    throw std::invalid_argument("CloneSpec: m_out must satisfy M >= N, got M = " +
                                std::to_string(m_out) + " < N = " + std::to_string(n_in));
  }
}

ShrinkingFactor shrinking_factor(const CloneSpec& spec) {
  const std::int64_t n = spec.n_in(), m = spec.m_out();
  // Both int64 products are exact for n, m up to ~3e9; one rounding at the
  // divide keeps M = 10^6 sweeps full-precision.
  if (n <= 3000000000 && m <= 3000000000) {
    return {Real(n * (m + 2)) / Real(m * (n + 2))};
  }
  return {(Real(n) / Real(n + 2)) * (Real(m + 2) / Real(m))};
}

BlochQubit clone_state(const CloneSpec& spec, const BlochQubit& input) {
  return BlochQubit(Vector3(shrinking_factor(spec).eta * input.bloch()));
}

BlochQubit clone_state_2toM(std::int64_t m_out, const BlochQubit& input) {
  if (m_out < 2) {
    throw std::invalid_argument("clone_state_2toM: m_out must be >= 2, got " +
                                std::to_string(m_out));
  }
  const Real factor = Real(m_out + 2) / Real(2 * m_out);
  return BlochQubit(Vector3(factor * input.bloch()));
}

ChernoffResult cloning_chernoff(const CloneSpec& spec, Real r) {
  if (!(r >= 0 && r <= 1)) {
    throw std::invalid_argument("cloning_chernoff: r must lie in [0, 1], got " +
                                std::to_string(r));
  }
  const BlochQubit input(0, 0, r);
  return chernoff_bound(input, clone_state(spec, input));
}

}  // namespace qcb
