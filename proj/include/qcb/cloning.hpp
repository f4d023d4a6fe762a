#pragma once

#include "qcb/chernoff.hpp"
#include "qcb/qubit.hpp"

#include <cstdint>

namespace qcb {

/// An N -> M universal cloning machine: n_in input copies, m_out output
/// clones, m_out >= n_in >= 1.
class CloneSpec {
 public:
  CloneSpec(std::int64_t n_in, std::int64_t m_out);

  std::int64_t n_in() const { return n_in_; }
  std::int64_t m_out() const { return m_out_; }

 private:
  std::int64_t n_in_;
  std::int64_t m_out_;
};

/// The factor by which a clone's Bloch vector contracts, N(M+2)/(M(N+2)).
struct ShrinkingFactor {
  Real eta;
};

ShrinkingFactor shrinking_factor(const CloneSpec& spec);

/// Single-clone output state: Bloch vector eta * r.
BlochQubit clone_state(const CloneSpec& spec, const BlochQubit& input);

/// 2 -> M special case evaluated through its own coefficient (M+2)/(2M);
/// retained as an independent formula path for cross-checking clone_state.
BlochQubit clone_state_2toM(std::int64_t m_out, const BlochQubit& input);

/// Chernoff bound between an input of Bloch length r and its clone. Depends
/// on the input only through r (universality); both vectors are collinear.
ChernoffResult cloning_chernoff(const CloneSpec& spec, Real r);

}  // namespace qcb
