#pragma once

#include "qcb/qubit.hpp"
#include "qcb/types.hpp"

namespace qcb {

/// Largest matrix dimension the dense eigensolver paths accept (2^12).
inline constexpr Eigen::Index kMaxOperatorDim = 4096;

/// Square complex matrix checked for Hermiticity on construction
/// (entry(i,j) == conj(entry(j,i)) to 1e-12).
class HermitianOperator {
 public:
  explicit HermitianOperator(MatrixXc entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const MatrixXc& entries() const { return entries_; }
  Real trace() const { return entries_.trace().real(); }

 private:
  MatrixXc entries_;
};

/// All eigenvalues, ascending. Dense solve; real-symmetric inputs take the
/// real path.
VectorX eigenvalues(const HermitianOperator& op);

/// Sum of absolute eigenvalues. Rejects dim > 4096.
Real trace_norm(const HermitianOperator& op);

/// k-fold tensor power rho^(x k) of a qubit density matrix, k in [1, 12].
HermitianOperator tensor_power(const BlochQubit& state, int k);

}  // namespace qcb
