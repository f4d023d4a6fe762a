#include "qcb/hermitian.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qcb {

HermitianOperator::HermitianOperator(MatrixXc entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
  }
  const Real dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-12) {
    throw std::invalid_argument("HermitianOperator: matrix deviates from Hermiticity by " +
                                std::to_string(dev) + " (> 1e-12)");
  }
}

VectorX eigenvalues(const HermitianOperator& op) {
  const MatrixXc& m = op.entries();
  if ((m.imag().array() == 0.0).all()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real(), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Real trace_norm(const HermitianOperator& op) {
  if (op.dim() > kMaxOperatorDim) {
    throw ResourceCapError("trace_norm: dimension " + std::to_string(op.dim()) +
                           " exceeds cap " + std::to_string(kMaxOperatorDim));
  }
  return eigenvalues(op).cwiseAbs().sum();
}

HermitianOperator tensor_power(const BlochQubit& state, int k) {
  if (k < 1) {
    throw std::invalid_argument("tensor_power: k must be >= 1, got " + std::to_string(k));
  }
  if (k > 12) {
    throw ResourceCapError("tensor_power: k = " + std::to_string(k) +
                           " exceeds the dense-operator cap of 12");
  }
  const Matrix2c single = state.matrix();
  MatrixXc out = single;
  for (int i = 1; i < k; ++i) out = kron(out, single);
  return HermitianOperator(std::move(out));
}

}  // namespace qcb
