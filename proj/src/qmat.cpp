#include "xxzcorr/qmat.hpp"

namespace xxz {
namespace pauli {

namespace {
const cplx I{0.0, 1.0};
}

const Matrix2c& identity() {
  static const Matrix2c m = Matrix2c::Identity();
  return m;
}

const Matrix2c& x() {
  static const Matrix2c m = (Matrix2c() << 0, 1, 1, 0).finished();
  return m;
}

const Matrix2c& y() {
  static const Matrix2c m = (Matrix2c() << 0, -I, I, 0).finished();
  return m;
}

const Matrix2c& z() {
  static const Matrix2c m = (Matrix2c() << 1, 0, 0, -1).finished();
  return m;
}

const Matrix2c& sigma(int i) {
  switch (i) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw std::out_of_range("pauli::sigma: index must be 0..3");
  }
}

}  // namespace pauli

QubitState reduced_state(const TwoQubitState& rho, Subsystem keep) {
  Matrix2c r = partial_trace(rho.matrix(), keep);
  return QubitState(0.5 * (r + r.adjoint()));
}

}  // namespace xxz
