#ifndef XXZCORR_QMAT_HPP
#define XXZCORR_QMAT_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace xxz {

using cplx = std::complex<double>;

template <typename Scalar, int N>
using SquareMatrixC = Eigen::Matrix<std::complex<Scalar>, N, N>;

using Matrix2c = SquareMatrixC<double, 2>;
using Matrix4c = SquareMatrixC<double, 4>;

// Computational basis ordering everywhere: |00>, |01>, |10>, |11>, first
// factor is subsystem A.
enum class Subsystem { A, B };

namespace pauli {
const Matrix2c& identity();
const Matrix2c& x();
const Matrix2c& y();
const Matrix2c& z();
/// sigma_0 = I, sigma_1..3 = x, y, z.
const Matrix2c& sigma(int i);
}  // namespace pauli

template <typename Derived>
[[nodiscard]] double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Kronecker product of two single-qubit operators.
template <typename DerivedA, typename DerivedB>
[[nodiscard]] Matrix4c kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw std::invalid_argument("kron: both factors must be 2x2");
  }
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.template block<2, 2>(2 * i, 2 * j) = cplx(a(i, j)) * b;
  return out;
}

/// Reduced operator on `keep` after tracing out the other qubit.
template <typename Derived>
[[nodiscard]] Matrix2c partial_trace(const Eigen::MatrixBase<Derived>& rho, Subsystem keep) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("partial_trace: expected a 4x4 operator");
  Matrix2c out = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (keep == Subsystem::A)
          out(i, j) += rho(2 * i + k, 2 * j + k);
        else
          out(i, j) += rho(2 * k + i, 2 * k + j);
      }
  return out;
}

template <int N>
struct HermitianEigensystem {
  Eigen::Matrix<double, N, 1> values;  // ascending
  SquareMatrixC<double, N> vectors;    // columns, orthonormal
};

inline constexpr double kHermitianInputTolerance = 1e-10;

/// Eigendecomposition of a small Hermitian matrix (N = 2 or 4). The input is
/// symmetrized before solving; a Hermiticity defect above 1e-10 relative to
/// max(1, |A|) is rejected.
template <int N>
[[nodiscard]] HermitianEigensystem<N> hermitian_eig(const SquareMatrixC<double, N>& a) {
  static_assert(N == 2 || N == 4, "hermitian_eig: only 2x2 and 4x4 are supported");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (!a.allFinite()) throw std::invalid_argument("hermitian_eig: non-finite entries");
  if (hermiticity_defect(a) > kHermitianInputTolerance * scale)
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  const SquareMatrixC<double, N> sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<SquareMatrixC<double, N>> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// V f(Lambda) V^dagger. Throws std::domain_error if f is not finite on some
/// eigenvalue.
template <int N, typename F>
[[nodiscard]] SquareMatrixC<double, N> func_of_hermitian(const SquareMatrixC<double, N>& a, F&& f) {
  const auto eig = hermitian_eig<N>(a);
  Eigen::Matrix<double, N, 1> mapped;
  for (int k = 0; k < N; ++k) {
    mapped(k) = f(eig.values(k));
    if (!std::isfinite(mapped(k)))
      throw std::domain_error("func_of_hermitian: function undefined at eigenvalue " + std::to_string(eig.values(k)));
  }
  SquareMatrixC<double, N> out = eig.vectors * mapped.template cast<cplx>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

/// Validated density operator: Hermitian, unit trace, positive semidefinite.
template <int N>
class DensityMatrix {
 public:
  static_assert(N == 2 || N == 4);
  using Matrix = SquareMatrixC<double, N>;

  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kNegativeEigenvalueTolerance = 1e-10;

  explicit DensityMatrix(const Matrix& m) : m_(m) {
    validate(m_, kHermitianTolerance, kTraceTolerance, kNegativeEigenvalueTolerance);
  }

  /// Looser intake used for externally supplied states: all checks run at
  /// `tolerance`, then the trace is renormalized to exactly 1.
  static DensityMatrix normalized(const Matrix& m, double tolerance) {
    validate(m, tolerance, tolerance, tolerance);
    Matrix h = 0.5 * (m + m.adjoint());
    h /= h.trace().real();
    return DensityMatrix(h);
  }

  [[nodiscard]] const Matrix& matrix() const { return m_; }
  [[nodiscard]] const cplx& operator()(int i, int j) const { return m_(i, j); }
  [[nodiscard]] static constexpr int dim() { return N; }
  [[nodiscard]] double purity() const { return (m_ * m_).trace().real(); }

 private:
  static void validate(const Matrix& m, double herm_tol, double trace_tol, double eig_tol) {
    if (!m.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
    if (hermiticity_defect(m) > herm_tol) throw std::invalid_argument("density matrix is not Hermitian");
    const cplx tr = m.trace();
    if (std::abs(tr - cplx(1.0)) > trace_tol)
      throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(Matrix(0.5 * (m + m.adjoint())), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues()(0) < -eig_tol) throw std::invalid_argument("density matrix is not positive semidefinite");
  }

  Matrix m_;
};

using TwoQubitState = DensityMatrix<4>;
using QubitState = DensityMatrix<2>;

[[nodiscard]] QubitState reduced_state(const TwoQubitState& rho, Subsystem keep);

}  // namespace xxz

#endif  // XXZCORR_QMAT_HPP
