#include "xxzcorr/model.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace xxz {

namespace {

constexpr int k00 = 0, k01 = 1, k10 = 2, k11 = 3;

// Absolute spread below which two eigenvalues count as one level.
double degeneracy_tolerance(const Eigen::Vector4d& values) {
  return 1e-10 * std::max(1.0, values.cwiseAbs().maxCoeff());
}

}  // namespace

Matrix4c build_hamiltonian(const SpinParams& p) {
  Matrix4c h = Matrix4c::Zero();
  h(k00, k00) = (p.Jz + 2.0 * p.B) / 2.0;
  h(k01, k01) = -p.Jz / 2.0;
  h(k10, k10) = -p.Jz / 2.0;
  h(k11, k11) = (p.Jz - 2.0 * p.B) / 2.0;
  h(k01, k10) = cplx(p.J, p.D);
  h(k10, k01) = cplx(p.J, -p.D);
  return h;
}

HermitianEigensystem<4> analytic_eigensystem(const SpinParams& p) {
  const double mu = p.mu();
  const double s = 1.0 / std::sqrt(2.0);
  const cplx phase = mu > 0.0 ? cplx(p.J, -p.D) / mu : cplx(1.0);

  std::array<double, 4> energies{(p.Jz + 2.0 * p.B) / 2.0, (p.Jz - 2.0 * p.B) / 2.0, -p.Jz / 2.0 + mu,
                                 -p.Jz / 2.0 - mu};
  std::array<Eigen::Vector4cd, 4> vectors;
  for (auto& v : vectors) v.setZero();
  vectors[0](k00) = 1.0;
  vectors[1](k11) = 1.0;
  if (mu > 0.0) {
    vectors[2](k01) = s;
    vectors[2](k10) = s * phase;
    vectors[3](k01) = s;
    vectors[3](k10) = -s * phase;
  } else {
    vectors[2](k01) = 1.0;
    vectors[3](k10) = 1.0;
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return energies[a] < energies[b]; });

  HermitianEigensystem<4> out;
  for (int k = 0; k < 4; ++k) {
    out.values(k) = energies[order[k]];
    out.vectors.col(k) = vectors[order[k]];
  }
  return out;
}

TwoQubitState gibbs_state(const ThermalSpec& spec) {
  if (!(spec.T > 0.0)) throw std::invalid_argument("gibbs_state: temperature must be > 0");
  const auto eig = hermitian_eig<4>(build_hamiltonian(spec.params));
  // Ascending energies: -E_0/T is the largest exponent.
  Eigen::Vector4d w;
  for (int k = 0; k < 4; ++k) w(k) = std::exp(-(eig.values(k) - eig.values(0)) / spec.T);
  w /= w.sum();
  Matrix4c rho = eig.vectors * w.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  rho /= rho.trace().real();
  return TwoQubitState(rho);
}

TwoQubitState ground_state(const SpinParams& p) {
  const auto eig = hermitian_eig<4>(build_hamiltonian(p));
  const double tol = degeneracy_tolerance(eig.values);
  int count = 0;
  while (count < 4 && eig.values(count) - eig.values(0) <= tol) ++count;
  Matrix4c rho = Matrix4c::Zero();
  for (int k = 0; k < count; ++k) rho += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  rho /= static_cast<double>(count);
  return TwoQubitState(0.5 * (rho + rho.adjoint()));
}

TwoQubitState milburn_evolve(const EvolutionSpec& spec) {
  if (!(spec.gamma >= 0.0)) throw std::invalid_argument("milburn_evolve: gamma must be >= 0");
  if (!(spec.t >= 0.0)) throw std::invalid_argument("milburn_evolve: t must be >= 0");
  if (spec.t == 0.0) return spec.initial;

  const auto eig = hermitian_eig<4>(build_hamiltonian(spec.params));
  Matrix4c in_energy_basis = eig.vectors.adjoint() * spec.initial.matrix() * eig.vectors;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      if (m == n) continue;
      const double gap = eig.values(m) - eig.values(n);
      in_energy_basis(m, n) *= std::exp(cplx(-0.5 * spec.gamma * spec.t * gap * gap, -gap * spec.t));
    }
  Matrix4c rho = eig.vectors * in_energy_basis * eig.vectors.adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  rho /= rho.trace().real();
  return TwoQubitState(rho);
}

TwoQubitState bell_state(BellState which) {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  if (which == BellState::psi1) {
    psi(k01) = s;
    psi(k10) = s;
  } else {
    psi(k00) = s;
    psi(k11) = s;
  }
  Matrix4c rho = psi * psi.adjoint();
  // Entries are exactly 1/2; avoid 0.4999... from s*s.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(rho(i, j)) > 0.0) rho(i, j) = 0.5;
  return TwoQubitState(rho);
}

}  // namespace xxz
