#ifndef XXZCORR_MODEL_HPP
#define XXZCORR_MODEL_HPP

#include "xxzcorr/qmat.hpp"

#include <cmath>

namespace xxz {

/// Couplings of the two-qubit XXZ chain with Dzyaloshinskii-Moriya term,
///   H = 1/2 [ J (XX + YY) + Jz ZZ + B (Z1 + Z2) + D (XY - YX) ],
/// in natural units (hbar = k = 1).
struct SpinParams {
  double J = 0.0;
  double Jz = 0.0;
  double B = 0.0;
  double D = 0.0;

  [[nodiscard]] double mu() const { return std::hypot(J, D); }
};

struct ThermalSpec {
  SpinParams params;
  double T = 1.0;  // > 0
};

struct EvolutionSpec {
  SpinParams params;
  double gamma = 0.0;  // intrinsic decoherence rate, >= 0
  double t = 0.0;      // >= 0
  TwoQubitState initial;
};

enum class BellState { psi1, psi2 };

[[nodiscard]] Matrix4c build_hamiltonian(const SpinParams& p);

/// Closed-form spectrum in ascending order. Eigenvectors are |00>, |11> and
/// (|01> +- e^{i chi}|10>)/sqrt2 with e^{i chi} = (J - iD)/mu; for mu = 0 the
/// degenerate block uses |01>, |10>.
[[nodiscard]] HermitianEigensystem<4> analytic_eigensystem(const SpinParams& p);

/// exp(-H/T)/Z from the numerical spectrum of build_hamiltonian, with the
/// largest Boltzmann exponent shifted out before exponentiating.
[[nodiscard]] TwoQubitState gibbs_state(const ThermalSpec& spec);

/// Zero-temperature limit: equal mixture over the lowest eigenspace.
[[nodiscard]] TwoQubitState ground_state(const SpinParams& p);

/// Milburn intrinsic-decoherence evolution, solved in the energy eigenbasis:
///   rho_mn(t) = exp(-gamma t (E_m - E_n)^2 / 2 - i (E_m - E_n) t) rho_mn(0).
[[nodiscard]] TwoQubitState milburn_evolve(const EvolutionSpec& spec);

[[nodiscard]] TwoQubitState bell_state(BellState which);

}  // namespace xxz

#endif  // XXZCORR_MODEL_HPP
