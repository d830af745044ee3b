#ifndef XXZCORR_CLOSEDFORM_HPP
#define XXZCORR_CLOSEDFORM_HPP

#include "xxzcorr/measures.hpp"
#include "xxzcorr/model.hpp"

#include <array>
#include <string_view>

namespace xxz {

/// Which version of an analytic expression to evaluate.
///
/// `printed` reproduces the published expressions literally. `corrected`
/// applies the fixes confirmed against the numerical oracles:
///   thermal concurrence: the e^{-Jz/2T} term carries a factor 2;
///   delta:               no leading factor 2;
///   nu_2:                numerator uses e^{(Jz - B)/T};
///   Psi1 concurrence:    cos(2 mu t) -> cos^2(2 mu t) in the radicand;
///   Psi1 GMD:            cos^2(4 mu t) -> cos(4 mu t);
///   Psi1 alpha_{3,4}:    e^{2 mu^2 gamma t} -> e^{4 mu^2 gamma t}.
enum class FormulaVariant { corrected, printed };

[[nodiscard]] std::string_view to_string(FormulaVariant v);
[[nodiscard]] FormulaVariant parse_formula_variant(std::string_view s);

/// Helper quantities of the thermal closed forms. Boltzmann factors are kept
/// normalized (eta), so nothing overflows at low T; the partition function is
/// reported through its logarithm.
struct ThermalIntermediates {
  double log_Z = 0.0;
  double lambda_plus = 0.0;  // eigenvalues of rho_A = rho_B
  double lambda_minus = 0.0;
  std::array<double, 4> eta{};  // |00>, |11>, lower and upper |01>/|10> level
  double omega = 0.0;
  double delta = 0.0;
  double Lambda1 = 0.0;  // conditional entropy, theta = pi/4 branch
  double Lambda2 = 0.0;  // conditional entropy, theta = 0 branch
  double nu1 = 0.0, nu2 = 0.0;
  double xi_plus = 0.0, xi_minus = 0.0;
  double zeta_plus = 0.0, zeta_minus = 0.0;
  double entropy_A = 0.0;
  double entropy_AB = 0.0;
  double Omega = 0.0, Gamma1 = 0.0, Gamma2 = 0.0;

  [[nodiscard]] double partition() const;
  [[nodiscard]] double min_conditional_entropy() const { return Lambda1 < Lambda2 ? Lambda1 : Lambda2; }
  /// True when the theta = 0 (sigma_z) measurement is optimal.
  [[nodiscard]] bool z_measurement_optimal() const { return Lambda2 < Lambda1; }
};

struct ThermalCorrelations {
  double CC = 0.0;
  double QD = 0.0;
  ThermalIntermediates inter;
};

[[nodiscard]] ThermalIntermediates thermal_intermediates(const ThermalSpec& spec,
                                                         FormulaVariant variant = FormulaVariant::corrected);

[[nodiscard]] double thermal_concurrence(const ThermalSpec& spec, FormulaVariant variant = FormulaVariant::corrected);

[[nodiscard]] ThermalCorrelations thermal_cc_qd(const ThermalSpec& spec,
                                                FormulaVariant variant = FormulaVariant::corrected);

/// 2 D_G = Omega - 1/2 max{Gamma1, Gamma2}, clamped at 0.
[[nodiscard]] double thermal_gmd(const ThermalSpec& spec);

[[nodiscard]] CorrelationSet thermal_correlation_set(const ThermalSpec& spec,
                                                     FormulaVariant variant = FormulaVariant::corrected);

struct DynIntermediates {
  std::array<double, 4> alpha{};  // Psi1
  std::array<double, 2> beta{};   // Psi2
};

struct DynamicsResult {
  CorrelationSet values;
  DynIntermediates inter;
  /// Psi1 only: the concurrence radicand was negative and got clamped to 0.
  bool radicand_negative = false;
};

/// Correlations of rho(t) for the initial state (|01> + |10>)/sqrt2.
/// Requires mu > 0; throws std::domain_error otherwise. Defaults to the
/// expressions as published.
[[nodiscard]] DynamicsResult dynamics_psi1(const SpinParams& p, double gamma, double t,
                                           FormulaVariant variant = FormulaVariant::printed);

/// Correlations of rho(t) for the initial state (|00> + |11>)/sqrt2.
[[nodiscard]] DynamicsResult dynamics_psi2(const SpinParams& p, double gamma, double t);

}  // namespace xxz

#endif  // XXZCORR_CLOSEDFORM_HPP
