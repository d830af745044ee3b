#include "xxzcorr/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxz {

namespace {

const double kLn4 = std::log(4.0);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_positive_temperature(const ThermalSpec& spec) {
  if (!(spec.T > 0.0)) throw std::invalid_argument("closed forms need T > 0, got T = " + std::to_string(spec.T));
}

void require_nonnegative(double gamma, double t) {
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
}

// x ln x with 0 ln 0 = 0; NaN outside the real domain.
double xlnx(double x) {
  if (x == 0.0) return 0.0;
  if (x < 0.0) return kNaN;
  return x * std::log(x);
}

// -(1 + s nu)/ln4 * ln((1 + s nu)/2)
double half_entropy_term(double nu, double sign) {
  const double a = 1.0 + sign * nu;
  if (a == 0.0) return 0.0;
  if (a < 0.0) return kNaN;
  return -a / kLn4 * std::log(a / 2.0);
}

double binary_entropy(double p) {
  const std::array<double, 2> v{p, 1.0 - p};
  return entropy_of_spectrum(v);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::string_view to_string(FormulaVariant v) { return v == FormulaVariant::printed ? "printed" : "corrected"; }

FormulaVariant parse_formula_variant(std::string_view s) {
  if (s == "printed") return FormulaVariant::printed;
  if (s == "corrected") return FormulaVariant::corrected;
  throw std::invalid_argument("unknown formula variant '" + std::string(s) + "' (expected printed|corrected)");
}

double ThermalIntermediates::partition() const { return std::exp(log_Z); }

ThermalIntermediates thermal_intermediates(const ThermalSpec& spec, FormulaVariant variant) {
  require_positive_temperature(spec);
  const auto& p = spec.params;
  const double T = spec.T;
  const double mu = p.mu();
  const bool printed = variant == FormulaVariant::printed;

  // Boltzmann exponents -E/T of |00>, |11>, and the lower/upper exchange level.
  const std::array<double, 4> expo{-(p.Jz + 2.0 * p.B) / (2.0 * T), -(p.Jz - 2.0 * p.B) / (2.0 * T),
                                   (p.Jz + 2.0 * mu) / (2.0 * T), (p.Jz - 2.0 * mu) / (2.0 * T)};
  const double shift = *std::max_element(expo.begin(), expo.end());
  std::array<double, 4> w{};
  double z_scaled = 0.0;
  for (int i = 0; i < 4; ++i) {
    w[i] = std::exp(expo[i] - shift);
    z_scaled += w[i];
  }

  ThermalIntermediates out;
  out.log_Z = shift + std::log(z_scaled);
  for (int i = 0; i < 4; ++i) out.eta[i] = w[i] / z_scaled;
  const auto& eta = out.eta;

  // e^{Jz/2T} cosh(mu/T) / Z
  out.omega = 0.5 * (eta[2] + eta[3]);
  out.lambda_plus = eta[0] + out.omega;
  out.lambda_minus = eta[1] + out.omega;
  out.entropy_A = binary_entropy(out.lambda_plus);
  out.entropy_AB = entropy_of_spectrum(eta);

  // delta: sqrt((e^{2B/T}-1)^2 + 4 e^{2(B+Jz)/T} sinh^2(mu/T)) / (Z e^{(2B+Jz)/2T})
  const double delta = std::hypot(eta[1] - eta[0], eta[2] - eta[3]);
  out.delta = printed ? 2.0 * delta : delta;
  out.Lambda1 = (kLn4 - xlnx(1.0 - out.delta) - xlnx(1.0 + out.delta)) / kLn4;

  // e^{(Jz +- B)/T} cosh(mu/T) = omega / eta_{1,2}
  out.nu1 = std::abs(out.omega - eta[0]) / (out.omega + eta[0]);
  if (printed) {
    out.nu2 = std::abs(out.omega - eta[0]) / eta[0] * (eta[1] / (eta[1] + out.omega));
  } else {
    out.nu2 = std::abs(out.omega - eta[1]) / (out.omega + eta[1]);
  }
  out.xi_plus = half_entropy_term(out.nu1, +1.0);
  out.xi_minus = half_entropy_term(out.nu1, -1.0);
  out.zeta_plus = half_entropy_term(out.nu2, +1.0);
  out.zeta_minus = half_entropy_term(out.nu2, -1.0);
  out.Lambda2 = (eta[0] + out.omega) * (out.xi_minus + out.xi_plus) + (eta[1] + out.omega) * (out.zeta_minus + out.zeta_plus);

  // GMD helpers, already divided by Z^2:
  //   2 e^{-Jz/T} cosh(2B/T)          = eta1^2 + eta2^2
  //   4 cosh(B/T) cosh(mu/T)          = (eta1 + eta2)(eta3 + eta4)
  //   e^{Jz/T} (3 cosh(2mu/T) - 1)    = 3/2 (eta3^2 + eta4^2) - eta3 eta4
  out.Omega = eta[0] * eta[0] + eta[1] * eta[1] - (eta[0] + eta[1]) * (eta[2] + eta[3]) +
              1.5 * (eta[2] * eta[2] + eta[3] * eta[3]) - eta[2] * eta[3];
  const double diag_gap = eta[0] + eta[1] - eta[2] - eta[3];
  out.Gamma1 = diag_gap * diag_gap + (eta[0] - eta[1]) * (eta[0] - eta[1]);
  out.Gamma2 = (eta[2] - eta[3]) * (eta[2] - eta[3]);
  return out;
}

double thermal_concurrence(const ThermalSpec& spec, FormulaVariant variant) {
  const auto in = thermal_intermediates(spec, variant);
  // 2 e^{Jz/2T} sinh(mu/T) / Z = eta3 - eta4;  e^{-Jz/2T} / Z = sqrt(eta1 eta2)
  const double coherence = in.eta[2] - in.eta[3];
  const double populations = std::sqrt(in.eta[0] * in.eta[1]);
  const double c = variant == FormulaVariant::printed ? coherence - populations : coherence - 2.0 * populations;
  return std::max(c, 0.0);
}

ThermalCorrelations thermal_cc_qd(const ThermalSpec& spec, FormulaVariant variant) {
  ThermalCorrelations out;
  out.inter = thermal_intermediates(spec, variant);
  const double s_min = out.inter.min_conditional_entropy();
  out.CC = out.inter.entropy_A - s_min;
  out.QD = out.inter.entropy_A - out.inter.entropy_AB + s_min;
  return out;
}

double thermal_gmd(const ThermalSpec& spec) {
  const auto in = thermal_intermediates(spec);
  return std::max(in.Omega - 0.5 * std::max(in.Gamma1, in.Gamma2), 0.0);
}

CorrelationSet thermal_correlation_set(const ThermalSpec& spec, FormulaVariant variant) {
  const auto d = thermal_cc_qd(spec, variant);
  return {thermal_concurrence(spec, variant), std::max(d.CC, 0.0), std::max(d.QD, 0.0), thermal_gmd(spec)};
}

DynamicsResult dynamics_psi1(const SpinParams& p, double gamma, double t, FormulaVariant variant) {
  require_nonnegative(gamma, t);
  const double mu = p.mu();
  if (!(mu > 0.0))
    throw std::domain_error("Psi1 closed form needs mu = sqrt(J^2 + D^2) > 0; evaluate milburn_evolve + measures instead");
  const bool printed = variant == FormulaVariant::printed;
  const double x = mu * mu * gamma * t;  // mu^2 gamma t
  const double damp2 = std::exp(-2.0 * x);
  const double damp4 = std::exp(-4.0 * x);

  DynamicsResult out;
  auto& a = out.inter.alpha;
  const double s = p.D / mu * damp2 * std::sin(2.0 * mu * t);
  a[0] = 0.5 * (1.0 + s);
  a[1] = 0.5 * (1.0 - s);
  // e^{-2x} sqrt(D^2 + J^2 e^{2x}) as printed; e^{-2x} sqrt(D^2 + J^2 e^{4x}) corrected.
  const double r = printed ? std::sqrt(p.D * p.D * damp4 + p.J * p.J * damp2) : std::sqrt(p.D * p.D * damp4 + p.J * p.J);
  a[2] = 0.5 * (1.0 + r / mu);
  a[3] = 0.5 * (1.0 - r / mu);
  for (auto& v : a) v = clamp01(v);

  const double c2 = std::cos(2.0 * mu * t);
  double radicand = p.J * p.J + p.D * p.D * damp4 * (printed ? c2 : c2 * c2);
  if (radicand < 0.0) {
    out.radicand_negative = true;
    radicand = 0.0;
  }
  const double c4 = std::cos(4.0 * mu * t);
  const double gmd_osc = printed ? 1.0 + c4 * c4 : 1.0 + c4;

  const double h12 = entropy_of_spectrum(std::span<const double>(a.data(), 2));
  const double h34 = entropy_of_spectrum(std::span<const double>(a.data() + 2, 2));
  out.values.C = clamp01(std::sqrt(radicand) / mu);
  out.values.CC = clamp01(h12);
  out.values.QD = clamp01(h12 - h34);
  out.values.GMD2 = clamp01((2.0 * p.J * p.J + p.D * p.D * damp4 * gmd_osc) / (2.0 * mu * mu));
  return out;
}

DynamicsResult dynamics_psi2(const SpinParams& p, double gamma, double t) {
  require_nonnegative(gamma, t);
  const double x = p.B * p.B * gamma * t;
  const double coherence = std::exp(-2.0 * x);
  DynamicsResult out;
  out.inter.beta = {0.5 * (1.0 + coherence), 0.5 * (1.0 - coherence)};
  out.values.C = coherence;
  out.values.QD = clamp01(1.0 - entropy_of_spectrum(out.inter.beta));
  out.values.CC = 1.0;
  out.values.GMD2 = std::exp(-4.0 * x);
  return out;
}

}  // namespace xxz
