#include "doctest.h"
#include "oracles.hpp"
#include "xxzcorr/closedform.hpp"
#include "xxzcorr/measures.hpp"
#include "xxzcorr/model.hpp"

using namespace xxz;

namespace {
double h2(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

// Eq. 16 typed in literally with raw exponentials.
double printed_concurrence_literal(const SpinParams& p, double T) {
  const double mu = p.mu();
  const double Z = std::exp(-(2 * p.B + p.Jz) / (2 * T)) *
                   (1 + std::exp(2 * p.B / T) + 2 * std::exp((p.B + p.Jz) / T) * std::cosh(mu / T));
  return std::max((2 * std::exp(p.Jz / (2 * T)) * std::sinh(mu / T) - std::exp(-p.Jz / (2 * T))) / Z, 0.0);
}
}  // namespace

TEST_CASE("formula variant names") {
  CHECK(parse_formula_variant("printed") == FormulaVariant::printed);
  CHECK(parse_formula_variant("corrected") == FormulaVariant::corrected);
  CHECK(to_string(FormulaVariant::printed) == "printed");
  CHECK_THROWS_AS((void)parse_formula_variant("fixed"), std::invalid_argument);
}

TEST_CASE("thermal intermediates are well formed") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-3, 3), uT(0.05, 10);
  for (int n = 0; n < 200; ++n) {
    const ThermalSpec s{{u(rng), u(rng), u(rng), u(rng)}, uT(rng)};
    const auto in = thermal_intermediates(s);
    double sum = 0.0;
    for (double e : in.eta) {
      CHECK(e >= 0.0);
      sum += e;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(in.lambda_plus + in.lambda_minus - 1.0) < 1e-12);
    CHECK(in.delta >= 0.0);
    CHECK(in.Lambda1 >= -1e-12);
    CHECK(in.Lambda1 <= 1 + 1e-9);
    CHECK(in.Lambda2 >= -1e-12);
    CHECK(in.Lambda2 <= 1 + 1e-9);
  }
  // no overflow deep in the cold regime
  const auto cold = thermal_intermediates({{1, -0.5, 4, 2}, 0.02});
  CHECK(std::isfinite(cold.log_Z));
  CHECK(std::isfinite(thermal_concurrence({{1, -0.5, 4, 2}, 0.02})));
}

TEST_CASE("partition function matches the printed Z") {
  const SpinParams p{0.7, -0.4, 1.1, 0.3};
  const double T = 0.8;
  const double Z = std::exp(-(2 * p.B + p.Jz) / (2 * T)) *
                   (1 + std::exp(2 * p.B / T) + 2 * std::exp((p.B + p.Jz) / T) * std::cosh(p.mu() / T));
  CHECK(thermal_intermediates({p, T}).partition() == doctest::Approx(Z).epsilon(1e-13));
}

TEST_CASE("thermal concurrence") {
  CHECK(thermal_concurrence({{0, 0.4, 0.3, 0}, 0.7}) == 0.0);
  CHECK(thermal_concurrence({{1, 0, 0, 0}, 0.01}) == doctest::Approx(1.0).epsilon(1e-6));
  const ThermalSpec s{{1, -0.5, 0, 0}, 0.5};
  CHECK(std::abs(thermal_concurrence(s) - concurrence(gibbs_state(s))) < 1e-10);
  CHECK(std::abs(thermal_concurrence(s) - 0.14020241203646) < 1e-12);

  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-2, 2), uT(0.1, 5);
  for (int n = 0; n < 200; ++n) {
    const ThermalSpec r{{u(rng), u(rng), u(rng), u(rng)}, uT(rng)};
    CHECK(std::abs(thermal_concurrence(r) - oracle::wootters(gibbs_state(r).matrix())) < 1e-7);
    CHECK(std::abs(thermal_concurrence(r, FormulaVariant::printed) - printed_concurrence_literal(r.params, r.T)) < 1e-12);
  }
}

TEST_CASE("printed concurrence overstates entanglement") {
  // at mu = 0 the printed expression is exactly zero as well
  CHECK(thermal_concurrence({{0, 0, 0, 0}, 1}, FormulaVariant::printed) == 0.0);
  const ThermalSpec s{{1, -0.5, 0, 0}, 0.5};
  CHECK(thermal_concurrence(s, FormulaVariant::printed) > thermal_concurrence(s) + 0.1);
}

TEST_CASE("thermal CC and QD") {
  const auto hot = thermal_cc_qd({{1, 0, 0, 0}, 1e6});
  CHECK(std::abs(hot.CC) < 1e-6);
  CHECK(std::abs(hot.QD) < 1e-6);

  const ThermalSpec s{{1, -0.5, 0, 0}, 0.5};
  const auto cf = thermal_cc_qd(s);
  const auto d = discord_breakdown(gibbs_state(s));
  CHECK(std::abs(cf.CC - d.classical_correlation) < 1e-6);
  CHECK(std::abs(cf.QD - d.discord) < 1e-6);
  CHECK(std::abs(cf.CC - 0.23952169098466) < 1e-12);
  CHECK(std::abs(cf.QD - 0.28436254943003) < 1e-12);
}

TEST_CASE("Lambda branch agrees with the optimizer's angle") {
  for (const ThermalSpec& s : {ThermalSpec{{1, 1, 2, 0}, 1.0}, ThermalSpec{{1, -0.5, 0, 0}, 0.5},
                               ThermalSpec{{1, -2, 0, 0}, 0.5}, ThermalSpec{{0.3, 1, 1, 1}, 0.7}}) {
    const auto in = thermal_intermediates(s);
    if (std::abs(in.Lambda1 - in.Lambda2) < 1e-8) continue;  // tie, either angle is optimal
    const double th = classical_correlation(gibbs_state(s)).argmax.theta;
    if (in.z_measurement_optimal())
      CHECK(std::min(std::abs(th), std::abs(th - M_PI / 2)) < 1e-4);
    else
      CHECK(std::abs(th - M_PI / 4) < 1e-4);
    // Lambda values are conditional entropies at those angles
    CHECK(std::abs(in.Lambda1 - oracle::conditional_entropy(gibbs_state(s).matrix(), M_PI / 4, 0)) < 1e-12);
    CHECK(std::abs(in.Lambda2 - oracle::conditional_entropy(gibbs_state(s).matrix(), 0, 0)) < 1e-12);
  }
}

TEST_CASE("printed delta and nu2 deviate from the optimizer") {
  // with B != 0 the printed nu2 differs; with mu > 0 the printed delta is doubled
  const ThermalSpec s{{1, 0.5, 1, 0.5}, 1.0};
  const auto pr = thermal_intermediates(s, FormulaVariant::printed);
  const auto co = thermal_intermediates(s);
  CHECK(pr.delta == doctest::Approx(2 * co.delta));
  CHECK(std::abs(pr.nu2 - co.nu2) > 1e-3);
  CHECK(co.nu1 == doctest::Approx(pr.nu1));
}

TEST_CASE("thermal GMD") {
  CHECK(std::abs(thermal_gmd({{1, 0.3, 0.2, 0.5}, 1e6})) < 1e-6);
  CHECK(thermal_gmd({{1, 0, 0, 0}, 0.01}) == doctest::Approx(1.0).epsilon(1e-4));
  const ThermalSpec s{{1, -0.5, 0, 0.5}, 0.5};
  CHECK(std::abs(thermal_gmd(s) - gmd(gibbs_state(s))) < 1e-8);
  CHECK(std::abs(thermal_gmd({{1, -0.5, 0, 0}, 0.5}) - 0.16958368465172) < 1e-12);
}

TEST_CASE("Psi1 dynamics at t = 0 and long times") {
  for (auto v : {FormulaVariant::printed, FormulaVariant::corrected}) {
    const auto r = dynamics_psi1({1, 0.3, 0.2, 0.4}, 0.7, 0.0, v);
    CHECK(r.values.C == 1.0);
    CHECK(r.values.CC == 1.0);
    CHECK(r.values.QD == 1.0);
    CHECK(r.values.GMD2 == 1.0);

    const SpinParams p{0.6, 0, 0, 0.8};
    const auto late = dynamics_psi1(p, 1.0, 60.0, v);
    CHECK(late.values.C == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(late.values.GMD2 == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(late.inter.alpha[0] == doctest::Approx(0.5));
  }
  CHECK_THROWS_AS((void)dynamics_psi1({0, 1, 1, 0}, 1, 1), std::domain_error);
  CHECK_THROWS_AS((void)dynamics_psi1({1, 0, 0, 0}, -1, 1), std::invalid_argument);
}

TEST_CASE("Psi1 printed radicand can go negative") {
  const auto r = dynamics_psi1({0, 0, 0, 1}, 0.01, 1.0, FormulaVariant::printed);
  CHECK(r.radicand_negative);
  CHECK(r.values.C == 0.0);
  CHECK_FALSE(dynamics_psi1({0, 0, 0, 1}, 0.01, 1.0, FormulaVariant::corrected).radicand_negative);
}

TEST_CASE("Psi1 dynamics against the evolution oracle") {
  const SpinParams p{1, 0, 0, 0.4};
  const TwoQubitState rho = milburn_evolve({p, 1.0, 1.0, bell_state(BellState::psi1)});
  const auto d = discord_breakdown(rho);
  const auto co = dynamics_psi1(p, 1.0, 1.0, FormulaVariant::corrected);
  CHECK(std::abs(co.values.C - concurrence(rho)) < 1e-8);
  CHECK(std::abs(co.values.CC - d.classical_correlation) < 1e-8);
  CHECK(std::abs(co.values.QD - d.discord) < 1e-8);
  CHECK(std::abs(co.values.GMD2 - gmd(rho)) < 1e-10);

  // printed CC is already exact; QD is not once J != 0
  const auto pr = dynamics_psi1(p, 1.0, 1.0, FormulaVariant::printed);
  CHECK(std::abs(pr.values.CC - d.classical_correlation) < 1e-8);
  CHECK(std::abs(pr.values.QD - d.discord) > 0.1);

  // corrected variant on a broader sweep, Jz and B do not enter
  for (double J : {0.0, 0.5, 1.0})
    for (double t : {0.2, 0.9, 2.3}) {
      const SpinParams q{J, 0.7, -0.4, 1.0};
      const TwoQubitState r = milburn_evolve({q, 0.3, t, bell_state(BellState::psi1)});
      const auto c = dynamics_psi1(q, 0.3, t, FormulaVariant::corrected).values;
      const auto o = correlation_set(r);
      CHECK(std::abs(c.C - o.C) < 1e-8);
      CHECK(std::abs(c.CC - o.CC) < 1e-8);
      CHECK(std::abs(c.QD - o.QD) < 1e-8);
      CHECK(std::abs(c.GMD2 - o.GMD2) < 1e-10);
    }
}

TEST_CASE("Psi1 alpha and Psi2 beta are probability pairs") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.05, 2);
  for (int n = 0; n < 100; ++n) {
    const SpinParams p{u(rng), 0, u(rng), u(rng)};
    const double g = u(rng), t = u(rng);
    for (auto v : {FormulaVariant::printed, FormulaVariant::corrected}) {
      const auto a = dynamics_psi1(p, g, t, v).inter.alpha;
      CHECK(a[0] + a[1] == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(a[2] + a[3] == doctest::Approx(1.0).epsilon(1e-12));
      for (double x : a) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
      }
    }
    const auto b = dynamics_psi2(p, g, t).inter.beta;
    CHECK(b[0] + b[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Psi2 dynamics") {
  for (double t : {0.0, 0.5, 3.0}) {
    const auto r = dynamics_psi2({1, 0.5, 0, 0.4}, 1.0, t).values;
    CHECK(r.C == 1.0);
    CHECK(r.CC == 1.0);
    CHECK(r.QD == 1.0);
    CHECK(r.GMD2 == 1.0);
  }
  const auto t0 = dynamics_psi2({1, 0.5, 2, 0.4}, 1.0, 0.0).values;
  CHECK(t0.C == 1.0);
  CHECK(t0.QD == 1.0);
  CHECK(t0.GMD2 == 1.0);

  const auto r = dynamics_psi2({0, 0, 1, 0}, 1.0, 0.5).values;
  CHECK(r.C == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(r.GMD2 == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(r.QD == doctest::Approx(1.0 - h2((1 + std::exp(-1.0)) / 2)).epsilon(1e-14));

  for (double t : {0.1, 0.5, 1.0}) {
    const auto v = dynamics_psi2({0, 0, 2, 0}, 1.0, t).values;
    CHECK(v.CC >= v.C);
    CHECK(v.C >= v.GMD2);
    CHECK(v.GMD2 >= v.QD);
  }

  double prev_c = 2, prev_q = 2, prev_g = 2;
  for (int k = 0; k <= 50; ++k) {
    const auto v = dynamics_psi2({0, 0, 0.8, 0}, 0.6, 0.1 * k).values;
    CHECK(v.C <= prev_c);
    CHECK(v.QD <= prev_q);
    CHECK(v.GMD2 <= prev_g);
    prev_c = v.C;
    prev_q = v.QD;
    prev_g = v.GMD2;
  }
}

TEST_CASE("Psi2 dynamics against the evolution oracle") {
  const SpinParams p{1, 0.5, 1, 0.4};
  const TwoQubitState rho = milburn_evolve({p, 1.0, 0.5, bell_state(BellState::psi2)});
  const auto o = correlation_set(rho);
  const auto c = dynamics_psi2(p, 1.0, 0.5).values;
  CHECK(std::abs(c.C - o.C) < 1e-6);
  CHECK(std::abs(c.CC - o.CC) < 1e-6);
  CHECK(std::abs(c.QD - o.QD) < 1e-6);
  CHECK(std::abs(c.GMD2 - o.GMD2) < 1e-10);
}
