#include "xxzcorr/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace xxz {

namespace {

constexpr double kClampTolerance = 1e-12;

double clamp_nonnegative(double v) { return v < 0.0 ? 0.0 : v; }

// (I (x) <v|) rho (I (x) |v>), unnormalized.
Matrix2c conditional_block(const Matrix4c& rho, const Eigen::Vector2cd& v) {
  Matrix2c out;
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap) {
      cplx s = 0.0;
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp) s += std::conj(v(b)) * rho(2 * a + b, 2 * ap + bp) * v(bp);
      out(a, ap) = s;
    }
  return out;
}

double conditional_entropy_raw(const Matrix4c& rho, const ProjectiveMeasurement& m) {
  double total = 0.0;
  for (int k = 0; k < 2; ++k) {
    const Matrix2c block = conditional_block(rho, m.basis_vector(k));
    const double pk = block.trace().real();
    if (pk < 1e-14) continue;
    total += pk * qubit_entropy(block / pk);
  }
  return total;
}

// Squared Hilbert-Schmidt distance from rho to its B-dephased version in the
// measurement basis.
double dephasing_distance(const Matrix4c& rho, const ProjectiveMeasurement& m) {
  Matrix4c dephased = Matrix4c::Zero();
  for (int k = 0; k < 2; ++k) {
    const Matrix4c p = kron(pauli::identity(), m.projector(k));
    dephased += p * rho * p;
  }
  const Matrix4c diff = rho - dephased;
  return (diff * diff).trace().real();
}

ProjectiveMeasurement to_measurement(const optimize::Point2& x) { return {x[0], x[1]}; }

}  // namespace

Eigen::Vector2cd ProjectiveMeasurement::basis_vector(int k) const {
  const double c = std::cos(theta), s = std::sin(theta);
  const cplx e = std::polar(1.0, phi);
  if (k == 0) return {c, e * s};
  return {std::conj(e) * s, -c};
}

Matrix2c ProjectiveMeasurement::projector(int k) const {
  const Eigen::Vector2cd v = basis_vector(k);
  return v * v.adjoint();
}

Matrix4c BlochDecomposition::reconstruct() const {
  Matrix4c m = kron(pauli::identity(), pauli::identity());
  for (int i = 0; i < 3; ++i) {
    m += x(i) * kron(pauli::sigma(i + 1), pauli::identity());
    m += y(i) * kron(pauli::identity(), pauli::sigma(i + 1));
    for (int j = 0; j < 3; ++j) m += T(i, j) * kron(pauli::sigma(i + 1), pauli::sigma(j + 1));
  }
  return 0.25 * m;
}

optimize::GridRefineOptions default_measurement_search() {
  optimize::GridRefineOptions opt;
  opt.grid = {64, 64};
  opt.refine = true;
  opt.starts = 3;
  return opt;
}

optimize::Domain2 measurement_domain() {
  optimize::Domain2 d;
  d.lo = {0.0, 0.0};
  d.hi = {std::numbers::pi / 2.0, 2.0 * std::numbers::pi};
  d.periodic = {false, true};
  return d;
}

double concurrence(const TwoQubitState& rho) {
  const Matrix4c yy = kron(pauli::y(), pauli::y());
  const Matrix4c flipped = yy * rho.matrix().conjugate() * yy;
  const Matrix4c root = func_of_hermitian<4>(rho.matrix(), [](double v) { return std::sqrt(std::max(v, 0.0)); });
  Matrix4c r = root * flipped * root;
  r = (0.5 * (r + r.adjoint())).eval();
  const auto eig = hermitian_eig<4>(r);
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) l[k] = std::sqrt(std::max(eig.values(k), 0.0));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(l[0] - l[1] - l[2] - l[3], 0.0);
}

double concurrence_x(const TwoQubitState& rho) {
  const auto& m = rho.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(m(i, j)) > 1e-10) throw std::invalid_argument("concurrence_x: state is not of X form");
    }
  auto re = [&](int i) { return std::max(m(i, i).real(), 0.0); };
  const double c1 = 2.0 * (std::abs(m(3, 0)) - std::sqrt(re(2) * re(1)));
  const double c2 = 2.0 * (std::abs(m(2, 1)) - std::sqrt(re(3) * re(0)));
  return std::max({c1, c2, 0.0});
}

double entropy_of_spectrum(std::span<const double> p) {
  double s = 0.0;
  for (double v : p)
    if (v > kClampTolerance) s -= v * std::log2(v);
  return s;
}

double qubit_entropy(const Matrix2c& rho) {
  const double a = rho(0, 0).real(), d = rho(1, 1).real();
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
  const double mean = 0.5 * (a + d);
  const std::array<double, 2> p{mean + half_gap, mean - half_gap};
  return entropy_of_spectrum(p);
}

double entropy(const QubitState& rho) { return qubit_entropy(rho.matrix()); }

double entropy(const TwoQubitState& rho) {
  const auto eig = hermitian_eig<4>(rho.matrix());
  const std::array<double, 4> p{eig.values(0), eig.values(1), eig.values(2), eig.values(3)};
  return entropy_of_spectrum(p);
}

double mutual_information(const TwoQubitState& rho) {
  const double sa = qubit_entropy(partial_trace(rho.matrix(), Subsystem::A));
  const double sb = qubit_entropy(partial_trace(rho.matrix(), Subsystem::B));
  return clamp_nonnegative(sa + sb - entropy(rho));
}

double conditional_entropy(const TwoQubitState& rho, const ProjectiveMeasurement& m) {
  return conditional_entropy_raw(rho.matrix(), m);
}

DiscordBreakdown discord_breakdown(const TwoQubitState& rho, const optimize::GridRefineOptions& search) {
  const Matrix4c& m = rho.matrix();
  const auto best = optimize::grid_refine_minimize(
      [&](const optimize::Point2& x) { return conditional_entropy_raw(m, to_measurement(x)); }, measurement_domain(),
      search);

  DiscordBreakdown out;
  out.entropy_A = qubit_entropy(partial_trace(m, Subsystem::A));
  out.entropy_B = qubit_entropy(partial_trace(m, Subsystem::B));
  out.entropy_AB = entropy(rho);
  out.min_conditional_entropy = best.value;
  out.argmax = to_measurement(best.x);
  out.mutual_information = clamp_nonnegative(out.entropy_A + out.entropy_B - out.entropy_AB);
  out.classical_correlation = clamp_nonnegative(out.entropy_A - best.value);
  out.discord = clamp_nonnegative(out.mutual_information - out.classical_correlation);
  out.discord_from_smin = clamp_nonnegative(out.entropy_B - out.entropy_AB + best.value);
  return out;
}

ClassicalCorrelation classical_correlation(const TwoQubitState& rho, const optimize::GridRefineOptions& search) {
  const auto d = discord_breakdown(rho, search);
  return {d.classical_correlation, d.argmax, d.min_conditional_entropy};
}

double quantum_discord(const TwoQubitState& rho, const optimize::GridRefineOptions& search) {
  return discord_breakdown(rho, search).discord;
}

BlochDecomposition bloch_decompose(const TwoQubitState& rho) {
  BlochDecomposition b;
  const Matrix4c& m = rho.matrix();
  for (int i = 0; i < 3; ++i) {
    b.x(i) = (m * kron(pauli::sigma(i + 1), pauli::identity())).trace().real();
    b.y(i) = (m * kron(pauli::identity(), pauli::sigma(i + 1))).trace().real();
    for (int j = 0; j < 3; ++j) b.T(i, j) = (m * kron(pauli::sigma(i + 1), pauli::sigma(j + 1))).trace().real();
  }
  return b;
}

double gmd(const TwoQubitState& rho) {
  const auto b = bloch_decompose(rho);
  const Eigen::Matrix3d k = b.y * b.y.transpose() + b.T.transpose() * b.T;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(k, Eigen::EigenvaluesOnly);
  const double k_max = solver.eigenvalues()(2);
  return clamp_nonnegative(0.5 * (b.y.squaredNorm() + b.T.squaredNorm() - k_max));
}

double gmd_bruteforce(const TwoQubitState& rho, const optimize::GridRefineOptions& search) {
  const Matrix4c& m = rho.matrix();
  const auto best = optimize::grid_refine_minimize(
      [&](const optimize::Point2& x) { return dephasing_distance(m, to_measurement(x)); }, measurement_domain(), search);
  return clamp_nonnegative(2.0 * best.value);
}

CorrelationSet correlation_set(const TwoQubitState& rho) {
  const auto d = discord_breakdown(rho);
  return {concurrence(rho), d.classical_correlation, d.discord, gmd(rho)};
}

}  // namespace xxz
