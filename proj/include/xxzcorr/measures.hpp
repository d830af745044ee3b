#ifndef XXZCORR_MEASURES_HPP
#define XXZCORR_MEASURES_HPP

#include "xxzcorr/optimize.hpp"
#include "xxzcorr/qmat.hpp"

#include <numbers>
#include <span>

namespace xxz {

/// Rank-1 projective measurement {V|k><k|V^dagger}, k = 0, 1, with
///   V = [[cos t, e^{-i p} sin t], [e^{i p} sin t, -cos t]].
/// theta in [0, pi/2] already covers every measurement axis.
struct ProjectiveMeasurement {
  double theta = 0.0;
  double phi = 0.0;

  [[nodiscard]] Eigen::Vector2cd basis_vector(int k) const;
  [[nodiscard]] Matrix2c projector(int k) const;
};

/// rho = 1/4 (I + x.sigma (x) I + I (x) y.sigma + sum_ij T_ij sigma_i (x) sigma_j)
struct BlochDecomposition {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();

  [[nodiscard]] Matrix4c reconstruct() const;
};

/// {C, CC, QD, 2 D_G} for one state.
struct CorrelationSet {
  double C = 0.0;
  double CC = 0.0;
  double QD = 0.0;
  double GMD2 = 0.0;
};

/// Default search: 64 x 64 grid on theta in [0, pi/2], phi in [0, 2 pi),
/// then Nelder-Mead from the three best grid-local minima.
[[nodiscard]] optimize::GridRefineOptions default_measurement_search();

[[nodiscard]] optimize::Domain2 measurement_domain();

// Wootters concurrence. The eigenvalues of R = rho (YY) rho* (YY) are taken
// from the Hermitian similar matrix sqrt(rho) (YY) rho* (YY) sqrt(rho).
[[nodiscard]] double concurrence(const TwoQubitState& rho);

/// X-state shortcut max{C1, C2, 0}. Throws std::invalid_argument when an
/// off-X entry exceeds 1e-10.
[[nodiscard]] double concurrence_x(const TwoQubitState& rho);

/// Base-2 Shannon entropy of a spectrum; entries below 1e-12 contribute 0.
[[nodiscard]] double entropy_of_spectrum(std::span<const double> p);

/// Base-2 entropy of a Hermitian 2x2 operator with unit trace, via its
/// closed-form eigenvalues. No validation.
[[nodiscard]] double qubit_entropy(const Matrix2c& rho);

[[nodiscard]] double entropy(const QubitState& rho);
[[nodiscard]] double entropy(const TwoQubitState& rho);

[[nodiscard]] double mutual_information(const TwoQubitState& rho);

/// S(rho | {B_k}) for a measurement on subsystem B; the entropy is taken on
/// the post-measurement state of A.
[[nodiscard]] double conditional_entropy(const TwoQubitState& rho, const ProjectiveMeasurement& m);

struct ClassicalCorrelation {
  double value = 0.0;
  ProjectiveMeasurement argmax;
  double min_conditional_entropy = 0.0;
};

[[nodiscard]] ClassicalCorrelation classical_correlation(
    const TwoQubitState& rho, const optimize::GridRefineOptions& search = default_measurement_search());

/// Both discord routes from a single conditional-entropy minimization:
///   discord           = I - CC
///   discord_from_smin = S(rho_B) - S(rho_AB) + S_min
struct DiscordBreakdown {
  double entropy_A = 0.0;
  double entropy_B = 0.0;
  double entropy_AB = 0.0;
  double min_conditional_entropy = 0.0;
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  double discord_from_smin = 0.0;
  ProjectiveMeasurement argmax;
};

[[nodiscard]] DiscordBreakdown discord_breakdown(
    const TwoQubitState& rho, const optimize::GridRefineOptions& search = default_measurement_search());

[[nodiscard]] double quantum_discord(const TwoQubitState& rho,
                                     const optimize::GridRefineOptions& search = default_measurement_search());

[[nodiscard]] BlochDecomposition bloch_decompose(const TwoQubitState& rho);

/// 2 D_G from the Bloch form, measurement on B:
///   2 * 1/4 (|y|^2 + |T|_F^2 - k_max),  k_max = max eig(y y^T + T^T T).
[[nodiscard]] double gmd(const TwoQubitState& rho);

/// 2 D_G by direct minimization of Tr(rho - chi)^2 over classical-on-B
/// states. For a fixed B basis the optimal chi is the B-dephased rho.
[[nodiscard]] double gmd_bruteforce(const TwoQubitState& rho,
                                    const optimize::GridRefineOptions& search = default_measurement_search());

[[nodiscard]] CorrelationSet correlation_set(const TwoQubitState& rho);

}  // namespace xxz

#endif  // XXZCORR_MEASURES_HPP
