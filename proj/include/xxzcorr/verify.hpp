#ifndef XXZCORR_VERIFY_HPP
#define XXZCORR_VERIFY_HPP

#include "xxzcorr/closedform.hpp"
#include "xxzcorr/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace xxz {

struct VerifyOptions {
  double closed_tolerance = 1e-5;     // thermal C and GMD
  double optimizer_tolerance = 1e-4;  // thermal CC and QD
  double psi2_closed_tolerance = 1e-6;
  double psi2_optimizer_tolerance = 1e-4;
  double psi1_tolerance = 1e-4;
};

struct PointComparison {
  std::string label;  // parameters, human readable
  CorrelationSet closed;
  CorrelationSet oracle;
  std::string detail;  // intermediates for failed thermal points
};

struct ThermalGridReport {
  std::size_t points = 0;
  CorrelationSet max_delta;
  CorrelationSet max_printed_delta;    // printed expressions vs oracle
  std::size_t printed_not_real = 0;    // points where a printed helper leaves the real domain
  std::vector<PointComparison> failures;
};

struct Psi2Report {
  std::size_t points = 0;
  CorrelationSet max_delta;
  std::vector<PointComparison> failures;
};

enum class Verdict { agrees, explained, unexplained };

struct Psi1Component {
  Quantity quantity = Quantity::C;
  double max_printed_delta = 0.0;
  double max_corrected_delta = 0.0;
  std::size_t printed_deviations = 0;  // points beyond tolerance
  Verdict verdict = Verdict::agrees;
  bool flagged = false;  // deviation belongs to a known ambiguous term
  std::string term;
};

struct Psi1Report {
  std::size_t points = 0;
  std::vector<Psi1Component> components;
  std::size_t radicand_negative = 0;
  bool oracle_within_bounds = true;
  std::string bounds_violation;

  [[nodiscard]] bool deviations_confined() const;
};

struct VerifyReport {
  VerifyOptions options;
  ThermalGridReport thermal;
  Psi2Report psi2;
  Psi1Report psi1;

  [[nodiscard]] bool passed() const;
};

[[nodiscard]] ThermalGridReport verify_thermal_grid(const VerifyOptions& opt = {});
[[nodiscard]] Psi2Report verify_psi2(const VerifyOptions& opt = {});
[[nodiscard]] Psi1Report adjudicate_psi1(const VerifyOptions& opt = {});
[[nodiscard]] VerifyReport run_verification(const VerifyOptions& opt = {});

void write_report(std::ostream& os, const VerifyReport& report);
void write_report_json(std::ostream& os, const VerifyReport& report);

[[nodiscard]] std::string_view to_string(Verdict v);

}  // namespace xxz

#endif  // XXZCORR_VERIFY_HPP
