#ifndef XXZCORR_SWEEP_HPP
#define XXZCORR_SWEEP_HPP

#include "xxzcorr/closedform.hpp"
#include "xxzcorr/measures.hpp"
#include "xxzcorr/model.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xxz {

enum class Mode { thermal, dynamics };
enum class Engine { closedform, oracle, both };
enum class Quantity { C, CC, QD, GMD2 };
enum class InitialKind { psi1, psi2, custom };

[[nodiscard]] std::string_view to_string(Mode m);
[[nodiscard]] std::string_view to_string(Engine e);
[[nodiscard]] std::string_view to_string(Quantity q);
[[nodiscard]] std::string_view to_string(InitialKind k);
[[nodiscard]] Engine parse_engine(std::string_view s);
[[nodiscard]] Quantity parse_quantity(std::string_view s);
[[nodiscard]] std::vector<Quantity> all_quantities();

struct InitialState {
  InitialKind kind = InitialKind::psi1;
  std::optional<TwoQubitState> custom;

  [[nodiscard]] TwoQubitState state() const;
};

/// Everything needed to evaluate one grid point.
struct EvaluationSpec {
  Mode mode = Mode::thermal;
  SpinParams params;
  double T = 1.0;
  bool ground_state = false;
  double gamma = 0.0;
  double t = 0.0;
  InitialState initial;
  std::vector<Quantity> quantities = all_quantities();
  Engine engine = Engine::closedform;
  /// Unset: thermal forms use `corrected`, Psi1 dynamics uses `printed`.
  std::optional<FormulaVariant> formula;

  /// Sets a named parameter: J, Jz, B, D, T, gamma, t.
  void set(std::string_view name, double value);
  [[nodiscard]] double get(std::string_view name) const;
};

[[nodiscard]] bool is_parameter_name(std::string_view name);

struct Axis {
  std::string name;
  std::vector<double> values;

  /// `count` evenly spaced points including both ends.
  static Axis range(std::string name, double min, double max, int count);
  static Axis list(std::string name, std::vector<double> values);
};

struct SweepSpec {
  EvaluationSpec base;
  std::vector<Axis> axes;  // first axis varies slowest
  std::vector<std::string> fixed;  // parameters pinned explicitly by the caller

  /// Throws std::invalid_argument on an empty or oversized axis list, an
  /// axis with fewer than 2 points, unknown names, or overlap with `fixed`.
  void validate() const;
};

struct SweepRow {
  std::vector<std::optional<double>> cells;  // aligned with SweepResult::header
  std::string status = "ok";
};

struct SweepResult {
  std::vector<std::string> header;
  std::vector<SweepRow> rows;
};

[[nodiscard]] std::vector<std::string> result_header(const EvaluationSpec& spec);

/// Evaluates one point; computation errors propagate as exceptions.
[[nodiscard]] SweepRow evaluate_point(const EvaluationSpec& spec);

/// Lexicographic grid evaluation. Per-point failures become rows whose
/// status starts with "error:" and whose value cells are empty.
[[nodiscard]] SweepResult run_sweep(const SweepSpec& spec);

struct FigurePanel {
  std::string label;
  SweepSpec spec;
};

struct FigurePreset {
  std::string name;
  std::string description;
  std::vector<FigurePanel> panels;
};

[[nodiscard]] std::vector<std::string> figure_names();

/// Throws std::invalid_argument listing the valid names for an unknown one.
[[nodiscard]] FigurePreset figure_preset(std::string_view name, int points = 201);

struct PanelResult {
  std::string label;
  SweepResult result;
};

/// CSV with RFC 4180 quoting; values printed with 15 significant digits.
/// A leading "panel" column is added when any label is non-empty.
void write_csv(std::ostream& os, std::span<const PanelResult> panels);
void write_csv(std::ostream& os, const SweepResult& result);
/// JSON array of row objects; empty cells become null.
void write_json(std::ostream& os, std::span<const PanelResult> panels);
void write_json(std::ostream& os, const SweepResult& result);

[[nodiscard]] std::string format_number(double v);

/// Interior indices i where the slope change |s_i - s_{i-1}|, with
/// s_i = (y_{i+1} - y_i)/(x_{i+1} - x_i), exceeds `factor` times the median
/// slope change. A kink of y at x_i shows up at index i.
[[nodiscard]] std::vector<std::size_t> detect_slope_jumps(std::span<const double> x, std::span<const double> y,
                                                          double factor = 10.0);

}  // namespace xxz

#endif  // XXZCORR_SWEEP_HPP
