#include "xxzcorr/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace xxz {

namespace {

constexpr std::string_view kParameterNames[] = {"J", "Jz", "B", "D", "T", "gamma", "t"};

std::vector<std::string_view> input_names(Mode m) {
  if (m == Mode::thermal) return {"J", "Jz", "B", "D", "T"};
  return {"J", "Jz", "B", "D", "gamma", "t"};
}

FormulaVariant thermal_formula(const EvaluationSpec& s) { return s.formula.value_or(FormulaVariant::corrected); }
FormulaVariant psi1_formula(const EvaluationSpec& s) { return s.formula.value_or(FormulaVariant::printed); }

bool wants(const EvaluationSpec& s, Quantity q) {
  return std::find(s.quantities.begin(), s.quantities.end(), q) != s.quantities.end();
}

double pick(const CorrelationSet& c, Quantity q) {
  switch (q) {
    case Quantity::C: return c.C;
    case Quantity::CC: return c.CC;
    case Quantity::QD: return c.QD;
    case Quantity::GMD2: return c.GMD2;
  }
  return 0.0;
}

CorrelationSet closed_form_values(const EvaluationSpec& s) {
  if (s.mode == Mode::thermal) {
    if (s.ground_state) throw std::invalid_argument("closed forms need T > 0; use the oracle engine for --ground-state");
    return thermal_correlation_set({s.params, s.T}, thermal_formula(s));
  }
  switch (s.initial.kind) {
    case InitialKind::psi1: return dynamics_psi1(s.params, s.gamma, s.t, psi1_formula(s)).values;
    case InitialKind::psi2: return dynamics_psi2(s.params, s.gamma, s.t).values;
    case InitialKind::custom: break;
  }
  throw std::invalid_argument("no closed form for a custom initial state; use the oracle engine");
}

TwoQubitState model_state(const EvaluationSpec& s) {
  if (s.mode == Mode::thermal) return s.ground_state ? ground_state(s.params) : gibbs_state({s.params, s.T});
  return milburn_evolve({s.params, s.gamma, s.t, s.initial.state()});
}

CorrelationSet oracle_values(const EvaluationSpec& s) {
  const TwoQubitState rho = model_state(s);
  CorrelationSet out;
  if (wants(s, Quantity::C)) out.C = concurrence(rho);
  if (wants(s, Quantity::CC) || wants(s, Quantity::QD)) {
    const auto d = discord_breakdown(rho);
    out.CC = d.classical_correlation;
    out.QD = d.discord;
  }
  if (wants(s, Quantity::GMD2)) out.GMD2 = gmd(rho);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

bool has_labels(std::span<const PanelResult> panels) {
  return std::any_of(panels.begin(), panels.end(), [](const PanelResult& p) { return !p.label.empty(); });
}

}  // namespace

std::string_view to_string(Mode m) { return m == Mode::thermal ? "thermal" : "dynamics"; }

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::closedform: return "closedform";
    case Engine::oracle: return "oracle";
    case Engine::both: return "both";
  }
  return "";
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::C: return "C";
    case Quantity::CC: return "CC";
    case Quantity::QD: return "QD";
    case Quantity::GMD2: return "GMD2";
  }
  return "";
}

std::string_view to_string(InitialKind k) {
  switch (k) {
    case InitialKind::psi1: return "psi1";
    case InitialKind::psi2: return "psi2";
    case InitialKind::custom: return "custom";
  }
  return "";
}

Engine parse_engine(std::string_view s) {
  for (Engine e : {Engine::closedform, Engine::oracle, Engine::both})
    if (to_string(e) == s) return e;
  throw std::invalid_argument(fmt::format("unknown engine '{}' (expected closedform|oracle|both)", s));
}

Quantity parse_quantity(std::string_view s) {
  for (Quantity q : all_quantities())
    if (to_string(q) == s) return q;
  throw std::invalid_argument(fmt::format("unknown quantity '{}' (expected C|CC|QD|GMD2)", s));
}

std::vector<Quantity> all_quantities() { return {Quantity::C, Quantity::CC, Quantity::QD, Quantity::GMD2}; }

TwoQubitState InitialState::state() const {
  switch (kind) {
    case InitialKind::psi1: return bell_state(BellState::psi1);
    case InitialKind::psi2: return bell_state(BellState::psi2);
    case InitialKind::custom:
      if (!custom) throw std::invalid_argument("custom initial state requested but none supplied");
      return *custom;
  }
  throw std::logic_error("unreachable");
}

bool is_parameter_name(std::string_view name) {
  return std::find(std::begin(kParameterNames), std::end(kParameterNames), name) != std::end(kParameterNames);
}

void EvaluationSpec::set(std::string_view name, double value) {
  if (name == "J") params.J = value;
  else if (name == "Jz") params.Jz = value;
  else if (name == "B") params.B = value;
  else if (name == "D") params.D = value;
  else if (name == "T") T = value;
  else if (name == "gamma") gamma = value;
  else if (name == "t") t = value;
  else throw std::invalid_argument(fmt::format("unknown parameter '{}'", name));
}

double EvaluationSpec::get(std::string_view name) const {
  if (name == "J") return params.J;
  if (name == "Jz") return params.Jz;
  if (name == "B") return params.B;
  if (name == "D") return params.D;
  if (name == "T") return ground_state ? 0.0 : T;
  if (name == "gamma") return gamma;
  if (name == "t") return t;
  throw std::invalid_argument(fmt::format("unknown parameter '{}'", name));
}

Axis Axis::range(std::string name, double min, double max, int count) {
  if (count < 2) throw std::invalid_argument(fmt::format("axis '{}' needs at least 2 points", name));
  Axis a{std::move(name), {}};
  a.values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) a.values.push_back(i == count - 1 ? max : min + (max - min) * i / (count - 1));
  return a;
}

Axis Axis::list(std::string name, std::vector<double> values) { return Axis{std::move(name), std::move(values)}; }

void SweepSpec::validate() const {
  if (axes.empty()) throw std::invalid_argument("sweep needs at least one axis");
  if (axes.size() > 2) throw std::invalid_argument("sweep supports at most two axes");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const auto& a = axes[i];
    if (!is_parameter_name(a.name)) throw std::invalid_argument(fmt::format("unknown axis parameter '{}'", a.name));
    if (a.values.size() < 2) throw std::invalid_argument(fmt::format("axis '{}' needs at least 2 points", a.name));
    if (base.mode == Mode::thermal && (a.name == "gamma" || a.name == "t"))
      throw std::invalid_argument(fmt::format("axis '{}' only applies to dynamics", a.name));
    if (base.mode == Mode::dynamics && a.name == "T")
      throw std::invalid_argument("axis 'T' only applies to thermal mode");
    if (base.ground_state && a.name == "T") throw std::invalid_argument("axis 'T' conflicts with --ground-state");
    for (std::size_t j = 0; j < i; ++j)
      if (axes[j].name == a.name) throw std::invalid_argument(fmt::format("axis '{}' given twice", a.name));
    if (std::find(fixed.begin(), fixed.end(), a.name) != fixed.end())
      throw std::invalid_argument(fmt::format("parameter '{}' is both fixed and swept", a.name));
  }
  if (base.quantities.empty()) throw std::invalid_argument("no quantities requested");
}

std::vector<std::string> result_header(const EvaluationSpec& spec) {
  std::vector<std::string> h;
  for (auto n : input_names(spec.mode)) h.emplace_back(n);
  for (Quantity q : spec.quantities) {
    const std::string name(to_string(q));
    if (spec.engine == Engine::both) {
      h.push_back(name + "_closedform");
      h.push_back(name + "_oracle");
      h.push_back(name + "_delta");
    } else {
      h.push_back(name);
    }
  }
  return h;
}

SweepRow evaluate_point(const EvaluationSpec& spec) {
  std::optional<CorrelationSet> closed, oracle;
  if (spec.engine != Engine::oracle) closed = closed_form_values(spec);
  if (spec.engine != Engine::closedform) oracle = oracle_values(spec);

  SweepRow row;
  for (auto n : input_names(spec.mode)) row.cells.emplace_back(spec.get(n));
  for (Quantity q : spec.quantities) {
    if (closed) row.cells.emplace_back(pick(*closed, q));
    if (oracle) row.cells.emplace_back(pick(*oracle, q));
    if (closed && oracle) row.cells.emplace_back(std::abs(pick(*closed, q) - pick(*oracle, q)));
  }
  for (const auto& c : row.cells)
    if (c && !std::isfinite(*c)) throw std::runtime_error("non-finite value in result");
  return row;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult out;
  out.header = result_header(spec.base);

  std::vector<std::size_t> index(spec.axes.size(), 0);
  std::size_t total = 1;
  for (const auto& a : spec.axes) total *= a.values.size();
  out.rows.reserve(total);

  for (std::size_t n = 0; n < total; ++n) {
    std::size_t rem = n;
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
      index[k] = rem % spec.axes[k].values.size();
      rem /= spec.axes[k].values.size();
    }
    EvaluationSpec point = spec.base;
    for (std::size_t k = 0; k < spec.axes.size(); ++k) point.set(spec.axes[k].name, spec.axes[k].values[index[k]]);
    try {
      out.rows.push_back(evaluate_point(point));
    } catch (const std::exception& e) {
      SweepRow row;
      for (auto name : input_names(point.mode)) row.cells.emplace_back(point.get(name));
      row.cells.resize(out.header.size());
      row.status = std::string("error: ") + e.what();
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

std::string format_number(double v) { return fmt::format("{:.15g}", v); }

void write_csv(std::ostream& os, std::span<const PanelResult> panels) {
  if (panels.empty()) return;
  const bool labelled = has_labels(panels);
  std::vector<std::string> header;
  if (labelled) header.emplace_back("panel");
  for (const auto& h : panels.front().result.header) header.push_back(h);
  header.emplace_back("status");
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
  os << '\n';
  for (const auto& p : panels) {
    if (p.result.header != panels.front().result.header)
      throw std::invalid_argument("write_csv: panels have different columns");
    for (const auto& row : p.result.rows) {
      bool first = true;
      auto emit = [&](const std::string& f) {
        os << (first ? "" : ",") << csv_field(f);
        first = false;
      };
      if (labelled) emit(p.label);
      for (const auto& c : row.cells) emit(c ? format_number(*c) : std::string());
      emit(row.status);
      os << '\n';
    }
  }
}

void write_csv(std::ostream& os, const SweepResult& result) {
  const PanelResult single{"", result};
  write_csv(os, std::span<const PanelResult>(&single, 1));
}

void write_json(std::ostream& os, std::span<const PanelResult> panels) {
  const bool labelled = has_labels(panels);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& p : panels) {
    for (const auto& row : p.result.rows) {
      nlohmann::ordered_json obj;
      if (labelled) obj["panel"] = p.label;
      for (std::size_t i = 0; i < p.result.header.size(); ++i) {
        const auto& c = i < row.cells.size() ? row.cells[i] : std::nullopt;
        obj[p.result.header[i]] = c ? nlohmann::ordered_json(*c) : nlohmann::ordered_json(nullptr);
      }
      obj["status"] = row.status;
      rows.push_back(std::move(obj));
    }
  }
  os << rows.dump(2) << '\n';
}

void write_json(std::ostream& os, const SweepResult& result) {
  const PanelResult single{"", result};
  write_json(os, std::span<const PanelResult>(&single, 1));
}

std::vector<std::size_t> detect_slope_jumps(std::span<const double> x, std::span<const double> y, double factor) {
  if (x.size() != y.size()) throw std::invalid_argument("detect_slope_jumps: x and y differ in length");
  if (x.size() < 4) return {};
  std::vector<double> slope(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) slope[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  std::vector<double> jump(slope.size() - 1);
  for (std::size_t i = 1; i < slope.size(); ++i) jump[i - 1] = std::abs(slope[i] - slope[i - 1]);

  std::vector<double> sorted = jump;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2), sorted.end());
  const double median = sorted[sorted.size() / 2];

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < jump.size(); ++i)
    if (jump[i] > factor * median) out.push_back(i + 1);
  return out;
}

}  // namespace xxz
