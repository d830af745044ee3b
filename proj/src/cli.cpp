#include "xxzcorr/cli.hpp"

#include "xxzcorr/state_io.hpp"
#include "xxzcorr/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace xxz {

namespace {

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw CliError(kExitUsage, fmt::format("{}: '{}' is not a number", what, text));
  return v;
}

// CLI11 only knows single-character short options.
std::string normalize_token(const std::string& tok) {
  if (tok == "-Jz") return "--Jz";
  if (tok.rfind("-Jz=", 0) == 0) return "-" + tok;
  return tok;
}

struct RawArgs {
  std::vector<std::string> axes;
  std::string engine;
  std::string formula;
  std::string format;
};

void add_params(CLI::App* s, CliConfig& c) {
  s->add_option("-J", c.J, "exchange coupling J");
  s->add_option("--Jz", c.Jz, "anisotropy Jz (also accepted as -Jz)");
  s->add_option("-B", c.B, "magnetic field B");
  s->add_option("-D", c.D, "Dzyaloshinskii-Moriya coupling D");
}

void add_thermal(CLI::App* s, CliConfig& c) {
  s->add_option("-T", c.T, "temperature, > 0");
  s->add_flag("--ground-state", c.ground_state, "zero-temperature state instead of a Gibbs state");
}

void add_dynamics(CLI::App* s, CliConfig& c) {
  s->add_option("--gamma", c.gamma, "intrinsic decoherence rate, >= 0");
  s->add_option("-t", c.t, "evolution time, >= 0");
  s->add_option("--initial", c.initial, "initial state: psi1, psi2 or file (with --state-file)")
      ->check(CLI::IsMember({"psi1", "psi2", "file"}));
}

void add_engine(CLI::App* s, RawArgs& raw) {
  s->add_option("--engine", raw.engine, "closedform, oracle or both")
      ->check(CLI::IsMember({"closedform", "oracle", "both"}));
  s->add_option("--formula", raw.formula, "closed-form variant: corrected or printed")
      ->check(CLI::IsMember({"corrected", "printed"}));
}

void add_output(CLI::App* s, CliConfig& c, RawArgs& raw, bool text) {
  auto* f = s->add_option("--format", raw.format, text ? "text or json" : "csv or json");
  f->check(text ? CLI::IsMember({"text", "json"}) : CLI::IsMember({"csv", "json"}));
  s->add_option("-o", c.output, "output path (default: standard output)");
}

std::string_view mode_name(Command c) { return c == Command::thermal ? "thermal" : "dynamics"; }

bool axis_allowed(Command c, std::string_view name) {
  if (name == "J" || name == "Jz" || name == "B" || name == "D") return true;
  if (c == Command::thermal) return name == "T";
  if (c == Command::dynamics) return name == "gamma" || name == "t";
  return false;
}

const std::optional<double>* param_slot(const CliConfig& c, std::string_view name) {
  if (name == "J") return &c.J;
  if (name == "Jz") return &c.Jz;
  if (name == "B") return &c.B;
  if (name == "D") return &c.D;
  if (name == "T") return &c.T;
  if (name == "gamma") return &c.gamma;
  if (name == "t") return &c.t;
  return nullptr;
}

void require_nonneg(const std::optional<double>& v, std::string_view flag) {
  if (v && !(*v >= 0.0)) throw CliError(kExitUsage, fmt::format("{} must be >= 0", flag));
}

void validate(CliConfig& c) {
  if (c.T && !(*c.T > 0.0)) throw CliError(kExitUsage, "-T must be > 0 (use --ground-state for T = 0)");
  if (c.T && c.ground_state) throw CliError(kExitUsage, "-T and --ground-state are mutually exclusive");
  require_nonneg(c.gamma, "--gamma");
  require_nonneg(c.t, "-t");
  if (c.points < 2) throw CliError(kExitUsage, "--points must be >= 2");

  if (c.axes.size() > 2) throw CliError(kExitUsage, "at most two --axis options");
  for (std::size_t i = 0; i < c.axes.size(); ++i) {
    const auto& a = c.axes[i];
    if (!axis_allowed(c.command, a.name))
      throw CliError(kExitUsage, fmt::format("axis '{}' is not a {} parameter", a.name, mode_name(c.command)));
    if (const auto* slot = param_slot(c, a.name); slot && slot->has_value())
      throw CliError(kExitUsage, fmt::format("'{}' is both fixed and swept", a.name));
    if (a.name == "T" && c.ground_state) throw CliError(kExitUsage, "axis 'T' conflicts with --ground-state");
    for (std::size_t j = 0; j < i; ++j)
      if (c.axes[j].name == a.name) throw CliError(kExitUsage, fmt::format("axis '{}' given twice", a.name));
  }

  const auto swept = [&](std::string_view n) {
    return std::any_of(c.axes.begin(), c.axes.end(), [&](const AxisArg& a) { return a.name == n; });
  };
  if (c.command == Command::thermal && !c.T && !c.ground_state && !swept("T"))
    throw CliError(kExitUsage, "thermal needs -T, --ground-state or a T axis");
  if (c.command == Command::dynamics) {
    if (!c.gamma && !swept("gamma")) throw CliError(kExitUsage, "dynamics needs --gamma or a gamma axis");
    if (!c.t && !swept("t")) throw CliError(kExitUsage, "dynamics needs -t or a t axis");
  }
  if (c.initial == "file" && !c.state_file) throw CliError(kExitUsage, "--initial file needs --state-file");
  if (c.command == Command::dynamics && c.state_file && c.initial != "file")
    throw CliError(kExitUsage, "--state-file with dynamics requires --initial file");
  if (c.command == Command::measures) {
    const int sources = (c.state_file ? 1 : 0) + (c.bell ? 1 : 0) + ((c.T || c.ground_state) ? 1 : 0) +
                        ((c.gamma || c.t) ? 1 : 0);
    if (sources == 0)
      throw CliError(kExitUsage, "measures needs a state: --state-file, --bell, -T/--ground-state or --gamma/-t");
    if (sources > 1 && !(c.gamma && c.t && c.state_file && c.initial == "file"))
      throw CliError(kExitUsage, "measures takes exactly one state source");
    if ((c.gamma.has_value() != c.t.has_value())) throw CliError(kExitUsage, "evolution needs both --gamma and -t");
  }
}

// ---------------------------------------------------------------- run

SpinParams params_of(const CliConfig& c) {
  return {c.J.value_or(0.0), c.Jz.value_or(0.0), c.B.value_or(0.0), c.D.value_or(0.0)};
}

InitialState initial_of(const CliConfig& c) {
  if (c.initial == "psi2") return {InitialKind::psi2, std::nullopt};
  if (c.initial == "file") return {InitialKind::custom, read_state_file(*c.state_file)};
  return {InitialKind::psi1, std::nullopt};
}

EvaluationSpec evaluation_of(const CliConfig& c) {
  EvaluationSpec s;
  s.mode = c.command == Command::dynamics ? Mode::dynamics : Mode::thermal;
  s.params = params_of(c);
  s.T = c.T.value_or(1.0);
  s.ground_state = c.ground_state;
  s.gamma = c.gamma.value_or(0.0);
  s.t = c.t.value_or(0.0);
  if (s.mode == Mode::dynamics) s.initial = initial_of(c);
  s.engine = c.engine.value_or(c.ground_state ? Engine::oracle : Engine::closedform);
  s.formula = c.formula;
  return s;
}

TwoQubitState state_of(const CliConfig& c) {
  if (c.gamma && c.t) {
    const SpinParams p = params_of(c);
    return milburn_evolve({p, *c.gamma, *c.t, initial_of(c).state()});
  }
  if (c.state_file) return read_state_file(*c.state_file);
  if (c.bell) return bell_state(*c.bell == "psi2" ? BellState::psi2 : BellState::psi1);
  if (c.ground_state) return ground_state(params_of(c));
  return gibbs_state({params_of(c), *c.T});
}

SweepResult measures_table(const TwoQubitState& rho) {
  const DiscordBreakdown d = discord_breakdown(rho);
  SweepResult r;
  r.header = {"C", "CC", "QD", "GMD2", "I", "S_A", "S_B", "S_AB", "theta", "phi", "status"};
  SweepRow row;
  for (double v : {concurrence(rho), d.classical_correlation, d.discord, gmd(rho), d.mutual_information, d.entropy_A,
                   d.entropy_B, d.entropy_AB, d.argmax.theta, d.argmax.phi})
    row.cells.emplace_back(v);
  r.rows.push_back(std::move(row));
  return r;
}

void emit(std::ostream& os, OutputFormat f, const SweepResult& r) {
  if (f == OutputFormat::json) write_json(os, r);
  else write_csv(os, r);
}

int run_measures(const CliConfig& c, std::ostream& buf) {
  const TwoQubitState rho = state_of(c);
  if (c.dump_state) write_state_file(*c.dump_state, rho);
  emit(buf, c.format.value_or(OutputFormat::csv), measures_table(rho));
  return kExitOk;
}

int run_model(const CliConfig& c, std::ostream& buf) {
  const OutputFormat f = c.format.value_or(OutputFormat::csv);
  const EvaluationSpec base = evaluation_of(c);
  if (c.axes.empty()) {
    SweepResult r{result_header(base), {evaluate_point(base)}};
    emit(buf, f, r);
    return kExitOk;
  }
  SweepSpec spec;
  spec.base = base;
  for (const auto& a : c.axes) spec.axes.push_back(Axis::range(a.name, a.min, a.max, a.count));
  for (std::string_view n : {"J", "Jz", "B", "D", "T", "gamma", "t"})
    if (const auto* slot = param_slot(c, n); slot->has_value()) spec.fixed.emplace_back(n);
  spec.validate();
  emit(buf, f, run_sweep(spec));
  return kExitOk;
}

int run_figure(const CliConfig& c, std::ostream& buf) {
  const FigurePreset preset = figure_preset(c.figure, c.points);
  std::vector<PanelResult> results;
  for (const auto& panel : preset.panels) {
    SweepSpec spec = panel.spec;
    if (c.engine) spec.base.engine = *c.engine;
    if (c.formula) spec.base.formula = c.formula;
    results.push_back({panel.label, run_sweep(spec)});
  }
  if (c.format.value_or(OutputFormat::csv) == OutputFormat::json) write_json(buf, results);
  else write_csv(buf, results);
  return kExitOk;
}

int run_verify(const CliConfig& c, std::ostream& buf) {
  const VerifyReport report = run_verification();
  if (c.format == OutputFormat::json) write_report_json(buf, report);
  else write_report(buf, report);
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

AxisArg parse_axis(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4 || parts[0].empty())
    throw CliError(kExitUsage, fmt::format("--axis '{}': expected name:min:max:count", text));
  AxisArg a;
  a.name = std::string(parts[0]);
  a.min = parse_real(parts[1], "--axis min");
  a.max = parse_real(parts[2], "--axis max");
  int n = 0;
  const auto* end = parts[3].data() + parts[3].size();
  auto [ptr, ec] = std::from_chars(parts[3].data(), end, n);
  if (ec != std::errc() || ptr != end) throw CliError(kExitUsage, fmt::format("--axis count '{}' is not an integer", parts[3]));
  if (n < 2) throw CliError(kExitUsage, "--axis count must be >= 2");
  if (!std::isfinite(a.min) || !std::isfinite(a.max)) throw CliError(kExitUsage, "--axis bounds must be finite");
  a.count = n;
  return a;
}

CliConfig parse_cli(const std::vector<std::string>& args) {
  CliConfig c;
  RawArgs raw;

  CLI::App app{"Correlation measures for the two-qubit Heisenberg XXZ chain with DM interaction", "xxzcorr"};
  app.require_subcommand(1, 1);

  auto* measures = app.add_subcommand("measures", "C, CC, QD and GMD of a single two-qubit state");
  measures->add_option("--state-file", c.state_file, "JSON density matrix {dim, entries}");
  measures->add_option("--dump-state", c.dump_state, "also write the evaluated state to this path");
  measures->add_option("--bell", c.bell, "psi1 or psi2")->check(CLI::IsMember({"psi1", "psi2"}));
  add_params(measures, c);
  add_thermal(measures, c);
  add_dynamics(measures, c);
  add_output(measures, c, raw, false);

  auto* thermal = app.add_subcommand("thermal", "thermal state correlations, single point or sweep");
  add_params(thermal, c);
  add_thermal(thermal, c);
  add_engine(thermal, raw);
  thermal->add_option("--axis", raw.axes, "name:min:max:count, at most twice");
  add_output(thermal, c, raw, false);

  auto* dynamics = app.add_subcommand("dynamics", "intrinsic decoherence dynamics, single point or sweep");
  add_params(dynamics, c);
  add_dynamics(dynamics, c);
  dynamics->add_option("--state-file", c.state_file, "initial state for --initial file");
  add_engine(dynamics, raw);
  dynamics->add_option("--axis", raw.axes, "name:min:max:count, at most twice");
  add_output(dynamics, c, raw, false);

  auto* figure = app.add_subcommand("figure", "figure presets as tabular data");
  figure->add_option("name", c.figure, "fig1 .. fig7b")->required();
  figure->add_option("--points", c.points, "points per continuous axis");
  add_engine(figure, raw);
  add_output(figure, c, raw, false);

  auto* verify = app.add_subcommand("verify", "closed forms against numerical oracles");
  add_output(verify, c, raw, true);

  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it) argv.push_back(normalize_token(*it));

  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    throw CliError(code == 0 ? kExitOk : kExitUsage, code == 0 ? out.str() : err.str());
  }

  if (measures->parsed()) c.command = Command::measures;
  else if (thermal->parsed()) c.command = Command::thermal;
  else if (dynamics->parsed()) c.command = Command::dynamics;
  else if (figure->parsed()) c.command = Command::figure;
  else c.command = Command::verify;

  for (const auto& a : raw.axes) c.axes.push_back(parse_axis(a));
  if (!raw.engine.empty()) c.engine = parse_engine(raw.engine);
  if (!raw.formula.empty()) c.formula = parse_formula_variant(raw.formula);
  if (raw.format == "csv") c.format = OutputFormat::csv;
  else if (raw.format == "json") c.format = OutputFormat::json;
  else if (raw.format == "text") c.format = OutputFormat::text;

  validate(c);
  return c;
}

int run_cli(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buf;
  int status = kExitOk;
  try {
    switch (config.command) {
      case Command::measures: status = run_measures(config, buf); break;
      case Command::thermal:
      case Command::dynamics: status = run_model(config, buf); break;
      case Command::figure: status = run_figure(config, buf); break;
      case Command::verify: status = run_verify(config, buf); break;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (config.output) {
    std::ofstream f(*config.output, std::ios::binary);
    if (!f || !(f << buf.str()) || !f.flush()) {
      err << "error: cannot write " << *config.output << '\n';
      return kExitFailure;
    }
  } else {
    out << buf.str();
  }
  return status;
}

}  // namespace xxz
