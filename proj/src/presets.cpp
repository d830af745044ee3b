#include "xxzcorr/sweep.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace xxz {

namespace {

// Temperature axes start above zero; the T -> 0 limit is the ground-state mode.
constexpr double kMinTemperature = 0.02;

SweepSpec thermal(SpinParams p, std::vector<std::string> fixed, std::vector<Axis> axes) {
  SweepSpec s;
  s.base.mode = Mode::thermal;
  s.base.params = p;
  s.base.engine = Engine::closedform;
  s.fixed = std::move(fixed);
  s.axes = std::move(axes);
  return s;
}

SweepSpec dynamics(SpinParams p, double gamma, double t, InitialKind initial, std::vector<std::string> fixed,
                   std::vector<Axis> axes) {
  SweepSpec s;
  s.base.mode = Mode::dynamics;
  s.base.params = p;
  s.base.gamma = gamma;
  s.base.t = t;
  s.base.initial.kind = initial;
  s.base.engine = Engine::closedform;
  // Figure data should follow the evolution oracle; the published Psi1
  // expressions stay reachable through --formula printed.
  s.base.formula = FormulaVariant::corrected;
  s.fixed = std::move(fixed);
  s.axes = std::move(axes);
  return s;
}

}  // namespace

std::vector<std::string> figure_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7a", "fig7b"}; }

FigurePreset figure_preset(std::string_view name, int points) {
  if (points < 2) throw std::invalid_argument("figure_preset: need at least 2 points per axis");
  FigurePreset f;
  f.name = std::string(name);

  if (name == "fig1") {
    f.description = "thermal correlations vs T, Jz = -0.5, B = D = 0, J in {0.3, 0.5, 1}";
    f.panels.push_back({"", thermal({0.0, -0.5, 0.0, 0.0}, {"Jz", "B", "D"},
                                    {Axis::list("J", {0.3, 0.5, 1.0}), Axis::range("T", kMinTemperature, 2.0, points)})});
  } else if (name == "fig2") {
    f.description = "thermal correlations vs Jz, J = 1, T = 0.5, B = D = 0";
    auto s = thermal({1.0, 0.0, 0.0, 0.0}, {"J", "T", "B", "D"}, {Axis::range("Jz", -2.0, 2.0, points)});
    s.base.T = 0.5;
    f.panels.push_back({"", std::move(s)});
  } else if (name == "fig3") {
    f.description = "thermal correlations vs T, Jz = 1, D = 0, J = 1, B in {0, 2, 4}";
    f.panels.push_back({"", thermal({1.0, 1.0, 0.0, 0.0}, {"J", "Jz", "D"},
                                    {Axis::list("B", {0.0, 2.0, 4.0}), Axis::range("T", kMinTemperature, 5.0, points)})});
  } else if (name == "fig4") {
    f.description = "QD over (B, D), (B, J), (B, Jz) at T = 0.5, remaining couplings 0.1";
    const SpinParams p{0.1, 0.1, 0.1, 0.1};
    for (std::string other : {"D", "J", "Jz"}) {
      std::vector<std::string> fixed{"T"};
      for (std::string n : {"J", "Jz", "D"})
        if (n != other) fixed.push_back(n);
      auto s = thermal(p, fixed, {Axis::range("B", 0.0, 3.0, points), Axis::range(other, 0.0, 3.0, points)});
      s.base.T = 0.5;
      s.base.quantities = {Quantity::QD};
      f.panels.push_back({"QD(B," + other + ")", std::move(s)});
    }
  } else if (name == "fig5") {
    f.description = "thermal correlations vs T, Jz = 1, B = 0, J = 1, D in {0, 2, 4}";
    f.panels.push_back({"", thermal({1.0, 1.0, 0.0, 0.0}, {"J", "Jz", "B"},
                                    {Axis::list("D", {0.0, 2.0, 4.0}), Axis::range("T", kMinTemperature, 5.0, points)})});
  } else if (name == "fig6") {
    f.description = "correlations at t = 1, gamma = 1 vs J (D = 0.4, psi1), D (J = 0, psi1), B (psi2)";
    f.panels.push_back({"J", dynamics({0.0, 0.0, 0.0, 0.4}, 1.0, 1.0, InitialKind::psi1, {"Jz", "B", "D", "gamma", "t"},
                                      {Axis::range("J", 0.0, 2.0, points)})});
    f.panels.push_back({"D", dynamics({0.0, 0.0, 0.0, 0.0}, 1.0, 1.0, InitialKind::psi1, {"J", "Jz", "B", "gamma", "t"},
                                      {Axis::range("D", 0.01, 2.0, points)})});
    f.panels.push_back({"B", dynamics({1.0, 0.0, 0.0, 0.4}, 1.0, 1.0, InitialKind::psi2, {"J", "Jz", "D", "gamma", "t"},
                                      {Axis::range("B", 0.0, 2.0, points)})});
  } else if (name == "fig7a") {
    f.description = "psi1 dynamics vs t, J = D = 1, gamma in {0, 0.1, 0.2, 0.3}";
    f.panels.push_back({"", dynamics({1.0, 0.0, 0.0, 1.0}, 0.0, 0.0, InitialKind::psi1, {"J", "Jz", "B", "D"},
                                     {Axis::list("gamma", {0.0, 0.1, 0.2, 0.3}), Axis::range("t", 0.0, 10.0, points)})});
  } else if (name == "fig7b") {
    f.description = "psi2 dynamics vs t, B = 0.5, gamma in {0.1, 1, 2}";
    f.panels.push_back({"", dynamics({1.0, 0.0, 0.5, 0.0}, 0.0, 0.0, InitialKind::psi2, {"J", "Jz", "B", "D"},
                                     {Axis::list("gamma", {0.1, 1.0, 2.0}), Axis::range("t", 0.0, 5.0, points)})});
  } else {
    std::string valid;
    for (const auto& n : figure_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument(fmt::format("unknown figure preset '{}' (valid: {})", name, valid));
  }
  return f;
}

}  // namespace xxz
