#ifndef XXZCORR_OPTIMIZE_HPP
#define XXZCORR_OPTIMIZE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace xxz::optimize {

using Point2 = std::array<double, 2>;

/// Rectangular search domain. A periodic axis wraps into [lo, hi); a bounded
/// axis clamps into [lo, hi].
struct Domain2 {
  Point2 lo{};
  Point2 hi{};
  std::array<bool, 2> periodic{false, false};

  [[nodiscard]] Point2 project(Point2 x) const {
    for (int d = 0; d < 2; ++d) {
      if (periodic[d]) {
        const double span = hi[d] - lo[d];
        x[d] = lo[d] + std::fmod(std::fmod(x[d] - lo[d], span) + span, span);
      } else {
        x[d] = std::clamp(x[d], lo[d], hi[d]);
      }
    }
    return x;
  }
};

struct NelderMeadOptions {
  double ftol = 1e-12;  // spread of simplex values
  double xtol = 1e-10;  // simplex diameter
  int max_iterations = 4000;
};

struct GridRefineOptions {
  std::array<int, 2> grid{64, 64};
  bool refine = true;
  int starts = 3;  // best grid-local minima that get refined
  NelderMeadOptions nelder_mead{};
};

struct Minimum2 {
  Point2 x{};
  double value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead on f(domain.project(x)), starting from `start` with an
/// axis-aligned initial simplex of size `step`.
template <typename F>
Minimum2 nelder_mead(F&& f, const Domain2& domain, Point2 start, Point2 step, const NelderMeadOptions& opt = {}) {
  int evals = 0;
  auto eval = [&](const Point2& x) {
    ++evals;
    return f(domain.project(x));
  };

  std::array<Point2, 3> s{start, start, start};
  s[1][0] += step[0];
  s[2][1] += step[1];
  std::array<double, 3> v{eval(s[0]), eval(s[1]), eval(s[2])};

  auto along = [](const Point2& c, const Point2& p, double k) {
    return Point2{c[0] + k * (p[0] - c[0]), c[1] + k * (p[1] - c[1])};
  };

  for (int it = 0; it < opt.max_iterations; ++it) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
    const std::array<Point2, 3> ss{s[idx[0]], s[idx[1]], s[idx[2]]};
    const std::array<double, 3> vv{v[idx[0]], v[idx[1]], v[idx[2]]};
    s = ss;
    v = vv;

    double diameter = 0.0;
    for (int i = 1; i < 3; ++i)
      diameter = std::max(diameter, std::hypot(s[i][0] - s[0][0], s[i][1] - s[0][1]));
    if (v[2] - v[0] <= opt.ftol && diameter <= opt.xtol) break;

    const Point2 centroid{0.5 * (s[0][0] + s[1][0]), 0.5 * (s[0][1] + s[1][1])};
    const Point2 reflected = along(centroid, s[2], -1.0);
    const double fr = eval(reflected);
    if (fr < v[0]) {
      const Point2 expanded = along(centroid, s[2], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        s[2] = expanded;
        v[2] = fe;
      } else {
        s[2] = reflected;
        v[2] = fr;
      }
      continue;
    }
    if (fr < v[1]) {
      s[2] = reflected;
      v[2] = fr;
      continue;
    }
    const bool outside = fr < v[2];
    const Point2 contracted = outside ? along(centroid, reflected, 0.5) : along(centroid, s[2], 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : v[2])) {
      s[2] = contracted;
      v[2] = fc;
      continue;
    }
    for (int i = 1; i < 3; ++i) {
      s[i] = along(s[0], s[i], 0.5);
      v[i] = eval(s[i]);
    }
  }

  int best = static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
  return {domain.project(s[best]), v[best], evals};
}

/// Uniform grid scan followed by Nelder-Mead refinement of the best few
/// grid-local minima. Deterministic: grid order and tie-breaking are fixed.
template <typename F>
Minimum2 grid_refine_minimize(F&& f, const Domain2& domain, const GridRefineOptions& opt = {}) {
  const int n0 = opt.grid[0], n1 = opt.grid[1];
  if (n0 < 2 || n1 < 2) throw std::invalid_argument("grid_refine_minimize: grid needs >= 2 points per axis");

  auto coordinate = [&](int d, int i, int n) {
    const double span = domain.hi[d] - domain.lo[d];
    return domain.periodic[d] ? domain.lo[d] + span * i / n : domain.lo[d] + span * i / (n - 1);
  };
  const Point2 step{domain.periodic[0] ? (domain.hi[0] - domain.lo[0]) / n0 : (domain.hi[0] - domain.lo[0]) / (n0 - 1),
                    domain.periodic[1] ? (domain.hi[1] - domain.lo[1]) / n1 : (domain.hi[1] - domain.lo[1]) / (n1 - 1)};

  std::vector<double> values(static_cast<std::size_t>(n0) * n1);
  auto at = [&](int i, int j) -> double& { return values[static_cast<std::size_t>(i) * n1 + j]; };
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) at(i, j) = f(Point2{coordinate(0, i, n0), coordinate(1, j, n1)});

  Minimum2 best{{coordinate(0, 0, n0), coordinate(1, 0, n1)}, at(0, 0), n0 * n1};
  struct Candidate {
    double value;
    int i, j;
  };
  std::vector<Candidate> local;
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      const double here = at(i, j);
      if (here < best.value) best = {{coordinate(0, i, n0), coordinate(1, j, n1)}, here, n0 * n1};
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1 && is_min; ++dj) {
          if (di == 0 && dj == 0) continue;
          int ii = i + di, jj = j + dj;
          if (domain.periodic[0]) ii = (ii + n0) % n0;
          if (domain.periodic[1]) jj = (jj + n1) % n1;
          if (ii < 0 || ii >= n0 || jj < 0 || jj >= n1) continue;
          if (at(ii, jj) < here) is_min = false;
        }
      if (is_min) local.push_back({here, i, j});
    }
  if (!opt.refine) return best;

  std::stable_sort(local.begin(), local.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  if (local.size() > static_cast<std::size_t>(opt.starts)) local.resize(static_cast<std::size_t>(opt.starts));

  int evals = best.evaluations;
  for (const auto& c : local) {
    auto m = nelder_mead(f, domain, Point2{coordinate(0, c.i, n0), coordinate(1, c.j, n1)}, step, opt.nelder_mead);
    evals += m.evaluations;
    if (m.value < best.value) best = m;
  }
  best.evaluations = evals;
  return best;
}

}  // namespace xxz::optimize

#endif  // XXZCORR_OPTIMIZE_HPP
