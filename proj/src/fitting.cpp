// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace qwalk {

std::string_view to_string(FitModel m) {
  switch (m) {
    case FitModel::ExponentialWing: return "exponential-wing";
    case FitModel::SemilogParabola: return "semilog-parabola";
    case FitModel::PowerLaw: return "power-law";
  }
  return "unknown";
}

nlohmann::json to_json(const FitResult& fit) {
  return {{"model", to_string(fit.model)},
          {"parameters", fit.parameters},
          {"r_squared", fit.r_squared},
          {"window", {fit.window_first, fit.window_last}},
          {"points", fit.points}};
}

PolynomialFit fit_polynomial(std::span<const double> x, std::span<const double> y, int degree) {
  if (degree < 1 || degree > 2) throw std::invalid_argument("fit_polynomial: degree must be 1 or 2");
  if (x.size() != y.size()) throw std::invalid_argument("fit_polynomial: size mismatch");
  const std::size_t n = x.size();
  const std::size_t k = static_cast<std::size_t>(degree) + 1;
  if (n < k + 1) throw FitError("fit_polynomial: need more points than parameters");

  // Centre and scale the abscissa before forming the normal equations.
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  double sx = 0.0;
  for (double v : x) sx = std::max(sx, std::abs(v - mx));
  if (sx == 0.0) throw FitError("fit_polynomial: abscissa has no spread");

  std::array<std::array<double, 4>, 3> a{};  // augmented [A | b]
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (x[i] - mx) / sx;
    const std::array<double, 3> pw{1.0, u, u * u};
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) a[r][c] += pw[r] * pw[c];
      a[r][k] += pw[r] * y[i];
    }
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    if (std::abs(a[col][col]) < 1e-300) throw FitError("fit_polynomial: singular system");
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::array<double, 3> g{};  // coefficients in u
  for (std::size_t r = 0; r < k; ++r) g[r] = a[r][k] / a[r][r];

  // Back to powers of x: u = (x - mx) / sx.
  PolynomialFit fit;
  if (degree == 1) {
    const double b = g[1] / sx;
    fit.coefficients = {g[0] - b * mx, b};
  } else {
    const double c2 = g[2] / (sx * sx);
    const double c1 = g[1] / sx - 2.0 * c2 * mx;
    const double c0 = g[0] - g[1] * mx / sx + c2 * mx * mx;
    fit.coefficients = {c0, c1, c2};
  }

  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (x[i] - mx) / sx;
    const double pred = g[0] + g[1] * u + (degree == 2 ? g[2] * u * u : 0.0);
    fit.ss_res += (y[i] - pred) * (y[i] - pred);
    fit.ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r_squared = fit.ss_tot > 0.0 ? 1.0 - fit.ss_res / fit.ss_tot : 1.0;
  return fit;
}

namespace {

struct Points {
  std::vector<double> x, y;
};

}  // namespace

FitResult fit_exponential_decay(std::span<const double> marginal, int first_site, double center,
                                const SemilogOptions& opts) {
  std::array<Points, 2> wings;  // 0: left of centre, 1: right
  for (std::size_t i = 0; i < marginal.size(); ++i) {
    const double x = first_site + static_cast<double>(i);
    const double d = std::abs(x - center);
    if (d <= opts.exclude_radius || !(marginal[i] >= opts.floor)) continue;
    auto& w = wings[x < center ? 0 : 1];
    w.x.push_back(d);
    w.y.push_back(std::log(marginal[i]));
  }
  for (const auto& w : wings) {
    if (static_cast<int>(w.x.size()) < opts.min_points_per_wing) {
      throw FitError("fit_exponential_decay: fewer than " +
                     std::to_string(opts.min_points_per_wing) + " usable points on a wing");
    }
  }

  FitResult r;
  r.model = FitModel::ExponentialWing;
  double ss_res = 0.0;
  std::vector<double> all_y;
  const char* side[] = {"left", "right"};
  double xi_sum = 0.0;
  for (int s = 0; s < 2; ++s) {
    const auto f = fit_polynomial(wings[s].x, wings[s].y, 1);
    const double slope = f.coefficients[1];
    if (!(slope < 0.0)) throw FitError("fit_exponential_decay: wing does not decay");
    r.parameters[std::string("slope_") + side[s]] = slope;
    r.parameters[std::string("intercept_") + side[s]] = f.coefficients[0];
    r.parameters[std::string("xi_") + side[s]] = -1.0 / slope;
    xi_sum += -1.0 / slope;
    ss_res += f.ss_res;
    all_y.insert(all_y.end(), wings[s].y.begin(), wings[s].y.end());
  }
  r.parameters["xi"] = xi_sum / 2.0;

  const double my = std::accumulate(all_y.begin(), all_y.end(), 0.0) / static_cast<double>(all_y.size());
  double ss_tot = 0.0;
  for (double v : all_y) ss_tot += (v - my) * (v - my);
  r.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  r.points = static_cast<int>(all_y.size());
  r.window_first = center - *std::max_element(wings[0].x.begin(), wings[0].x.end());
  r.window_last = center + *std::max_element(wings[1].x.begin(), wings[1].x.end());
  return r;
}

FitResult fit_gaussian_semilog(std::span<const double> marginal, int first_site, double center,
                               const SemilogOptions& opts) {
  Points pts;
  for (std::size_t i = 0; i < marginal.size(); ++i) {
    if (!(marginal[i] >= opts.floor) || marginal[i] <= 0.0) continue;
    pts.x.push_back(first_site + static_cast<double>(i) - center);
    pts.y.push_back(std::log(marginal[i]));
  }
  if (pts.x.size() < 4) throw FitError("fit_gaussian_semilog: fewer than 4 usable points");
  const auto f = fit_polynomial(pts.x, pts.y, 2);
  const double c2 = f.coefficients[2];
  if (!(c2 < 0.0)) throw FitError("fit_gaussian_semilog: curvature is not negative");

  FitResult r;
  r.model = FitModel::SemilogParabola;
  r.parameters = {{"c0", f.coefficients[0]},
                  {"c1", f.coefficients[1]},
                  {"c2", c2},
                  {"sigma", std::sqrt(-1.0 / (2.0 * c2))},
                  {"peak", center - f.coefficients[1] / (2.0 * c2)}};
  r.r_squared = f.r_squared;
  r.points = static_cast<int>(pts.x.size());
  r.window_first = center + pts.x.front();
  r.window_last = center + pts.x.back();
  return r;
}

FitResult fit_power_law(const ObservableSeries& series, int first_step, int last_step) {
  Points pts;
  int t_first = 0, t_last = 0;
  for (std::size_t i = 0; i < series.steps.size(); ++i) {
    const int t = series.steps[i];
    if (t < first_step || t > last_step) continue;
    if (pts.x.empty()) t_first = t;
    t_last = t;
    if (!(series.mean[i] > 0.0) || t <= 0) {
      throw FitError("fit_power_law: non-positive value at step " + std::to_string(t));
    }
    pts.x.push_back(std::log(static_cast<double>(t)));
    pts.y.push_back(std::log(series.mean[i]));
  }
  if (pts.x.size() < 3) throw FitError("fit_power_law: fewer than 3 points in window");
  const auto f = fit_polynomial(pts.x, pts.y, 1);
  const double alpha = f.coefficients[1];

  FitResult r;
  r.model = FitModel::PowerLaw;
  r.parameters = {{"alpha", alpha},
                  {"prefactor", std::exp(f.coefficients[0])},
                  {"d", 2.0 / alpha}};
  r.r_squared = f.r_squared;
  r.points = static_cast<int>(pts.x.size());
  r.window_first = t_first;
  r.window_last = t_last;
  return r;
}

}  // namespace qwalk
