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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwalk/statistics.hpp"

namespace qwalk {

/// Raised when data cannot support the requested model (too few points,
/// wrong-signed slope or curvature, non-positive values).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FitModel { ExponentialWing, SemilogParabola, PowerLaw };
std::string_view to_string(FitModel m);

struct FitResult {
  FitModel model{};
  std::map<std::string, double> parameters;
  double r_squared = 0.0;
  /// Inclusive range of the abscissa actually used (positions or steps).
  double window_first = 0.0;
  double window_last = 0.0;
  int points = 0;

  double localization_length() const { return parameters.at("xi"); }
  double sigma() const { return parameters.at("sigma"); }
  double exponent() const { return parameters.at("alpha"); }
  double fractal_dimension() const { return parameters.at("d"); }
};

nlohmann::json to_json(const FitResult& fit);

/// Ordinary least-squares polynomial of degree 1 or 2:
/// y = c[0] + c[1] x (+ c[2] x^2).
struct PolynomialFit {
  std::vector<double> coefficients;
  double r_squared = 0.0;
  double ss_res = 0.0;
  double ss_tot = 0.0;
};
PolynomialFit fit_polynomial(std::span<const double> x, std::span<const double> y,
                             int degree);

struct SemilogOptions {
  /// Entries below this are dropped (covers parity zeros and round-off).
  double floor = 1e-9;
  /// Sites with |x - center| <= exclude_radius are left out of wing fits.
  double exclude_radius = 1.0;
  int min_points_per_wing = 4;
};

/// Line through (|x - center|, ln P) on each wing separately;
/// xi = -1/slope, reported as the mean over both wings. `first_site` is the
/// signed position of marginal[0].
FitResult fit_exponential_decay(std::span<const double> marginal, int first_site,
                                double center, const SemilogOptions& opts = {});

/// Parabola through (x - center, ln P); sigma = sqrt(-1 / (2 c2)).
FitResult fit_gaussian_semilog(std::span<const double> marginal, int first_site,
                               double center, const SemilogOptions& opts = {});

/// Line through (ln t, ln mean) for steps in [first_step, last_step].
/// alpha = slope, d = 2 / alpha.
FitResult fit_power_law(const ObservableSeries& series, int first_step = 20,
                        int last_step = 100);

}  // namespace qwalk
