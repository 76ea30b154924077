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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwalk/disorder.hpp"
#include "qwalk/two_particle.hpp"

namespace qwalk {

/// Var(x + y) = sum (x+y)^2 P - (sum (x+y) P)^2 over signed positions.
double variance_xm(const JointDistribution& joint);

/// Var(x_M) of two independent unbiased classical walkers after t steps: 2t.
double classical_baseline(int steps);

/// -sum P log2 P, with 0 log 0 = 0. In bits.
double joint_entropy(const JointDistribution& joint);

/// Shannon entropy of a 1-D distribution, in bits.
double shannon_entropy(std::span<const double> p);

/// I = 2 H(X) - H(X, Y), H(X) from the row sums. In bits.
double mutual_information(const JointDistribution& joint);

enum class Observable { Variance, Entropy, MutualInformation };
std::string_view to_string(Observable o);
Observable parse_observable(std::string_view name);

/// A per-step observable averaged over disorder configurations. std_dev is
/// the population spread across configurations (divides by n).
struct ObservableSeries {
  std::string name;
  std::vector<int> steps;
  std::vector<double> mean;
  std::vector<double> std_dev;
  int configs = 0;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Population mean and standard deviation per column of `samples`
/// (samples[config][k]). Summation runs in config order.
void reduce_samples(const std::vector<std::vector<double>>& samples,
                    std::vector<double>& mean, std::vector<double>& std_dev);

struct EnsembleConfig {
  int steps = 100;
  DisorderSpec disorder{};
  int configs = 100;
  std::uint64_t base_seed = 1;
  WalkerStart start_a{0, Coin::R};
  WalkerStart start_b{2, Coin::L};
  std::vector<ExchangeSymmetry> symmetries{ExchangeSymmetry::Symmetric,
                                           ExchangeSymmetry::Antisymmetric};
  std::vector<Observable> observables{Observable::Variance};
  /// Entropy and mutual information are evaluated on this level.
  JointLevel information_level = JointLevel::Position;
  /// Record every step 1..steps, or only the final one.
  bool every_step = true;
  /// Keep configuration-averaged final joints and marginal.
  bool keep_distributions = false;
  /// Worker threads; 0 picks the hardware concurrency.
  int threads = 0;

  /// Throws std::invalid_argument on t < 1, n < 1, bad strengths, coincident
  /// start modes or empty symmetry list.
  void validate() const;
};

struct EnsembleResult {
  Lattice lattice;
  std::vector<ObservableSeries> series;
  /// Configuration-averaged position-level joints at the final step.
  std::map<ExchangeSymmetry, JointDistribution> mean_joint;
  /// Configuration-averaged single-particle position marginal at the final step.
  std::vector<double> mean_marginal;

  /// Throws std::out_of_range if absent.
  const ObservableSeries& get(Observable o, ExchangeSymmetry s) const;
};

/// Evolves both walkers under config i's field (seed base_seed + i) for
/// i in [0, configs), evaluates the requested observables per step and
/// reduces across configurations. Results do not depend on `threads`.
EnsembleResult ensemble_run(const EnsembleConfig& config);

/// The two walkers' evolved amplitudes under one field.
TwoParticleInput evolve_pair(const EnsembleConfig& config, const PhaseField& field);

/// Lattice used for a configuration's walkers.
Lattice ensemble_lattice(const EnsembleConfig& config);

}  // namespace qwalk
