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

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qwalk/walker.hpp"

namespace qwalk {

/// Sign of the exchange combination: + bosonic (bunching), - fermionic.
enum class ExchangeSymmetry { Symmetric, Antisymmetric };

std::string_view to_string(ExchangeSymmetry s);  // "bose" / "fermi"
ExchangeSymmetry parse_symmetry(std::string_view name);
inline double sign_of(ExchangeSymmetry s) {
  return s == ExchangeSymmetry::Symmetric ? 1.0 : -1.0;
}

struct WalkerStart {
  int site = 0;
  Coin coin = Coin::L;

  friend bool operator==(const WalkerStart&, const WalkerStart&) = default;
};

/// Two evolved single-particle amplitude vectors on a common lattice. The
/// inputs must be orthonormal; `validate` enforces it.
struct TwoParticleInput {
  ModeAmplitudes psi_a;
  ModeAmplitudes psi_b;
  WalkerStart start_a{};
  WalkerStart start_b{};

  static constexpr double kOrthogonalityTolerance = 1e-10;

  /// Throws std::invalid_argument on lattice mismatch, non-unit norms or
  /// |<a|b>| above tolerance.
  void validate() const;
};

enum class JointLevel { Mode, Position };

/// Symmetric two-particle distribution P(i, j) over modes or positions.
/// `symmetry` is empty for the distinguishable (unsymmetrized) mixture.
class JointDistribution {
 public:
  JointDistribution(Lattice lattice, JointLevel level,
                    std::optional<ExchangeSymmetry> symmetry);

  int size() const { return size_; }
  JointLevel level() const { return level_; }
  std::optional<ExchangeSymmetry> symmetry() const { return symmetry_; }
  const Lattice& lattice() const { return lattice_; }

  double operator()(int i, int j) const { return p_[idx(i, j)]; }
  double& operator()(int i, int j) { return p_[idx(i, j)]; }
  const std::vector<double>& data() const { return p_; }
  std::vector<double>& data() { return p_; }

  /// Signed position of row/column i (position level: site; mode level: the
  /// mode's site).
  int position_of(int i) const {
    return level_ == JointLevel::Position ? lattice_.position(i)
                                          : lattice_.position(i / 2);
  }

  double total() const;
  std::vector<double> row_sums() const;

  /// Probability of the unordered outcome {i, j} for i >= j: twice the
  /// symmetric entry off the diagonal, the entry itself on it.
  double unordered_probability(int i, int j) const;

  /// sum_{i,j} P(i,j) * omega(i,j).
  double expectation(const std::function<double(int, int)>& omega) const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(j);
  }

  Lattice lattice_;
  JointLevel level_;
  std::optional<ExchangeSymmetry> symmetry_;
  int size_;
  std::vector<double> p_;
};

/// P(m, m') = |a(m) b(m') +- a(m') b(m)|^2 / 2 over all mode pairs.
JointDistribution joint_mode_distribution(const TwoParticleInput& input,
                                          ExchangeSymmetry sym);

/// (|a(m) b(m')|^2 + |a(m') b(m)|^2) / 2: two distinguishable walkers with the
/// labels forgotten.
JointDistribution distinguishable_mode_distribution(const TwoParticleInput& input);

/// P(x, y) = sum over coin labels c, c' of P((x,c), (y,c')).
JointDistribution aggregate_to_positions(const JointDistribution& mode_joint);

/// Single-particle marginal over modes, (|a|^2 + |b|^2) / 2. Identical for
/// both symmetries when the inputs are orthogonal.
std::vector<double> marginal(const TwoParticleInput& input);
/// Same, summed over the coin label.
std::vector<double> position_marginal(const TwoParticleInput& input);

struct DetectionProbabilities {
  std::vector<double> at_least_one;
  std::vector<double> exactly_one;
};

/// Per-mode probability of finding at least one / exactly one particle.
DetectionProbabilities detection_probabilities(const TwoParticleInput& input,
                                               ExchangeSymmetry sym);

}  // namespace qwalk
