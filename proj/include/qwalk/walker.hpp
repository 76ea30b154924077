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
#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/disorder.hpp"
#include "qwalk/lattice.hpp"

namespace qwalk {

/// Flat amplitude vector over modes m = (x, coin), index 2*(x - min_site) +
/// coin. This is the "output mode" indexing used by the two-particle code.
struct ModeAmplitudes {
  Lattice lattice;
  std::vector<Complex> amplitudes;

  static int mode_index(const Lattice& lattice, int x, Coin c) {
    return 2 * lattice.index(x) + static_cast<int>(c);
  }
  static int position_of(const Lattice& lattice, int mode) {
    return lattice.position(mode / 2);
  }
  static Coin coin_of(int mode) { return static_cast<Coin>(mode % 2); }

  double norm_squared() const;
};

/// Single-walker state: one (alpha, beta) coin pair per lattice site.
class WalkerState {
 public:
  explicit WalkerState(const Lattice& lattice)
      : lattice_(lattice), sites_(static_cast<std::size_t>(lattice.size())) {}

  /// |x, coin>.
  static WalkerState localized(const Lattice& lattice, int x, Coin coin);
  static WalkerState from_modes(const ModeAmplitudes& modes);

  const Lattice& lattice() const { return lattice_; }
  std::span<const CoinPair> sites() const { return sites_; }
  std::span<CoinPair> sites() { return sites_; }

  const CoinPair& at(int x) const { return sites_[static_cast<std::size_t>(lattice_.index(x))]; }
  CoinPair& at(int x) { return sites_[static_cast<std::size_t>(lattice_.index(x))]; }

  double norm_squared() const;
  ModeAmplitudes to_modes() const;

  friend bool operator==(const WalkerState&, const WalkerState&) = default;

 private:
  Lattice lattice_;
  std::vector<CoinPair> sites_;
};

using CoinProvider = std::function<CoinMatrix(int x)>;

/// One application of U = S (C (x) I): coin at every site, then L moves to
/// x-1 and R to x+1. Throws LatticeOverflow if either edge site carries
/// amplitude (the shift would leave the lattice).
WalkerState step(const WalkerState& state, const CoinProvider& coin_for);

/// Observer called after each step with (step number 1..t, state).
using StepObserver = std::function<void(int, const WalkerState&)>;

/// `steps` applications of `step`, using field.at(x, tau) at step tau.
/// The field must cover the state's lattice and at least `steps` steps.
WalkerState evolve(const WalkerState& initial, int steps,
                   const PhaseField& field, const StepObserver& observe = {});

/// P(x) = |alpha(x)|^2 + |beta(x)|^2, indexed like the lattice.
std::vector<double> position_distribution(const WalkerState& state);

}  // namespace qwalk
