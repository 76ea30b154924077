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

#include "qwalk/walker.hpp"

namespace qwalk::oracle {

inline constexpr int kDefaultMaxSteps = 16;
inline constexpr double kAgreementTolerance = 1e-10;

/// Mode amplitudes obtained by summing over every coin-outcome history.
struct PathSumResult {
  ModeAmplitudes amplitudes;
  int steps = 0;
  std::uint64_t paths = 0;  // 2^steps
};

/// Brute-force amplitudes after `steps` steps from |x, coin>: each of the 2^t
/// histories contributes the product of its coin-matrix elements
/// (e^{i phi_out} H[out][in] at the site the walker occupies), and lands on
/// the mode reached by the corresponding left/right moves. Shares no code
/// with `step`/`evolve`. Throws std::invalid_argument when steps exceeds
/// max_steps.
PathSumResult path_sum_amplitudes(int x, Coin coin, int steps, const PhaseField& field,
                                  int max_steps = kDefaultMaxSteps);

/// max |a(m) - b(m)| over modes. Throws std::invalid_argument if the lattices
/// differ.
double compare(const ModeAmplitudes& a, const ModeAmplitudes& b);
inline double compare(const WalkerState& state, const PathSumResult& r) {
  return compare(state.to_modes(), r.amplitudes);
}

}  // namespace qwalk::oracle
