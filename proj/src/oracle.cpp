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

#include "qwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qwalk::oracle {

PathSumResult path_sum_amplitudes(int x0, Coin coin0, int steps, const PhaseField& field,
                                  int max_steps) {
  if (steps < 0 || steps > max_steps) {
    throw std::invalid_argument("path_sum_amplitudes: steps " + std::to_string(steps) +
                                " outside [0, " + std::to_string(max_steps) + "]");
  }
  const Lattice& lattice = field.lattice();
  PathSumResult r{{lattice, std::vector<Complex>(static_cast<std::size_t>(lattice.modes()))},
                  steps,
                  std::uint64_t{1} << steps};

  const double h = 1.0 / std::sqrt(2.0);
  // Bit tau-1 of `path` is the coin outcome at step tau (0 = L, 1 = R).
  // Paths are summed in increasing order, so the reduction order is fixed.
  for (std::uint64_t path = 0; path < r.paths; ++path) {
    int x = x0;
    int in = static_cast<int>(coin0);
    Complex amp{1.0, 0.0};
    for (int tau = 1; tau <= steps; ++tau) {
      const int out = static_cast<int>((path >> (tau - 1)) & 1u);
      const PhasePair ph = field.at(x, tau);
      const double hadamard = (out == 1 && in == 1) ? -h : h;
      amp *= std::polar(1.0, out == 0 ? ph.left : ph.right) * hadamard;
      x += out == 0 ? -1 : 1;
      in = out;
    }
    r.amplitudes.amplitudes[static_cast<std::size_t>(2 * lattice.index(x) + in)] += amp;
  }
  return r;
}

double compare(const ModeAmplitudes& a, const ModeAmplitudes& b) {
  if (!(a.lattice == b.lattice) || a.amplitudes.size() != b.amplitudes.size()) {
    throw std::invalid_argument("oracle::compare: dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t m = 0; m < a.amplitudes.size(); ++m) {
    worst = std::max(worst, std::abs(a.amplitudes[m] - b.amplitudes[m]));
  }
  return worst;
}

}  // namespace qwalk::oracle
