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

#include "qwalk/walker.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace qwalk {

double ModeAmplitudes::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s;
}

WalkerState WalkerState::localized(const Lattice& lattice, int x, Coin coin) {
  WalkerState s(lattice);
  (coin == Coin::L ? s.at(x).left : s.at(x).right) = 1.0;
  return s;
}

WalkerState WalkerState::from_modes(const ModeAmplitudes& modes) {
  if (modes.amplitudes.size() != static_cast<std::size_t>(modes.lattice.modes())) {
    throw std::invalid_argument("WalkerState: mode vector size mismatch");
  }
  WalkerState s(modes.lattice);
  for (std::size_t i = 0; i < s.sites_.size(); ++i) {
    s.sites_[i] = {modes.amplitudes[2 * i], modes.amplitudes[2 * i + 1]};
  }
  return s;
}

double WalkerState::norm_squared() const {
  double s = 0.0;
  for (const auto& p : sites_) s += std::norm(p.left) + std::norm(p.right);
  return s;
}

ModeAmplitudes WalkerState::to_modes() const {
  ModeAmplitudes m{lattice_, std::vector<Complex>(2 * sites_.size())};
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    m.amplitudes[2 * i] = sites_[i].left;
    m.amplitudes[2 * i + 1] = sites_[i].right;
  }
  return m;
}

namespace {

bool occupied(const CoinPair& p) {
  return p.left != Complex{} || p.right != Complex{};
}

template <typename CoinAt>
WalkerState step_with(const WalkerState& state, CoinAt&& coin_at) {
  const auto in = state.sites();
  const std::size_t n = in.size();
  if (occupied(in.front()) || occupied(in.back())) {
    throw LatticeOverflow("step: amplitude on lattice edge [" +
                          std::to_string(state.lattice().min_site()) + ", " +
                          std::to_string(state.lattice().max_site()) +
                          "] would shift off the lattice");
  }
  WalkerState next(state.lattice());
  auto out = next.sites();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!occupied(in[i])) continue;
    const CoinPair c = coin_at(state.lattice().position(static_cast<int>(i))).apply(in[i]);
    out[i - 1].left = c.left;
    out[i + 1].right = c.right;
  }
  return next;
}

}  // namespace

WalkerState step(const WalkerState& state, const CoinProvider& coin_for) {
  return step_with(state, coin_for);
}

WalkerState evolve(const WalkerState& initial, int steps,
                   const PhaseField& field, const StepObserver& observe) {
  if (steps < 0) throw std::invalid_argument("evolve: negative step count");
  if (steps > field.steps()) {
    throw std::invalid_argument("evolve: phase field covers " +
                                std::to_string(field.steps()) + " steps, " +
                                std::to_string(steps) + " requested");
  }
  if (!field.lattice().contains(initial.lattice())) {
    throw std::invalid_argument("evolve: phase field does not cover the lattice");
  }
  WalkerState state = initial;
  for (int tau = 1; tau <= steps; ++tau) {
    state = step_with(state, [&](int x) {
      const PhasePair p = field.at(x, tau);
      return phased_coin(p.left, p.right);
    });
    if (observe) observe(tau, state);
  }
  return state;
}

std::vector<double> position_distribution(const WalkerState& state) {
  std::vector<double> p;
  p.reserve(state.sites().size());
  for (const auto& s : state.sites()) p.push_back(std::norm(s.left) + std::norm(s.right));
  return p;
}

}  // namespace qwalk
