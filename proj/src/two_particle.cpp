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

#include "qwalk/two_particle.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk {

std::string_view to_string(ExchangeSymmetry s) {
  return s == ExchangeSymmetry::Symmetric ? "bose" : "fermi";
}

ExchangeSymmetry parse_symmetry(std::string_view name) {
  if (name == "bose" || name == "bosonic" || name == "symmetric") {
    return ExchangeSymmetry::Symmetric;
  }
  if (name == "fermi" || name == "fermionic" || name == "antisymmetric") {
    return ExchangeSymmetry::Antisymmetric;
  }
  throw std::invalid_argument("unknown exchange symmetry '" + std::string(name) + "'");
}

void TwoParticleInput::validate() const {
  if (!(psi_a.lattice == psi_b.lattice)) {
    throw std::invalid_argument("TwoParticleInput: walkers on different lattices");
  }
  const auto n = static_cast<std::size_t>(psi_a.lattice.modes());
  if (psi_a.amplitudes.size() != n || psi_b.amplitudes.size() != n) {
    throw std::invalid_argument("TwoParticleInput: amplitude vector size mismatch");
  }
  if (std::abs(psi_a.norm_squared() - 1.0) > kOrthogonalityTolerance ||
      std::abs(psi_b.norm_squared() - 1.0) > kOrthogonalityTolerance) {
    throw std::invalid_argument("TwoParticleInput: walkers are not normalized");
  }
  Complex overlap{};
  for (std::size_t m = 0; m < n; ++m) {
    overlap += std::conj(psi_a.amplitudes[m]) * psi_b.amplitudes[m];
  }
  if (std::abs(overlap) > kOrthogonalityTolerance) {
    throw std::invalid_argument("TwoParticleInput: walkers are not orthogonal (|<a|b>| = " +
                                std::to_string(std::abs(overlap)) + ")");
  }
}

JointDistribution::JointDistribution(Lattice lattice, JointLevel level,
                                     std::optional<ExchangeSymmetry> symmetry)
    : lattice_(lattice),
      level_(level),
      symmetry_(symmetry),
      size_(level == JointLevel::Mode ? lattice.modes() : lattice.size()),
      p_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_), 0.0) {}

double JointDistribution::total() const {
  return std::accumulate(p_.begin(), p_.end(), 0.0);
}

std::vector<double> JointDistribution::row_sums() const {
  std::vector<double> r(static_cast<std::size_t>(size_), 0.0);
  for (int i = 0; i < size_; ++i) {
    double s = 0.0;
    for (int j = 0; j < size_; ++j) s += (*this)(i, j);
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

double JointDistribution::unordered_probability(int i, int j) const {
  if (i < j) throw std::invalid_argument("unordered_probability: requires i >= j");
  return i == j ? (*this)(i, i) : 2.0 * (*this)(i, j);
}

double JointDistribution::expectation(const std::function<double(int, int)>& omega) const {
  double s = 0.0;
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) s += (*this)(i, j) * omega(i, j);
  }
  return s;
}

namespace {

// First and one-past-last mode where either walker has amplitude; everything
// outside this window contributes exact zeros.
std::pair<std::size_t, std::size_t> support(const TwoParticleInput& in) {
  const auto& a = in.psi_a.amplitudes;
  const auto& b = in.psi_b.amplitudes;
  std::size_t lo = a.size(), hi = 0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] != Complex{} || b[m] != Complex{}) {
      lo = std::min(lo, m);
      hi = m + 1;
    }
  }
  if (lo > hi) lo = hi;
  return {lo, hi};
}

template <typename Entry>
JointDistribution fill_symmetric(const TwoParticleInput& input,
                                 std::optional<ExchangeSymmetry> sym, Entry&& entry) {
  input.validate();
  JointDistribution j(input.psi_a.lattice, JointLevel::Mode, sym);
  const auto [lo, hi] = support(input);
  const auto& a = input.psi_a.amplitudes;
  const auto& b = input.psi_b.amplitudes;
  for (std::size_t m = lo; m < hi; ++m) {
    for (std::size_t k = m; k < hi; ++k) {
      const double p = entry(a[m], b[m], a[k], b[k]);
      j(static_cast<int>(m), static_cast<int>(k)) = p;
      j(static_cast<int>(k), static_cast<int>(m)) = p;
    }
  }
  return j;
}

}  // namespace

JointDistribution joint_mode_distribution(const TwoParticleInput& input,
                                          ExchangeSymmetry sym) {
  const double s = sign_of(sym);
  return fill_symmetric(input, sym,
                        [s](Complex am, Complex bm, Complex ak, Complex bk) {
                          return 0.5 * std::norm(am * bk + s * (ak * bm));
                        });
}

JointDistribution distinguishable_mode_distribution(const TwoParticleInput& input) {
  return fill_symmetric(input, std::nullopt,
                        [](Complex am, Complex bm, Complex ak, Complex bk) {
                          return 0.5 * (std::norm(am * bk) + std::norm(ak * bm));
                        });
}

JointDistribution aggregate_to_positions(const JointDistribution& mode_joint) {
  if (mode_joint.level() != JointLevel::Mode) {
    throw std::invalid_argument("aggregate_to_positions: input is already position level");
  }
  JointDistribution out(mode_joint.lattice(), JointLevel::Position, mode_joint.symmetry());
  const int n = out.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out(x, y) = mode_joint(2 * x, 2 * y) + mode_joint(2 * x, 2 * y + 1) +
                  mode_joint(2 * x + 1, 2 * y) + mode_joint(2 * x + 1, 2 * y + 1);
    }
  }
  return out;
}

std::vector<double> marginal(const TwoParticleInput& input) {
  input.validate();
  const auto& a = input.psi_a.amplitudes;
  const auto& b = input.psi_b.amplitudes;
  std::vector<double> p(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) p[m] = 0.5 * (std::norm(a[m]) + std::norm(b[m]));
  return p;
}

std::vector<double> position_marginal(const TwoParticleInput& input) {
  const auto modes = marginal(input);
  std::vector<double> p(modes.size() / 2);
  for (std::size_t x = 0; x < p.size(); ++x) p[x] = modes[2 * x] + modes[2 * x + 1];
  return p;
}

DetectionProbabilities detection_probabilities(const TwoParticleInput& input,
                                               ExchangeSymmetry sym) {
  const auto single = marginal(input);
  DetectionProbabilities d{std::vector<double>(single.size()),
                           std::vector<double>(single.size())};
  const auto& a = input.psi_a.amplitudes;
  const auto& b = input.psi_b.amplitudes;
  for (std::size_t m = 0; m < single.size(); ++m) {
    if (sym == ExchangeSymmetry::Symmetric) {
      const double both = 2.0 * std::norm(a[m] * b[m]);  // P^(+,sym)(m, m)
      d.at_least_one[m] = 2.0 * single[m] - both;
      d.exactly_one[m] = 2.0 * single[m] - 2.0 * both;
    } else {
      d.at_least_one[m] = 2.0 * single[m];
      d.exactly_one[m] = 2.0 * single[m];
    }
  }
  return d;
}

}  // namespace qwalk
