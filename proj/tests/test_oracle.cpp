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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qwalk/oracle.hpp"
#include "qwalk/walker.hpp"
#include "test_helpers.hpp"

using namespace qwalk;

namespace {

std::vector<double> probabilities(const ModeAmplitudes& m) {
  std::vector<double> p(static_cast<std::size_t>(m.lattice.size()));
  for (std::size_t k = 0; k < m.amplitudes.size(); ++k) p[k / 2] += std::norm(m.amplitudes[k]);
  return p;
}

}  // namespace

TEST_CASE("path sum: one ordered step") {
  const Lattice lat = Lattice::for_walk({0}, 1);
  const auto r = oracle::path_sum_amplitudes(0, Coin::L, 1, PhaseField::sample(ordered(), 1, lat, 0));
  CHECK(r.paths == 2);
  const auto& a = r.amplitudes;
  const double h = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(a.amplitudes[ModeAmplitudes::mode_index(lat, -1, Coin::L)] - h) < 1e-15);
  CHECK(std::abs(a.amplitudes[ModeAmplitudes::mode_index(lat, 1, Coin::R)] - h) < 1e-15);
  CHECK(std::abs(a.norm_squared() - 1.0) < 1e-15);
}

TEST_CASE("path sum: three ordered steps") {
  const Lattice lat = Lattice::for_walk({0}, 3);
  const auto r = oracle::path_sum_amplitudes(0, Coin::L, 3, PhaseField::sample(ordered(), 3, lat, 0));
  const auto p = probabilities(r.amplitudes);
  const auto at = [&](int x) { return p[static_cast<std::size_t>(lat.index(x))]; };
  CHECK(at(-3) == doctest::Approx(1.0 / 8).epsilon(1e-14));
  CHECK(at(-1) == doctest::Approx(5.0 / 8).epsilon(1e-14));
  CHECK(at(1) == doctest::Approx(1.0 / 8).epsilon(1e-14));
  CHECK(at(3) == doctest::Approx(1.0 / 8).epsilon(1e-14));
}

TEST_CASE("path sum: uniform (pi, 0) phases over two steps") {
  const Lattice lat = Lattice::for_walk({0}, 2);
  const auto field = PhaseField::from_tables(
      static_disorder(std::numbers::pi), 2, lat, 0,
      {std::vector<PhasePair>(static_cast<std::size_t>(lat.size()), {std::numbers::pi, 0.0}), {}, {}});
  const auto r = oracle::path_sum_amplitudes(0, Coin::L, 2, field);
  const auto s = evolve(WalkerState::localized(lat, 0, Coin::L), 2, field);
  const auto p = probabilities(r.amplitudes);
  const auto q = position_distribution(s);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p[i] - q[i]) < 1e-12);
  CHECK(oracle::compare(s, r) < 1e-12);
}

TEST_CASE("path sum agrees with the stepper for every kind") {
  double worst = 0.0;
  int cases = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    std::mt19937_64 rng(seed);
    const auto kind = testing::kAllKinds[seed % 5];
    const int t = 1 + static_cast<int>(seed % 10);
    const int x0 = static_cast<int>(rng() % 5) - 2;
    const Coin c = static_cast<Coin>(rng() % 2);
    const Lattice lat = Lattice::for_walk({x0}, t);
    const auto field = PhaseField::sample(testing::random_spec(kind, rng), t, lat, seed);
    const auto r = oracle::path_sum_amplitudes(x0, c, t, field);
    CHECK(std::abs(r.amplitudes.norm_squared() - 1.0) < 1e-10);
    worst = std::max(worst, oracle::compare(evolve(WalkerState::localized(lat, x0, c), t, field), r));
    ++cases;
  }
  CHECK(cases >= 50);
  CHECK(worst <= oracle::kAgreementTolerance);
}

TEST_CASE("path sum refuses steps above the cap") {
  const Lattice lat = Lattice::for_walk({0}, 17);
  const auto field = PhaseField::sample(ordered(), 17, lat, 0);
  CHECK_THROWS_AS(oracle::path_sum_amplitudes(0, Coin::L, 17, field), std::invalid_argument);
  CHECK_THROWS_AS(oracle::path_sum_amplitudes(0, Coin::L, 5, field, 4), std::invalid_argument);
  CHECK_NOTHROW(oracle::path_sum_amplitudes(0, Coin::L, 4, field, 4));
}

TEST_CASE("compare") {
  const Lattice lat(-1, 3);
  ModeAmplitudes a{lat, std::vector<Complex>(6, Complex{0.1, 0.2})};
  CHECK(oracle::compare(a, a) == 0.0);
  ModeAmplitudes b = a;
  b.amplitudes[3] += 1e-3;
  CHECK(oracle::compare(a, b) == doctest::Approx(1e-3).epsilon(1e-9));
  ModeAmplitudes c{Lattice(-1, 4), std::vector<Complex>(8)};
  CHECK_THROWS_AS(oracle::compare(a, c), std::invalid_argument);
}
