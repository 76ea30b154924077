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

#include "doctest.h"
#include "qwalk/two_particle.hpp"
#include "test_helpers.hpp"

using namespace qwalk;

namespace {

constexpr auto kBose = ExchangeSymmetry::Symmetric;
constexpr auto kFermi = ExchangeSymmetry::Antisymmetric;

TwoParticleInput delta_pair(const Lattice& lat, int a, int b) {
  ModeAmplitudes pa{lat, std::vector<Complex>(static_cast<std::size_t>(lat.modes()))};
  ModeAmplitudes pb = pa;
  pa.amplitudes[static_cast<std::size_t>(a)] = 1.0;
  pb.amplitudes[static_cast<std::size_t>(b)] = 1.0;
  return {pa, pb, {}, {}};
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

}  // namespace

TEST_CASE("symmetry names") {
  CHECK(to_string(kBose) == "bose");
  CHECK(to_string(kFermi) == "fermi");
  CHECK(parse_symmetry("bosonic") == kBose);
  CHECK(parse_symmetry("antisymmetric") == kFermi);
  CHECK_THROWS_AS(parse_symmetry("anyon"), std::invalid_argument);
  CHECK(sign_of(kBose) == 1.0);
  CHECK(sign_of(kFermi) == -1.0);
}

TEST_CASE("delta pair joints") {
  const Lattice lat(0, 3);
  const int a = ModeAmplitudes::mode_index(lat, 0, Coin::L);
  const int b = ModeAmplitudes::mode_index(lat, 1, Coin::R);
  const auto in = delta_pair(lat, a, b);
  for (auto sym : {kBose, kFermi}) {
    const auto j = joint_mode_distribution(in, sym);
    CHECK(j(a, b) == doctest::Approx(0.5));
    CHECK(j(b, a) == doctest::Approx(0.5));
    CHECK(j.total() == doctest::Approx(1.0));
    const auto pos = aggregate_to_positions(j);
    CHECK(pos.level() == JointLevel::Position);
    CHECK(pos(0, 1) == doctest::Approx(0.5));
    CHECK(pos(1, 0) == doctest::Approx(0.5));
    CHECK(pos.total() == doctest::Approx(1.0));
  }
  const auto m = marginal(in);
  CHECK(m[static_cast<std::size_t>(a)] == 0.5);
  CHECK(m[static_cast<std::size_t>(b)] == 0.5);
  const auto pm = position_marginal(in);
  CHECK(pm == std::vector<double>{0.5, 0.5, 0.0});
  CHECK_THROWS_AS(aggregate_to_positions(aggregate_to_positions(joint_mode_distribution(in, kBose))),
                  std::invalid_argument);
}

TEST_CASE("delta pair detection probabilities") {
  const Lattice lat(0, 3);
  const int a = 0, b = 3;
  const auto in = delta_pair(lat, a, b);
  const auto f = detection_probabilities(in, kFermi);
  CHECK(f.exactly_one[a] == doctest::Approx(1.0));
  CHECK(f.exactly_one[b] == doctest::Approx(1.0));
  CHECK(f.at_least_one == f.exactly_one);
  const auto bo = detection_probabilities(in, kBose);
  CHECK(bo.at_least_one[a] == doctest::Approx(1.0));
  CHECK(bo.exactly_one[a] == doctest::Approx(1.0));
}

TEST_CASE("bunched pair: both walkers in one mode is forbidden only for fermions") {
  // psi_A = (|m> + |k>)/sqrt2, psi_B = (|m> - |k>)/sqrt2 are orthogonal and overlap on m.
  const Lattice lat(0, 2);
  ModeAmplitudes pa{lat, std::vector<Complex>(4)};
  ModeAmplitudes pb = pa;
  const double h = 1.0 / std::sqrt(2.0);
  pa.amplitudes[0] = h;
  pa.amplitudes[2] = h;
  pb.amplitudes[0] = h;
  pb.amplitudes[2] = -h;
  const TwoParticleInput in{pa, pb, {}, {}};
  const auto bose = joint_mode_distribution(in, kBose);
  const auto fermi = joint_mode_distribution(in, kFermi);
  CHECK(bose(0, 0) == doctest::Approx(0.5));
  CHECK(bose(2, 2) == doctest::Approx(0.5));
  CHECK(bose(0, 2) == doctest::Approx(0.0));
  CHECK(fermi(0, 0) == 0.0);
  CHECK(fermi(0, 2) == doctest::Approx(0.5));
  const auto d = detection_probabilities(in, kBose);
  CHECK(d.at_least_one[0] - d.exactly_one[0] == doctest::Approx(bose(0, 0)));
}

TEST_CASE("non-orthogonal or mismatched inputs are rejected") {
  const Lattice lat(0, 2);
  const auto same = delta_pair(lat, 1, 1);
  CHECK_THROWS_AS(joint_mode_distribution(same, kBose), std::invalid_argument);
  auto bad_norm = delta_pair(lat, 0, 1);
  bad_norm.psi_a.amplitudes[0] = 2.0;
  CHECK_THROWS_AS(marginal(bad_norm), std::invalid_argument);
  auto other = delta_pair(lat, 0, 1);
  other.psi_b = ModeAmplitudes{Lattice(0, 3), std::vector<Complex>(6)};
  other.psi_b.amplitudes[1] = 1.0;
  CHECK_THROWS_AS(detection_probabilities(other, kFermi), std::invalid_argument);
  CHECK_THROWS_AS(joint_mode_distribution(delta_pair(lat, 0, 1), kBose).unordered_probability(0, 1),
                  std::invalid_argument);
}

TEST_CASE("property: joint invariants over random evolved pairs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto in = testing::random_pair(seed, 12 + static_cast<int>(seed % 9));
    const auto m = marginal(in);
    const auto bose = joint_mode_distribution(in, kBose);
    const auto fermi = joint_mode_distribution(in, kFermi);
    const auto dist = distinguishable_mode_distribution(in);
    const int n = bose.size();

    CHECK(std::abs(bose.total() - 1.0) < 1e-12);
    CHECK(std::abs(fermi.total() - 1.0) < 1e-12);
    CHECK(max_abs_diff(bose.row_sums(), m) < 1e-12);
    CHECK(max_abs_diff(fermi.row_sums(), m) < 1e-12);

    double asym = 0.0, diag = 0.0, neg = 0.0, distinct = 0.0;
    for (int i = 0; i < n; ++i) {
      diag = std::max(diag, std::abs(fermi(i, i)));
      for (int j = 0; j < n; ++j) {
        asym = std::max({asym, std::abs(bose(i, j) - bose(j, i)), std::abs(fermi(i, j) - fermi(j, i))});
        neg = std::min({neg, bose(i, j), fermi(i, j)});
        distinct = std::max(distinct, std::abs(dist(i, j) - 0.5 * (bose(i, j) + fermi(i, j))));
      }
    }
    CHECK(asym == 0.0);
    CHECK(diag <= 1e-15);
    CHECK(neg >= 0.0);
    CHECK(distinct < 1e-12);

    // Accessor and expectation identities for an exchange-symmetric table.
    const auto omega = [](int i, int j) { return std::cos(0.3 * i) * std::cos(0.3 * j) + i + j; };
    for (const auto* jd : {&bose, &fermi}) {
      double unordered = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
          const double u = jd->unordered_probability(i, j);
          CHECK(u == (i == j ? (*jd)(i, j) : 2.0 * (*jd)(i, j)));
          unordered += u * omega(i, j);
        }
      }
      CHECK(std::abs(unordered - jd->expectation(omega)) < 1e-12);
    }

    const auto pb = aggregate_to_positions(bose);
    const auto pf = aggregate_to_positions(fermi);
    CHECK(std::abs(pb.total() - 1.0) < 1e-12);
    CHECK(std::abs(pf.total() - 1.0) < 1e-12);
    const auto pm = position_marginal(in);
    CHECK(max_abs_diff(pb.row_sums(), pm) < 1e-12);
    CHECK(max_abs_diff(pf.row_sums(), pm) < 1e-12);

    const auto db = detection_probabilities(in, kBose);
    const auto df = detection_probabilities(in, kFermi);
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      CHECK(std::abs(db.at_least_one[k] - db.exactly_one[k] - bose(i, i)) < 1e-12);
      CHECK(df.at_least_one[k] == df.exactly_one[k]);
      CHECK(std::abs(df.exactly_one[k] - 2.0 * m[k]) < 1e-15);
    }
  }
}
