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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qwalk/disorder.hpp"
#include "test_helpers.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

// One-sample Kolmogorov-Smirnov statistic against U[0, width).
double ks_uniform(std::vector<double> v, double width) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = v[i] / width;
    d = std::max({d, (static_cast<double>(i) + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace

TEST_CASE("kind names round trip") {
  for (auto k : testing::kAllKinds) CHECK(parse_disorder_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_disorder_kind("anderson"), std::invalid_argument);
}

TEST_CASE("same seed gives the same field") {
  const Lattice lat(-20, 41);
  for (auto k : testing::kAllKinds) {
    std::mt19937_64 rng(5);
    const auto spec = testing::random_spec(k, rng);
    CHECK(PhaseField::sample(spec, 20, lat, 77) == PhaseField::sample(spec, 20, lat, 77));
  }
  const auto a = PhaseField::sample(static_disorder(), 20, lat, 1);
  const auto b = PhaseField::sample(static_disorder(), 20, lat, 2);
  CHECK(a.tables() != b.tables());
}

TEST_CASE("ordered field is zero everywhere") {
  const Lattice lat(-5, 11);
  const auto f = PhaseField::sample(ordered(), 5, lat, 9);
  for (int t = 1; t <= 5; ++t)
    for (int x = -5; x <= 5; ++x) CHECK(f.at(x, t) == PhasePair{});
}

TEST_CASE("static phases ignore the step, dynamic phases ignore the site") {
  const Lattice lat(-10, 21);
  const auto s = PhaseField::sample(static_disorder(), 8, lat, 3);
  const auto d = PhaseField::sample(dynamic_disorder(), 8, lat, 3);
  bool static_ok = true, dynamic_ok = true, varies = false;
  for (int x = -10; x <= 10; ++x) {
    for (int t = 1; t <= 8; ++t) {
      if (s.at(x, t) != s.at(x, 1)) static_ok = false;
      if (d.at(x, t) != d.at(-10, t)) dynamic_ok = false;
    }
    if (s.at(x, 1) != s.at(-10, 1)) varies = true;
  }
  CHECK(static_ok);
  CHECK(dynamic_ok);
  CHECK(varies);
  // Left and right phases are drawn independently.
  CHECK(s.at(0, 1).left != s.at(0, 1).right);
  CHECK(d.at(0, 1).left != d.at(0, 1).right);
}

TEST_CASE("combined field is the sum of its static and fluctuating parts") {
  const Lattice lat(-12, 25);
  const int t = 12;
  const auto c = PhaseField::sample(combined_disorder(2.0, 1.5), t, lat, 42);
  const auto s = PhaseField::sample(static_disorder(2.0), t, lat, 42);
  const auto f = PhaseField::sample(fluctuating_disorder(1.5), t, lat, 42);
  for (int tau = 1; tau <= t; ++tau) {
    for (int x = -12; x <= 12; ++x) {
      const auto pc = c.at(x, tau), ps = s.at(x, tau), pf = f.at(x, tau);
      CHECK(pc.left == ps.left + pf.left);
      CHECK(pc.right == ps.right + pf.right);
    }
  }
}

TEST_CASE("kind degeneracies") {
  const Lattice lat(-15, 31);
  const int t = 15;
  const auto start = WalkerState::localized(lat, 0, Coin::L);
  const auto run = [&](const DisorderSpec& spec) {
    return evolve(start, t, PhaseField::sample(spec, t, lat, 8));
  };
  CHECK(run(combined_disorder(kPi, 0.0)) == run(static_disorder(kPi)));
  CHECK(run(combined_disorder(0.0, kPi)) == run(fluctuating_disorder(kPi)));
  CHECK(run(static_disorder(0.0)) == run(ordered()));
  CHECK(run(dynamic_disorder(0.0)) == run(ordered()));
}

TEST_CASE("phase statistics: mean and uniformity") {
  const Lattice lat(0, 5000);
  const auto f = PhaseField::sample(static_disorder(kPi), 1, lat, 123);
  std::vector<double> all;
  for (const auto& p : f.tables().site) {
    all.push_back(p.left);
    all.push_back(p.right);
  }
  REQUIRE(all.size() == 10000);
  double mean = 0.0;
  for (double v : all) mean += v;
  mean /= static_cast<double>(all.size());
  CHECK(std::abs(mean - kPi / 2) < 0.05);
  CHECK(*std::min_element(all.begin(), all.end()) >= 0.0);
  CHECK(*std::max_element(all.begin(), all.end()) < kPi);
  // Critical value at the 0.01 level.
  CHECK(ks_uniform(all, kPi) < 1.628 / std::sqrt(static_cast<double>(all.size())));

  const auto g = PhaseField::sample(fluctuating_disorder(kPi / 2), 100, Lattice(0, 50), 9);
  std::vector<double> st;
  for (const auto& p : g.tables().space_time) st.push_back(p.left);
  CHECK(ks_uniform(st, kPi / 2) < 1.628 / std::sqrt(static_cast<double>(st.size())));
}

TEST_CASE("strength outside [0, 2pi] is rejected") {
  const Lattice lat(0, 3);
  CHECK_THROWS_AS(PhaseField::sample(static_disorder(-0.1), 1, lat, 0), std::invalid_argument);
  CHECK_THROWS_AS(PhaseField::sample(dynamic_disorder(7.0), 1, lat, 0), std::invalid_argument);
  CHECK_THROWS_AS(PhaseField::sample(combined_disorder(1.0, NAN), 1, lat, 0),
                  std::invalid_argument);
  CHECK_NOTHROW(PhaseField::sample(static_disorder(2 * kPi), 1, lat, 0));
}

TEST_CASE("lookups outside the field") {
  const Lattice lat(-2, 5);
  const auto f = PhaseField::sample(fluctuating_disorder(), 3, lat, 0);
  CHECK_THROWS_AS(f.at(0, 0), std::out_of_range);
  CHECK_THROWS_AS(f.at(0, 4), std::out_of_range);
  CHECK_THROWS_AS(f.at(3, 1), std::out_of_range);
  CHECK(phases_at(f, 1, 2) == f.at(1, 2));
}

TEST_CASE("from_tables validates shapes") {
  const Lattice lat(-2, 5);
  CHECK_THROWS_AS(PhaseField::from_tables(static_disorder(), 3, lat, 0, {{{0, 0}}, {}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      PhaseField::from_tables(dynamic_disorder(), 1, lat, 0, {{}, {{INFINITY, 0}}, {}}),
      std::invalid_argument);
}

TEST_CASE("json round trip") {
  const Lattice lat(-6, 13);
  for (auto k : testing::kAllKinds) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(k) + 1);
    const auto spec = testing::random_spec(k, rng);
    CHECK(disorder_spec_from_json(to_json(spec)) == spec);
    const auto f = sample_phase_field(spec, 6, lat, 31);
    CHECK(phase_field_from_json(to_json(f, true)) == f);
    CHECK(phase_field_from_json(to_json(f, false)) == f);
    CHECK(to_json(f, false)["generator"] == std::string(kGeneratorId));
  }
}
