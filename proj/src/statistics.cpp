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

#include "qwalk/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qwalk {

double variance_xm(const JointDistribution& joint) {
  double first = 0.0, second = 0.0;
  const int n = joint.size();
  for (int i = 0; i < n; ++i) {
    const double x = joint.position_of(i);
    for (int j = 0; j < n; ++j) {
      const double p = joint(i, j);
      if (p == 0.0) continue;
      const double s = x + joint.position_of(j);
      first += s * p;
      second += s * s * p;
    }
  }
  return std::max(0.0, second - first * first);
}

double classical_baseline(int steps) {
  if (steps < 0) throw std::invalid_argument("classical_baseline: negative step count");
  return 2.0 * steps;
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double joint_entropy(const JointDistribution& joint) {
  return shannon_entropy(joint.data());
}

double mutual_information(const JointDistribution& joint) {
  const auto rows = joint.row_sums();
  return 2.0 * shannon_entropy(rows) - joint_entropy(joint);
}

std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::Variance: return "variance";
    case Observable::Entropy: return "entropy";
    case Observable::MutualInformation: return "mutual_information";
  }
  return "unknown";
}

Observable parse_observable(std::string_view name) {
  for (auto o : {Observable::Variance, Observable::Entropy, Observable::MutualInformation}) {
    if (name == to_string(o)) return o;
  }
  if (name == "mi") return Observable::MutualInformation;
  throw std::invalid_argument("unknown observable '" + std::string(name) + "'");
}

void reduce_samples(const std::vector<std::vector<double>>& samples,
                    std::vector<double>& mean, std::vector<double>& std_dev) {
  if (samples.empty()) throw std::invalid_argument("reduce_samples: no samples");
  const std::size_t k = samples.front().size();
  const double n = static_cast<double>(samples.size());
  // Shifting by the first sample keeps identical samples at exactly zero spread.
  const auto& ref = samples.front();
  mean.assign(k, 0.0);
  std_dev.assign(k, 0.0);
  for (const auto& row : samples) {
    for (std::size_t c = 0; c < k; ++c) mean[c] += row[c] - ref[c];
  }
  for (auto& m : mean) m /= n;
  for (const auto& row : samples) {
    for (std::size_t c = 0; c < k; ++c) {
      const double d = (row[c] - ref[c]) - mean[c];
      std_dev[c] += d * d;
    }
  }
  for (std::size_t c = 0; c < k; ++c) mean[c] += ref[c];
  for (auto& s : std_dev) s = std::sqrt(s / n);
}

void EnsembleConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("ensemble: steps must be >= 1");
  if (configs < 1) throw std::invalid_argument("ensemble: configs must be >= 1");
  disorder.validate();
  if (start_a == start_b) {
    throw std::invalid_argument("ensemble: both walkers start in the same mode");
  }
  if (symmetries.empty()) throw std::invalid_argument("ensemble: no symmetry selected");
}

const ObservableSeries& EnsembleResult::get(Observable o, ExchangeSymmetry s) const {
  for (const auto& ser : series) {
    if (ser.name == to_string(o) && ser.metadata.value("symmetry", "") == to_string(s)) {
      return ser;
    }
  }
  throw std::out_of_range("EnsembleResult: no series " + std::string(to_string(o)) +
                          "/" + std::string(to_string(s)));
}

Lattice ensemble_lattice(const EnsembleConfig& config) {
  return Lattice::for_walk({config.start_a.site, config.start_b.site}, config.steps);
}

TwoParticleInput evolve_pair(const EnsembleConfig& config, const PhaseField& field) {
  const Lattice lattice = field.lattice();
  const auto a = evolve(WalkerState::localized(lattice, config.start_a.site, config.start_a.coin),
                        config.steps, field);
  const auto b = evolve(WalkerState::localized(lattice, config.start_b.site, config.start_b.coin),
                        config.steps, field);
  return {a.to_modes(), b.to_modes(), config.start_a, config.start_b};
}

namespace {

struct ConfigSamples {
  // values[series index][recorded step]
  std::vector<std::vector<double>> values;
  std::vector<JointDistribution> final_joints;  // one per symmetry
  std::vector<double> final_marginal;
};

double evaluate(Observable o, const JointDistribution& position_joint,
                const JointDistribution& mode_joint, JointLevel info_level) {
  const JointDistribution& info = info_level == JointLevel::Mode ? mode_joint : position_joint;
  switch (o) {
    case Observable::Variance: return variance_xm(position_joint);
    case Observable::Entropy: return joint_entropy(info);
    case Observable::MutualInformation: return mutual_information(info);
  }
  return 0.0;
}

ConfigSamples run_config(const EnsembleConfig& cfg, const Lattice& lattice, int i) {
  const PhaseField field = PhaseField::sample(
      cfg.disorder, cfg.steps, lattice, cfg.base_seed + static_cast<std::uint64_t>(i));

  const std::size_t nseries = cfg.observables.size() * cfg.symmetries.size();
  ConfigSamples out;
  out.values.resize(nseries);

  // Walker A snapshots at the recorded steps, then B in lockstep.
  std::vector<ModeAmplitudes> snaps_a;
  auto recorded = [&](int tau) { return cfg.every_step || tau == cfg.steps; };
  evolve(WalkerState::localized(lattice, cfg.start_a.site, cfg.start_a.coin), cfg.steps, field,
         [&](int tau, const WalkerState& s) {
           if (recorded(tau)) snaps_a.push_back(s.to_modes());
         });

  std::size_t k = 0;
  evolve(WalkerState::localized(lattice, cfg.start_b.site, cfg.start_b.coin), cfg.steps, field,
         [&](int tau, const WalkerState& s) {
           if (!recorded(tau)) return;
           const TwoParticleInput input{snaps_a[k++], s.to_modes(), cfg.start_a, cfg.start_b};
           for (std::size_t si = 0; si < cfg.symmetries.size(); ++si) {
             const auto mode_joint = joint_mode_distribution(input, cfg.symmetries[si]);
             const auto pos_joint = aggregate_to_positions(mode_joint);
             for (std::size_t oi = 0; oi < cfg.observables.size(); ++oi) {
               out.values[oi * cfg.symmetries.size() + si].push_back(
                   evaluate(cfg.observables[oi], pos_joint, mode_joint, cfg.information_level));
             }
             if (cfg.keep_distributions && tau == cfg.steps) out.final_joints.push_back(pos_joint);
           }
           if (cfg.keep_distributions && tau == cfg.steps) {
             out.final_marginal = position_marginal(input);
           }
         });
  return out;
}

}  // namespace

EnsembleResult ensemble_run(const EnsembleConfig& cfg) {
  cfg.validate();
  const Lattice lattice = ensemble_lattice(cfg);
  const auto n = static_cast<std::size_t>(cfg.configs);

  std::vector<ConfigSamples> per_config(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        per_config[i] = run_config(cfg, lattice, static_cast<int>(i));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  EnsembleResult result{lattice, {}, {}, {}};
  std::vector<int> steps;
  for (int tau = 1; tau <= cfg.steps; ++tau) {
    if (cfg.every_step || tau == cfg.steps) steps.push_back(tau);
  }
  for (std::size_t oi = 0; oi < cfg.observables.size(); ++oi) {
    for (std::size_t si = 0; si < cfg.symmetries.size(); ++si) {
      const std::size_t s = oi * cfg.symmetries.size() + si;
      std::vector<std::vector<double>> samples;
      samples.reserve(n);
      for (auto& c : per_config) samples.push_back(std::move(c.values[s]));
      ObservableSeries ser;
      ser.name = std::string(to_string(cfg.observables[oi]));
      ser.steps = steps;
      ser.configs = cfg.configs;
      reduce_samples(samples, ser.mean, ser.std_dev);
      ser.metadata = {{"observable", ser.name},
                      {"symmetry", to_string(cfg.symmetries[si])},
                      {"disorder", to_json(cfg.disorder)},
                      {"configs", cfg.configs},
                      {"base_seed", cfg.base_seed},
                      {"seeds", "base_seed + i, i in [0, configs)"},
                      {"generator", kGeneratorId},
                      {"std_dev", "population spread across configurations"}};
      result.series.push_back(std::move(ser));
    }
  }

  if (cfg.keep_distributions) {
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t si = 0; si < cfg.symmetries.size(); ++si) {
      JointDistribution mean(lattice, JointLevel::Position, cfg.symmetries[si]);
      for (const auto& c : per_config) {
        const auto& src = c.final_joints[si].data();
        auto& dst = mean.data();
        for (std::size_t q = 0; q < dst.size(); ++q) dst[q] += src[q];
      }
      for (auto& v : mean.data()) v *= inv;
      result.mean_joint.emplace(cfg.symmetries[si], std::move(mean));
    }
    result.mean_marginal.assign(static_cast<std::size_t>(lattice.size()), 0.0);
    for (const auto& c : per_config) {
      for (std::size_t q = 0; q < c.final_marginal.size(); ++q) {
        result.mean_marginal[q] += c.final_marginal[q];
      }
    }
    for (auto& v : result.mean_marginal) v *= inv;
  }
  return result;
}

}  // namespace qwalk
