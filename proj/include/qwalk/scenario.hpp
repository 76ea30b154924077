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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwalk/fitting.hpp"
#include "qwalk/statistics.hpp"
#include "qwalk/table.hpp"

namespace qwalk {

inline constexpr const char* kVersion = "0.1.0";

/// What a scenario produces.
///   Distribution : configuration-averaged final joints, marginal and fits
///   Series       : per-step observables for each listed disorder
///   Sweep        : final-step variance against a disorder strength grid
enum class Pipeline { Distribution, Series, Sweep };
std::string_view to_string(Pipeline p);
Pipeline parse_pipeline(std::string_view name);

struct SweepSpec {
  /// "phi_max" (the strength of each listed disorder), "phi_static" or
  /// "phi_dynamic" (the components of a Combined disorder).
  std::string parameter = "phi_max";
  std::vector<double> values;
};

struct ScenarioConfig {
  std::string name = "custom";
  Pipeline pipeline = Pipeline::Series;
  int steps = 100;
  /// One entry for Distribution; one series group / sweep curve per entry
  /// otherwise.
  std::vector<DisorderSpec> disorders{ordered()};
  int configs = 100;
  std::uint64_t base_seed = 1;
  std::vector<ExchangeSymmetry> symmetries{ExchangeSymmetry::Symmetric,
                                           ExchangeSymmetry::Antisymmetric};
  WalkerStart start_a{0, Coin::R};
  WalkerStart start_b{2, Coin::L};
  std::vector<Observable> observables{Observable::Variance};
  SweepSpec sweep{};
  int fit_first_step = 20;
  int fit_last_step = 100;
  std::filesystem::path out_dir = "out";
  OutputFormat format = OutputFormat::Csv;
  int threads = 0;

  /// Throws std::invalid_argument when t < 1, n < 1, a strength is outside
  /// [0, 2pi], sweep values are non-finite or unsorted, or the pipeline's
  /// requirements are not met.
  void validate() const;
};

/// Names of the built-in presets (fig2 ... fig9 and variants).
std::vector<std::string> preset_names();
/// Throws std::invalid_argument for unknown names.
ScenarioConfig preset(const std::string& name);

nlohmann::json to_json(const ScenarioConfig& c);
/// Starts from the preset named by "scenario" (or a custom default) and
/// applies every key present in `j`.
ScenarioConfig scenario_from_json(const nlohmann::json& j);
/// Applies keys of `j` onto an existing config.
void apply_json(ScenarioConfig& c, const nlohmann::json& j);

struct EmittedFile {
  std::string name;
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  nlohmann::json config;
  std::string version = kVersion;
  std::string generator = std::string(kGeneratorId);
  std::uint64_t base_seed = 0;
  double wall_seconds = 0.0;
  std::vector<EmittedFile> files;
};

nlohmann::json to_json(const RunManifest& m);

/// Tables a scenario produces, without touching the filesystem. Side data
/// (fits, sidecars, summaries) lands in `extras` keyed by file stem.
struct ScenarioOutput {
  std::vector<Table> tables;
  std::vector<std::pair<std::string, nlohmann::json>> extras;
};
ScenarioOutput compute_scenario(const ScenarioConfig& config);

/// Runs the pipeline, writes tables, JSON side files and manifest.json into
/// config.out_dir, and returns the manifest.
RunManifest run_scenario(const ScenarioConfig& config);

/// Re-digests every file listed in out_dir/manifest.json; returns the names
/// whose digest no longer matches.
std::vector<std::string> verify_manifest(const std::filesystem::path& out_dir);

}  // namespace qwalk
