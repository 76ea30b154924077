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

// qwalk: runs quantum-walk disorder scenarios and writes plot-ready tables.
//
//   qwalk run --scenario fig3 --out results/fig3
//   qwalk run --config my.json --configs 20 --seed 7
//   qwalk presets
//   qwalk verify results/fig3
//
// Exit status: 0 success, 1 usage / invalid configuration, 2 runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/scenario.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct RunFlags {
  std::optional<std::string> config_file;
  std::optional<std::string> scenario;
  std::optional<int> steps;
  std::optional<std::string> disorder;
  std::optional<double> phi_max;
  std::optional<double> phi_static;
  std::optional<double> phi_dynamic;
  std::optional<int> configs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> symmetry;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> threads;
};

qwalk::ScenarioConfig build_config(const RunFlags& f) {
  nlohmann::json file = nlohmann::json::object();
  if (f.config_file) {
    std::ifstream in(*f.config_file);
    if (!in) throw std::invalid_argument("cannot read config file '" + *f.config_file + "'");
    file = nlohmann::json::parse(in);
  }
  if (f.scenario) {
    qwalk::preset(*f.scenario);  // unknown names are a usage error here
    file["scenario"] = *f.scenario;
  }
  qwalk::ScenarioConfig c = qwalk::scenario_from_json(file);

  nlohmann::json flags = nlohmann::json::object();
  if (f.steps) flags["steps"] = *f.steps;
  if (f.disorder) flags["disorder"] = *f.disorder;
  if (f.phi_max) flags["phi_max"] = *f.phi_max;
  if (f.phi_static) flags["phi_static"] = *f.phi_static;
  if (f.phi_dynamic) flags["phi_dynamic"] = *f.phi_dynamic;
  if (f.configs) flags["configs"] = *f.configs;
  if (f.seed) flags["seed"] = *f.seed;
  if (f.symmetry) flags["symmetry"] = *f.symmetry;
  if (f.out) flags["out"] = *f.out;
  if (f.format) flags["format"] = *f.format;
  if (f.threads) flags["threads"] = *f.threads;
  qwalk::apply_json(c, flags);
  if (!f.out && !file.contains("out")) c.out_dir = std::filesystem::path("out") / c.name;
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-particle discrete-time quantum walks under phase disorder"};
  app.require_subcommand(1);

  RunFlags f;
  auto* run = app.add_subcommand("run", "Run a scenario and write its tables");
  run->add_option("--config", f.config_file, "JSON scenario file (flags override it)");
  run->add_option("--scenario", f.scenario, "Preset name (see `qwalk presets`)");
  run->add_option("--steps", f.steps, "Number of walk steps t");
  run->add_option("--disorder", f.disorder, "ordered|static|dynamic|fluctuating|combined");
  run->add_option("--phi-max", f.phi_max, "Disorder strength in radians");
  run->add_option("--phi-static", f.phi_static, "Static strength of combined disorder");
  run->add_option("--phi-dynamic", f.phi_dynamic, "Dynamic strength of combined disorder");
  run->add_option("--configs", f.configs, "Disorder configurations to average");
  run->add_option("--seed", f.seed, "Base seed; configuration i uses seed + i");
  run->add_option("--symmetry", f.symmetry, "bose|fermi|both");
  run->add_option("--out", f.out, "Output directory");
  run->add_option("--format", f.format, "csv|json");
  run->add_option("--threads", f.threads, "Worker threads (0 = all cores)");

  auto* presets = app.add_subcommand("presets", "List built-in scenarios");

  std::string verify_dir;
  auto* verify = app.add_subcommand("verify", "Re-check output digests against manifest.json");
  verify->add_option("dir", verify_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (presets->parsed()) {
    for (const auto& name : qwalk::preset_names()) {
      const auto c = qwalk::preset(name);
      std::cout << name << "\t" << qwalk::to_string(c.pipeline) << "\tt=" << c.steps
                << "\tn=" << c.configs << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    try {
      const auto bad = qwalk::verify_manifest(verify_dir);
      for (const auto& name : bad) std::cerr << "digest mismatch: " << name << "\n";
      return bad.empty() ? 0 : kRuntimeError;
    } catch (const std::exception& e) {
      std::cerr << "qwalk: " << e.what() << "\n";
      return kRuntimeError;
    }
  }

  qwalk::ScenarioConfig config;
  try {
    config = build_config(f);
  } catch (const std::exception& e) {
    std::cerr << "qwalk: invalid configuration: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const auto manifest = qwalk::run_scenario(config);
    std::cout << "wrote " << manifest.files.size() + 1 << " files to " << config.out_dir.string()
              << " in " << manifest.wall_seconds << " s\n";
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
