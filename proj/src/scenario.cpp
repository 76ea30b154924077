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

#include "qwalk/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qwalk {

std::string_view to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Distribution: return "distribution";
    case Pipeline::Series: return "series";
    case Pipeline::Sweep: return "sweep";
  }
  return "unknown";
}

Pipeline parse_pipeline(std::string_view name) {
  for (auto p : {Pipeline::Distribution, Pipeline::Series, Pipeline::Sweep}) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown pipeline '" + std::string(name) + "'");
}

void ScenarioConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (configs < 1) throw std::invalid_argument("configs must be >= 1");
  if (disorders.empty()) throw std::invalid_argument("no disorder selected");
  for (const auto& d : disorders) d.validate();
  if (symmetries.empty()) throw std::invalid_argument("no symmetry selected");
  if (start_a == start_b) throw std::invalid_argument("both walkers start in the same mode");
  if (fit_first_step > fit_last_step) throw std::invalid_argument("empty fit window");
  switch (pipeline) {
    case Pipeline::Distribution:
      if (disorders.size() != 1) {
        throw std::invalid_argument("distribution scenarios take exactly one disorder");
      }
      break;
    case Pipeline::Series:
      if (observables.empty()) throw std::invalid_argument("no observable selected");
      break;
    case Pipeline::Sweep: {
      if (sweep.values.empty()) throw std::invalid_argument("sweep has no values");
      for (double v : sweep.values) {
        if (!std::isfinite(v)) throw std::invalid_argument("sweep values must be finite");
        if (v < 0.0 || v > 2.0 * std::numbers::pi) {
          throw std::invalid_argument("sweep values must lie in [0, 2pi]");
        }
      }
      if (!std::is_sorted(sweep.values.begin(), sweep.values.end())) {
        throw std::invalid_argument("sweep values must be sorted");
      }
      const bool combined_param =
          sweep.parameter == "phi_static" || sweep.parameter == "phi_dynamic";
      if (!combined_param && sweep.parameter != "phi_max") {
        throw std::invalid_argument("unknown sweep parameter '" + sweep.parameter + "'");
      }
      for (const auto& d : disorders) {
        if (combined_param && d.kind != DisorderKind::Combined) {
          throw std::invalid_argument(sweep.parameter + " sweeps need combined disorder");
        }
      }
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Presets

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> strength_grid() {
  std::vector<double> v;
  for (int k = 0; k <= 10; ++k) v.push_back(k * kPi / 10.0);
  return v;
}

ScenarioConfig distribution_preset(std::string name, DisorderSpec d, int configs) {
  ScenarioConfig c;
  c.name = std::move(name);
  c.pipeline = Pipeline::Distribution;
  c.steps = 50;
  c.disorders = {d};
  c.configs = configs;
  return c;
}

ScenarioConfig series_preset(std::string name, Observable o, int configs) {
  ScenarioConfig c;
  c.name = std::move(name);
  c.pipeline = Pipeline::Series;
  c.steps = 100;
  c.configs = configs;
  c.observables = {o};
  c.disorders = {ordered(), static_disorder(), dynamic_disorder(), fluctuating_disorder(),
                 combined_disorder()};
  return c;
}

ScenarioConfig sweep_preset(std::string name, std::vector<DisorderSpec> d, std::string param) {
  ScenarioConfig c;
  c.name = std::move(name);
  c.pipeline = Pipeline::Sweep;
  c.steps = 100;
  c.configs = 100;
  c.disorders = std::move(d);
  c.sweep = {std::move(param), strength_grid()};
  return c;
}

const std::map<std::string, ScenarioConfig (*)()>& preset_table() {
  static const std::map<std::string, ScenarioConfig (*)()> table{
      {"fig2", [] { return distribution_preset("fig2", ordered(), 1); }},
      {"fig3", [] { return distribution_preset("fig3", static_disorder(), 100); }},
      {"fig4", [] { return distribution_preset("fig4", dynamic_disorder(), 100); }},
      {"fig4-combined", [] { return distribution_preset("fig4-combined", combined_disorder(), 100); }},
      {"fig4-fluctuating",
       [] { return distribution_preset("fig4-fluctuating", fluctuating_disorder(), 100); }},
      {"fig5", [] { return series_preset("fig5", Observable::Variance, 100); }},
      {"fig6",
       [] { return sweep_preset("fig6", {static_disorder(), dynamic_disorder()}, "phi_max"); }},
      {"fig7", [] { return sweep_preset("fig7", {combined_disorder(kPi, 0.0)}, "phi_dynamic"); }},
      {"fig8", [] { return series_preset("fig8", Observable::Entropy, 50); }},
      {"fig9", [] { return series_preset("fig9", Observable::MutualInformation, 50); }},
  };
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [k, _] : preset_table()) names.push_back(k);
  return names;
}

ScenarioConfig preset(const std::string& name) {
  const auto& t = preset_table();
  const auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("unknown scenario '" + name + "'");
  return it->second();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json start_json(const WalkerStart& s) {
  return {{"site", s.site}, {"coin", s.coin == Coin::L ? "L" : "R"}};
}

WalkerStart start_from_json(const nlohmann::json& j) {
  WalkerStart s;
  s.site = j.at("site").get<int>();
  const auto coin = j.at("coin").get<std::string>();
  if (coin != "L" && coin != "R") throw std::invalid_argument("coin must be \"L\" or \"R\"");
  s.coin = coin == "L" ? Coin::L : Coin::R;
  return s;
}

std::vector<ExchangeSymmetry> parse_symmetry_selection(const std::string& s) {
  if (s == "both") return {ExchangeSymmetry::Symmetric, ExchangeSymmetry::Antisymmetric};
  return {parse_symmetry(s)};
}

std::string symmetry_selection(const std::vector<ExchangeSymmetry>& v) {
  if (v.size() == 2) return "both";
  return std::string(to_string(v.front()));
}

}  // namespace

nlohmann::json to_json(const ScenarioConfig& c) {
  auto disorders = nlohmann::json::array();
  for (const auto& d : c.disorders) disorders.push_back(to_json(d));
  auto obs = nlohmann::json::array();
  for (auto o : c.observables) obs.push_back(to_string(o));
  nlohmann::json j{{"scenario", c.name},
                   {"pipeline", to_string(c.pipeline)},
                   {"steps", c.steps},
                   {"disorders", disorders},
                   {"configs", c.configs},
                   {"seed", c.base_seed},
                   {"symmetry", symmetry_selection(c.symmetries)},
                   {"start_a", start_json(c.start_a)},
                   {"start_b", start_json(c.start_b)},
                   {"observables", obs},
                   {"fit_window", {c.fit_first_step, c.fit_last_step}},
                   {"out", c.out_dir.string()},
                   {"format", to_string(c.format)}};
  if (c.pipeline == Pipeline::Sweep) {
    j["sweep"] = {{"parameter", c.sweep.parameter}, {"values", c.sweep.values}};
  }
  return j;
}

void apply_json(ScenarioConfig& c, const nlohmann::json& j) {
  if (j.contains("pipeline")) c.pipeline = parse_pipeline(j["pipeline"].get<std::string>());
  if (j.contains("steps")) c.steps = j["steps"].get<int>();
  if (j.contains("disorders")) {
    c.disorders.clear();
    for (const auto& d : j["disorders"]) c.disorders.push_back(disorder_spec_from_json(d));
  }
  if (j.contains("disorder")) {
    const auto& d = j["disorder"];
    if (d.is_string()) {
      DisorderSpec spec{parse_disorder_kind(d.get<std::string>()), kDefaultStrength,
                        kDefaultStrength};
      if (spec.kind == DisorderKind::Ordered) spec = ordered();
      if (spec.kind != DisorderKind::Combined && spec.kind != DisorderKind::Ordered) {
        spec.dynamic_strength = 0.0;
      }
      c.disorders = {spec};
    } else {
      c.disorders = {disorder_spec_from_json(d)};
    }
  }
  for (auto& d : c.disorders) {
    if (d.kind == DisorderKind::Ordered) continue;
    if (d.kind == DisorderKind::Combined) {
      if (j.contains("phi_static")) d.strength = j["phi_static"].get<double>();
      if (j.contains("phi_dynamic")) d.dynamic_strength = j["phi_dynamic"].get<double>();
    } else if (j.contains("phi_max")) {
      d.strength = j["phi_max"].get<double>();
    }
  }
  if (j.contains("configs")) c.configs = j["configs"].get<int>();
  if (j.contains("seed")) c.base_seed = j["seed"].get<std::uint64_t>();
  if (j.contains("symmetry")) c.symmetries = parse_symmetry_selection(j["symmetry"].get<std::string>());
  if (j.contains("start_a")) c.start_a = start_from_json(j["start_a"]);
  if (j.contains("start_b")) c.start_b = start_from_json(j["start_b"]);
  if (j.contains("observables")) {
    c.observables.clear();
    for (const auto& o : j["observables"]) c.observables.push_back(parse_observable(o.get<std::string>()));
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (s.contains("parameter")) c.sweep.parameter = s["parameter"].get<std::string>();
    if (s.contains("values")) c.sweep.values = s["values"].get<std::vector<double>>();
  }
  if (j.contains("fit_window")) {
    c.fit_first_step = j["fit_window"].at(0).get<int>();
    c.fit_last_step = j["fit_window"].at(1).get<int>();
  }
  if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
  if (j.contains("format")) c.format = parse_output_format(j["format"].get<std::string>());
  if (j.contains("threads")) c.threads = j["threads"].get<int>();
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  ScenarioConfig c;
  if (j.contains("scenario")) {
    const auto name = j["scenario"].get<std::string>();
    const auto names = preset_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      c = preset(name);
    } else {
      c.name = name;
    }
  }
  apply_json(c, j);
  return c;
}

nlohmann::json to_json(const RunManifest& m) {
  auto files = nlohmann::json::array();
  for (const auto& f : m.files) {
    files.push_back({{"name", f.name}, {"sha256", f.sha256}, {"bytes", f.bytes}});
  }
  return {{"config", m.config},
          {"version", m.version},
          {"generator", m.generator},
          {"base_seed", m.base_seed},
          {"wall_seconds", m.wall_seconds},
          {"files", files}};
}

// ---------------------------------------------------------------------------
// Pipelines

namespace {

EnsembleConfig ensemble_for(const ScenarioConfig& c, const DisorderSpec& d) {
  EnsembleConfig e;
  e.steps = c.steps;
  e.disorder = d;
  e.configs = d.kind == DisorderKind::Ordered ? 1 : c.configs;
  e.base_seed = c.base_seed;
  e.start_a = c.start_a;
  e.start_b = c.start_b;
  e.symmetries = c.symmetries;
  e.observables = c.observables;
  e.threads = c.threads;
  return e;
}

double fit_center(const ScenarioConfig& c) {
  return 0.5 * (c.start_a.site + c.start_b.site);
}

template <typename Fit>
nlohmann::json try_fit(Fit&& fit) {
  try {
    return to_json(fit());
  } catch (const FitError& e) {
    return {{"error", e.what()}};
  }
}

ScenarioOutput run_distribution(const ScenarioConfig& c) {
  EnsembleConfig e = ensemble_for(c, c.disorders.front());
  e.observables = {Observable::Variance, Observable::Entropy, Observable::MutualInformation};
  e.every_step = false;
  e.keep_distributions = true;
  const EnsembleResult r = ensemble_run(e);
  const Lattice& lat = r.lattice;

  ScenarioOutput out;
  for (const auto& [sym, joint] : r.mean_joint) {
    Table t{"joint_" + std::string(to_string(sym)), {"i", "j", "p"}, {}};
    for (int i = 1; i + 1 < joint.size(); ++i) {
      for (int k = 1; k + 1 < joint.size(); ++k) {
        t.rows.push_back({std::int64_t{lat.position(i)}, std::int64_t{lat.position(k)}, joint(i, k)});
      }
    }
    out.tables.push_back(std::move(t));
  }
  Table m{"marginal", {"x", "p"}, {}};
  for (int i = 1; i + 1 < lat.size(); ++i) {
    m.rows.push_back({std::int64_t{lat.position(i)}, r.mean_marginal[static_cast<std::size_t>(i)]});
  }
  out.tables.push_back(std::move(m));

  const double center = fit_center(c);
  out.extras.emplace_back(
      "fits",
      nlohmann::json{
          {"center", center},
          {"exponential",
           try_fit([&] { return fit_exponential_decay(r.mean_marginal, lat.min_site(), center); })},
          {"gaussian",
           try_fit([&] { return fit_gaussian_semilog(r.mean_marginal, lat.min_site(), center); })}});

  nlohmann::json summary{{"step", c.steps}, {"configs", e.configs}};
  for (const auto& s : r.series) {
    summary[s.name][s.metadata["symmetry"].get<std::string>()] = {{"mean", s.mean.back()},
                                                                  {"std_dev", s.std_dev.back()}};
  }
  out.extras.emplace_back("summary", std::move(summary));
  return out;
}

std::vector<std::string> disorder_labels(const std::vector<DisorderSpec>& ds) {
  std::vector<std::string> labels;
  std::map<std::string, int> seen;
  for (const auto& d : ds) {
    std::string l(to_string(d.kind));
    const int k = seen[l]++;
    labels.push_back(k == 0 ? l : l + "_" + std::to_string(k));
  }
  return labels;
}

ScenarioOutput run_series(const ScenarioConfig& c) {
  ScenarioOutput out;
  nlohmann::json fits = nlohmann::json::object();
  const auto labels = disorder_labels(c.disorders);
  for (std::size_t di = 0; di < c.disorders.size(); ++di) {
    const EnsembleResult r = ensemble_run(ensemble_for(c, c.disorders[di]));
    for (const auto& s : r.series) {
      const std::string sym = s.metadata["symmetry"].get<std::string>();
      const std::string stem = s.name + "_" + labels[di] + "_" + sym;
      Table t{stem, {"step", "mean", "std_dev"}, {}};
      for (std::size_t k = 0; k < s.steps.size(); ++k) {
        t.rows.push_back({std::int64_t{s.steps[k]}, s.mean[k], s.std_dev[k]});
      }
      out.tables.push_back(std::move(t));
      out.extras.emplace_back(stem + ".meta", s.metadata);
      if (s.name == to_string(Observable::Variance)) {
        fits[labels[di]][sym] =
            try_fit([&] { return fit_power_law(s, c.fit_first_step, c.fit_last_step); });
      }
    }
  }
  if (std::find(c.observables.begin(), c.observables.end(), Observable::Variance) !=
      c.observables.end()) {
    Table b{"classical_baseline", {"step", "variance"}, {}};
    for (int t = 1; t <= c.steps; ++t) b.rows.push_back({std::int64_t{t}, classical_baseline(t)});
    out.tables.push_back(std::move(b));
    out.extras.emplace_back("fits", std::move(fits));
  }
  return out;
}

ScenarioOutput run_sweep(const ScenarioConfig& c) {
  ScenarioOutput out;
  Table t{"variance_vs_phi", {"phi", "kind", "symmetry", "var_mean", "var_std"}, {}};
  const double baseline = classical_baseline(c.steps);
  nlohmann::json first_above = nlohmann::json::object();
  const auto labels = disorder_labels(c.disorders);
  for (std::size_t di = 0; di < c.disorders.size(); ++di) {
    for (auto sym : c.symmetries) first_above[labels[di]][std::string(to_string(sym))] = nullptr;
    for (double v : c.sweep.values) {
      DisorderSpec d = c.disorders[di];
      if (c.sweep.parameter == "phi_dynamic") {
        d.dynamic_strength = v;
      } else {
        d.strength = v;
      }
      EnsembleConfig e = ensemble_for(c, d);
      e.configs = c.configs;
      e.observables = {Observable::Variance};
      e.every_step = false;
      const EnsembleResult r = ensemble_run(e);
      for (auto sym : c.symmetries) {
        const auto& s = r.get(Observable::Variance, sym);
        t.rows.push_back({v, labels[di], std::string(to_string(sym)), s.mean.back(), s.std_dev.back()});
        auto& slot = first_above[labels[di]][std::string(to_string(sym))];
        if (slot.is_null() && s.mean.back() > baseline) slot = v;
      }
    }
  }
  out.tables.push_back(std::move(t));
  out.extras.emplace_back("sweep_summary",
                          nlohmann::json{{"parameter", c.sweep.parameter},
                                         {"steps", c.steps},
                                         {"classical_baseline", baseline},
                                         {"first_value_above_baseline", first_above}});
  return out;
}

}  // namespace

ScenarioOutput compute_scenario(const ScenarioConfig& config) {
  config.validate();
  switch (config.pipeline) {
    case Pipeline::Distribution: return run_distribution(config);
    case Pipeline::Series: return run_series(config);
    case Pipeline::Sweep: return run_sweep(config);
  }
  return {};
}

RunManifest run_scenario(const ScenarioConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const ScenarioOutput out = compute_scenario(config);

  auto paths = emit_results(out.tables, config.format, config.out_dir);
  for (const auto& [stem, j] : out.extras) {
    const auto p = config.out_dir / (stem + ".json");
    write_file(p, j.dump(2) + "\n");
    paths.push_back(p);
  }

  RunManifest m;
  m.config = to_json(config);
  m.base_seed = config.base_seed;
  for (const auto& p : paths) {
    m.files.push_back({p.filename().string(), sha256_file(p), std::filesystem::file_size(p)});
  }
  m.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_file(config.out_dir / "manifest.json", to_json(m).dump(2) + "\n");
  return m;
}

std::vector<std::string> verify_manifest(const std::filesystem::path& out_dir) {
  std::ifstream f(out_dir / "manifest.json");
  if (!f) throw std::runtime_error("no manifest.json in '" + out_dir.string() + "'");
  const auto j = nlohmann::json::parse(f);
  std::vector<std::string> bad;
  for (const auto& file : j.at("files")) {
    const auto name = file.at("name").get<std::string>();
    const auto path = out_dir / name;
    if (!std::filesystem::exists(path) || sha256_file(path) != file.at("sha256").get<std::string>()) {
      bad.push_back(name);
    }
  }
  return bad;
}

}  // namespace qwalk
