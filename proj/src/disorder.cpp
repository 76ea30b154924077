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

#include "qwalk/disorder.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace qwalk {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Each table component has its own substream so that, for one seed, the
// static part of a Combined field equals the Static field and its space-time
// part equals the Fluctuating field.
enum class Stream : std::uint64_t { Site = 1, Step = 2, SpaceTime = 3 };

class UniformPhases {
 public:
  UniformPhases(std::uint64_t seed, Stream stream)
      : engine_(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(stream))) {}

  // 53-bit mantissa in [0, 1) scaled to [0, width).
  double draw(double width) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 * width;
  }

  std::vector<PhasePair> table(std::size_t n, double width) {
    std::vector<PhasePair> out(n);
    for (auto& p : out) {
      p.left = draw(width);
      p.right = draw(width);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

void check_strength(double s, const char* what) {
  if (!std::isfinite(s) || s < 0.0 || s > 2.0 * std::numbers::pi) {
    throw std::invalid_argument(std::string("disorder strength ") + what +
                                " must lie in [0, 2pi]");
  }
}

void check_size(const std::vector<PhasePair>& v, std::size_t expected,
                const char* what) {
  if (v.size() != expected) {
    throw std::invalid_argument(std::string("PhaseField: ") + what +
                                " table has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

std::string_view to_string(DisorderKind kind) {
  switch (kind) {
    case DisorderKind::Ordered: return "ordered";
    case DisorderKind::Static: return "static";
    case DisorderKind::Dynamic: return "dynamic";
    case DisorderKind::Fluctuating: return "fluctuating";
    case DisorderKind::Combined: return "combined";
  }
  return "unknown";
}

DisorderKind parse_disorder_kind(std::string_view name) {
  for (auto k : {DisorderKind::Ordered, DisorderKind::Static,
                 DisorderKind::Dynamic, DisorderKind::Fluctuating,
                 DisorderKind::Combined}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown disorder kind '" + std::string(name) +
                              "'");
}

void DisorderSpec::validate() const {
  switch (kind) {
    case DisorderKind::Ordered: return;
    case DisorderKind::Combined:
      check_strength(strength, "(static)");
      check_strength(dynamic_strength, "(dynamic)");
      return;
    default: check_strength(strength, ""); return;
  }
}

DisorderSpec ordered() { return {}; }
DisorderSpec static_disorder(double s) { return {DisorderKind::Static, s, 0.0}; }
DisorderSpec dynamic_disorder(double s) { return {DisorderKind::Dynamic, s, 0.0}; }
DisorderSpec fluctuating_disorder(double s) {
  return {DisorderKind::Fluctuating, s, 0.0};
}
DisorderSpec combined_disorder(double s, double d) {
  return {DisorderKind::Combined, s, d};
}

PhaseField::PhaseField(DisorderSpec spec, int steps, Lattice lattice,
                       std::uint64_t seed, PhaseTables tables)
    : spec_(spec),
      steps_(steps),
      lattice_(lattice),
      seed_(seed),
      tables_(std::move(tables)) {}

PhaseField PhaseField::sample(const DisorderSpec& spec, int steps,
                              const Lattice& lattice, std::uint64_t seed) {
  spec.validate();
  if (steps < 0) throw std::invalid_argument("PhaseField: negative step count");
  const auto sites = static_cast<std::size_t>(lattice.size());
  const auto nsteps = static_cast<std::size_t>(steps);

  PhaseTables t;
  switch (spec.kind) {
    case DisorderKind::Ordered: break;
    case DisorderKind::Static:
      t.site = UniformPhases(seed, Stream::Site).table(sites, spec.strength);
      break;
    case DisorderKind::Dynamic:
      t.step = UniformPhases(seed, Stream::Step).table(nsteps, spec.strength);
      break;
    case DisorderKind::Fluctuating:
      t.space_time = UniformPhases(seed, Stream::SpaceTime)
                         .table(nsteps * sites, spec.strength);
      break;
    case DisorderKind::Combined:
      t.site = UniformPhases(seed, Stream::Site).table(sites, spec.strength);
      t.space_time = UniformPhases(seed, Stream::SpaceTime)
                         .table(nsteps * sites, spec.dynamic_strength);
      break;
  }
  return PhaseField(spec, steps, lattice, seed, std::move(t));
}

PhaseField PhaseField::from_tables(const DisorderSpec& spec, int steps,
                                   const Lattice& lattice, std::uint64_t seed,
                                   PhaseTables tables) {
  if (steps < 0) throw std::invalid_argument("PhaseField: negative step count");
  const auto sites = static_cast<std::size_t>(lattice.size());
  const auto nsteps = static_cast<std::size_t>(steps);
  const bool uses_site = spec.kind == DisorderKind::Static ||
                         spec.kind == DisorderKind::Combined;
  const bool uses_step = spec.kind == DisorderKind::Dynamic;
  const bool uses_st = spec.kind == DisorderKind::Fluctuating ||
                       spec.kind == DisorderKind::Combined;
  check_size(tables.site, uses_site ? sites : 0, "site");
  check_size(tables.step, uses_step ? nsteps : 0, "step");
  check_size(tables.space_time, uses_st ? nsteps * sites : 0, "space-time");
  for (const auto* v : {&tables.site, &tables.step, &tables.space_time}) {
    for (const auto& p : *v) {
      if (!std::isfinite(p.left) || !std::isfinite(p.right)) {
        throw std::invalid_argument("PhaseField: non-finite phase");
      }
    }
  }
  return PhaseField(spec, steps, lattice, seed, std::move(tables));
}

PhasePair PhaseField::at(int x, int t) const {
  if (t < 1 || t > steps_) {
    throw std::out_of_range("PhaseField: step " + std::to_string(t) +
                            " outside [1, " + std::to_string(steps_) + "]");
  }
  const auto i = static_cast<std::size_t>(lattice_.index(x));
  const auto k = static_cast<std::size_t>(t - 1);
  const auto sites = static_cast<std::size_t>(lattice_.size());
  switch (spec_.kind) {
    case DisorderKind::Ordered: return {};
    case DisorderKind::Static: return tables_.site[i];
    case DisorderKind::Dynamic: return tables_.step[k];
    case DisorderKind::Fluctuating: return tables_.space_time[k * sites + i];
    case DisorderKind::Combined: {
      const PhasePair& s = tables_.site[i];
      const PhasePair& f = tables_.space_time[k * sites + i];
      return {s.left + f.left, s.right + f.right};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const DisorderSpec& spec) {
  nlohmann::json j{{"kind", to_string(spec.kind)}};
  switch (spec.kind) {
    case DisorderKind::Ordered: break;
    case DisorderKind::Combined:
      j["phi_static"] = spec.strength;
      j["phi_dynamic"] = spec.dynamic_strength;
      break;
    default: j["phi_max"] = spec.strength; break;
  }
  return j;
}

DisorderSpec disorder_spec_from_json(const nlohmann::json& j) {
  DisorderSpec s;
  s.kind = parse_disorder_kind(j.at("kind").get<std::string>());
  if (s.kind == DisorderKind::Combined) {
    s.strength = j.value("phi_static", kDefaultStrength);
    s.dynamic_strength = j.value("phi_dynamic", kDefaultStrength);
  } else if (s.kind != DisorderKind::Ordered) {
    s.strength = j.value("phi_max", kDefaultStrength);
  }
  s.validate();
  return s;
}

namespace {

nlohmann::json table_json(const std::vector<PhasePair>& v) {
  auto a = nlohmann::json::array();
  for (const auto& p : v) a.push_back({p.left, p.right});
  return a;
}

std::vector<PhasePair> table_from_json(const nlohmann::json& a) {
  std::vector<PhasePair> v;
  v.reserve(a.size());
  for (const auto& p : a) v.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return v;
}

}  // namespace

nlohmann::json to_json(const PhaseField& field, bool include_tables) {
  nlohmann::json j = to_json(field.spec());
  j["seed"] = field.seed();
  j["steps"] = field.steps();
  j["lattice"] = {{"min_site", field.lattice().min_site()},
                  {"size", field.lattice().size()}};
  j["generator"] = kGeneratorId;
  if (include_tables) {
    const auto& t = field.tables();
    j["tables"] = {{"site", table_json(t.site)},
                   {"step", table_json(t.step)},
                   {"space_time", table_json(t.space_time)}};
  }
  return j;
}

PhaseField phase_field_from_json(const nlohmann::json& j) {
  const DisorderSpec spec = disorder_spec_from_json(j);
  const auto seed = j.at("seed").get<std::uint64_t>();
  const int steps = j.at("steps").get<int>();
  const Lattice lattice(j.at("lattice").at("min_site").get<int>(),
                        j.at("lattice").at("size").get<int>());
  if (!j.contains("tables")) return PhaseField::sample(spec, steps, lattice, seed);
  const auto& t = j.at("tables");
  return PhaseField::from_tables(
      spec, steps, lattice, seed,
      {table_from_json(t.at("site")), table_from_json(t.at("step")),
       table_from_json(t.at("space_time"))});
}

}  // namespace qwalk
