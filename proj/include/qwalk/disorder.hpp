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
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwalk/lattice.hpp"

namespace qwalk {

enum class DisorderKind { Ordered, Static, Dynamic, Fluctuating, Combined };

std::string_view to_string(DisorderKind kind);
/// Accepts the lowercase names: ordered, static, dynamic, fluctuating,
/// combined. Throws std::invalid_argument otherwise.
DisorderKind parse_disorder_kind(std::string_view name);

/// Which disorder to draw and how strong it is.
///
/// `strength` is the upper end of the uniform phase interval [0, strength] for
/// Static, Dynamic and Fluctuating. For Combined it is the static component
/// and `dynamic_strength` the space-time fluctuating component. Ordered
/// ignores both.
struct DisorderSpec {
  DisorderKind kind = DisorderKind::Ordered;
  double strength = 0.0;
  double dynamic_strength = 0.0;

  /// Throws std::invalid_argument when a used strength is outside [0, 2pi].
  void validate() const;

  friend bool operator==(const DisorderSpec&, const DisorderSpec&) = default;
};

inline constexpr double kDefaultStrength = std::numbers::pi;

DisorderSpec ordered();
DisorderSpec static_disorder(double strength = kDefaultStrength);
DisorderSpec dynamic_disorder(double strength = kDefaultStrength);
DisorderSpec fluctuating_disorder(double strength = kDefaultStrength);
DisorderSpec combined_disorder(double static_strength = kDefaultStrength,
                               double dynamic_strength = kDefaultStrength);

struct PhasePair {
  double left = 0.0;
  double right = 0.0;

  friend bool operator==(const PhasePair&, const PhasePair&) = default;
};

/// Realized phase tables. Only the tables a kind needs are populated:
///   site   : one pair per lattice site (Static, Combined)
///   step   : one pair per step 1..steps (Dynamic)
///   space_time : steps x sites pairs, step-major (Fluctuating, Combined)
struct PhaseTables {
  std::vector<PhasePair> site;
  std::vector<PhasePair> step;
  std::vector<PhasePair> space_time;

  friend bool operator==(const PhaseTables&, const PhaseTables&) = default;
};

/// Identifier of the generator scheme recorded in run manifests.
inline constexpr std::string_view kGeneratorId =
    "mt19937_64/splitmix64-substreams/v1";

/// One disorder realization phi_{L,R}(x, t) on a fixed lattice and step range.
/// Immutable after construction; safe to share across threads.
class PhaseField {
 public:
  /// Draws every phase independently from Uniform[0, strength].
  static PhaseField sample(const DisorderSpec& spec, int steps,
                           const Lattice& lattice, std::uint64_t seed);

  /// Wraps explicit tables (for tests and archival reloads). Table sizes must
  /// match the kind's layout.
  static PhaseField from_tables(const DisorderSpec& spec, int steps,
                                const Lattice& lattice, std::uint64_t seed,
                                PhaseTables tables);

  /// Phases applied by the coin at site x during step t (t in 1..steps).
  /// Throws std::out_of_range outside the field's dimensions.
  PhasePair at(int x, int t) const;

  const DisorderSpec& spec() const { return spec_; }
  DisorderKind kind() const { return spec_.kind; }
  int steps() const { return steps_; }
  const Lattice& lattice() const { return lattice_; }
  std::uint64_t seed() const { return seed_; }
  const PhaseTables& tables() const { return tables_; }

  friend bool operator==(const PhaseField&, const PhaseField&) = default;

 private:
  PhaseField(DisorderSpec spec, int steps, Lattice lattice, std::uint64_t seed,
             PhaseTables tables);

  DisorderSpec spec_;
  int steps_ = 0;
  Lattice lattice_;
  std::uint64_t seed_ = 0;
  PhaseTables tables_;
};

inline PhaseField sample_phase_field(const DisorderSpec& spec, int steps,
                                     const Lattice& lattice,
                                     std::uint64_t seed) {
  return PhaseField::sample(spec, steps, lattice, seed);
}

inline PhasePair phases_at(const PhaseField& field, int x, int t) {
  return field.at(x, t);
}

nlohmann::json to_json(const DisorderSpec& spec);
DisorderSpec disorder_spec_from_json(const nlohmann::json& j);

/// Archival form: kind, strengths, seed, dimensions, and optionally tables.
nlohmann::json to_json(const PhaseField& field, bool include_tables);
/// Rebuilds a field. Without tables the field is re-sampled from its seed.
PhaseField phase_field_from_json(const nlohmann::json& j);

}  // namespace qwalk
