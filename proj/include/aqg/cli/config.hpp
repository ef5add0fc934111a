// Copyright 2026 The aqgates Authors
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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Run configuration: a `[subcommand]` header followed by `key = value unit`
/// lines and an optional `[sweep]` block.
///
///   [fidelity-sweep]
///   gamma = 100 MHz
///   bandwidth = 0.03 gamma
///
///   [sweep]
///   chi: 0 .. 30 gamma, 601 samples
///
/// Physical quantities always carry a unit. A unit may also name another key
/// of the same dimension (`0.03 gamma`), in which case the value is a
/// multiple of that key's converted value.
namespace aqg::cli {

enum class Dim {
  rate,         // Hz, kHz, MHz, GHz, THz
  time,         // s, ms, us, ns, ps
  temperature,  // K, mK, uK
  length,       // m, mm, um, nm
  velocity,     // m/s, mm/s, um/s
  angle,        // rad, deg, pi
  number,       // unitless real
  count,        // unitless nonnegative integer
  flag,         // true / false
  choice,       // one of KeySpec::choices
};

/// How a rate key enters the equations. `cyclic` keys are frequencies f and
/// become 2 pi f; `plain` keys are decay rates and are used as 1/s.
enum class RateKind { cyclic, plain };

struct KeySpec {
  std::string name;
  Dim dim = Dim::number;
  bool required = false;
  RateKind rate_kind = RateKind::plain;
  std::vector<std::string> choices;
  std::string doc;
};

struct CommandSchema {
  std::string name;
  std::string summary;
  std::vector<KeySpec> keys;
  /// Parameters that may be swept in a [sweep] block.
  std::vector<KeySpec> sweep_keys;

  const KeySpec* find(std::string_view key) const;
  const KeySpec* find_sweep(std::string_view key) const;
};

const std::vector<std::string>& subcommands();
/// Throws Error(config) for an unknown name.
const CommandSchema& schema(std::string_view subcommand);

/// A value as written: number and unit token, or the word for flags and
/// choices.
struct Value {
  double number = 0.0;
  std::string unit;
  std::string word;

  bool operator==(const Value&) const = default;
};

struct SweepSpec {
  std::string key;
  double min = 0.0;
  double max = 0.0;
  std::string unit;
  std::size_t samples = 0;

  bool operator==(const SweepSpec&) const = default;
};

class RunConfig {
 public:
  std::string subcommand;
  std::map<std::string, Value> values;
  std::optional<SweepSpec> sweep;

  bool has(const std::string& key) const { return values.count(key) > 0; }

  /// SI magnitude: s, K, m, m/s, rad, 1/s for plain rates and rad/s for
  /// cyclic rates. Relative units are resolved recursively.
  double si(const std::string& key) const;
  double si_or(const std::string& key, double fallback) const;
  std::size_t count(const std::string& key, std::size_t fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  std::string word(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key, double fallback) const;

  /// SI values of the sweep points (empty without a sweep).
  std::vector<double> sweep_points() const;

  bool operator==(const RunConfig&) const = default;
};

struct ParseResult {
  RunConfig config;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses `text`, then applies `overrides` (each `key=value unit`) on top.
/// When `subcommand` is non-empty it must match the header (or stands in for
/// a missing one). Every problem is reported, each with its line.
ParseResult parse_config(std::string_view text, std::string_view subcommand = {},
                         const std::vector<std::string>& overrides = {});

/// Canonical text; parse_config(emit_config(c)).config == c.
std::string emit_config(const RunConfig& config);

/// Multiplier from `unit` to SI for a dimension, if the unit belongs to it.
std::optional<double> unit_factor(Dim dim, std::string_view unit);

std::string dim_name(Dim dim);

}  // namespace aqg::cli
