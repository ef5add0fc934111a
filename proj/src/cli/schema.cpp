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

#include <algorithm>

#include "aqg/cli/config.hpp"
#include "aqg/core/error.hpp"

namespace aqg::cli {

namespace {

KeySpec key(std::string name, Dim dim, bool required, std::string doc,
            RateKind kind = RateKind::plain) {
  KeySpec k;
  k.name = std::move(name);
  k.dim = dim;
  k.required = required;
  k.rate_kind = kind;
  k.doc = std::move(doc);
  return k;
}

KeySpec cyclic(std::string name, bool required, std::string doc) {
  return key(std::move(name), Dim::rate, required, std::move(doc), RateKind::cyclic);
}

KeySpec choice(std::string name, std::vector<std::string> options, std::string doc) {
  KeySpec k = key(std::move(name), Dim::choice, false, std::move(doc));
  k.choices = std::move(options);
  return k;
}

std::vector<CommandSchema> build() {
  std::vector<CommandSchema> out;

  out.push_back({"dispersive-z",
                 "coherence trajectory of the photon-triggered Z gate",
                 {
                     key("gamma", Dim::rate, true, "cavity decay rate (1/s)"),
                     key("chi", Dim::rate, true, "dispersive coupling (1/s)"),
                     key("delta", Dim::rate, false, "photon-cavity detuning (1/s); default chi/2"),
                     key("bandwidth", Dim::rate, false, "photon bandwidth (1/s); default 0.03 gamma"),
                     key("t0", Dim::time, false, "pulse center; default 3/bandwidth"),
                     key("coherence", Dim::number, false, "initial <sigma_->; default 0.5"),
                     key("sample_spacing", Dim::time, false, "CSV row spacing; default 1/gamma"),
                     key("settle_tol", Dim::number, false, "settling tolerance; default 1e-3"),
                 },
                 {}});

  out.push_back({"fidelity-sweep",
                 "best Z-gate fidelity per target angle over a chi sweep (delta = chi/2)",
                 {
                     key("gamma", Dim::rate, true, "cavity decay rate (1/s)"),
                     key("bandwidth", Dim::rate, false, "photon bandwidth (1/s); default 0.03 gamma"),
                     key("targets", Dim::count, false, "target angles evenly spaced on [0, pi]; default 9"),
                     key("settle_tol", Dim::number, false, "settling tolerance; default 1e-3"),
                 },
                 {key("chi", Dim::rate, false, "dispersive coupling; default 0 .. 30 gamma, 601 samples")}});

  out.push_back({"rydberg-cz",
                 "three-pulse blockade controlled-Z",
                 {
                     cyclic("rabi", true, "Rabi frequency (Hz, used as 2 pi f)"),
                     cyclic("blockade", false, "|rr> shift (Hz, 2 pi f); absent means hard blockade"),
                     cyclic("detuning", false, "laser detuning (Hz, 2 pi f); default 0"),
                 },
                 {cyclic("blockade", false, "|rr> shift sweep")}});

  out.push_back({"levine-pichler",
                 "two-pulse global-drive controlled-Z",
                 {
                     cyclic("rabi", false, "Rabi frequency (Hz, 2 pi f); or give tau"),
                     key("tau", Dim::time, false, "pulse duration; back-solves rabi"),
                     key("detuning_ratio", Dim::number, false, "detuning / rabi; default 0.377"),
                     key("xi", Dim::angle, false, "second-pulse phase; solved when absent"),
                     key("leakage_threshold", Dim::number, false, "default 1e-3"),
                 },
                 {}});

  out.push_back({"ultrafast",
                 "resonant dipole-dipole exchange |dd> <-> |pf>",
                 {
                     cyclic("coupling", true, "exchange J (Hz, 2 pi f)"),
                     key("duration", Dim::time, false, "default pi/J"),
                     key("samples", Dim::count, false, "rows; default 101"),
                 },
                 {}});

  out.push_back({"laser-timing",
                 "delay-line length d = c T / n",
                 {
                     key("T", Dim::time, true, "delay between the pulses"),
                     key("n", Dim::number, false, "refractive index; default 1"),
                 },
                 {}});

  out.push_back({"ms-gate",
                 "Molmer-Sorensen spin-motion evolution",
                 {
                     cyclic("mode_frequency", false, "motional mode (Hz, 2 pi f); default 1.23 MHz"),
                     cyclic("detuning", false, "sideband detuning (Hz, 2 pi f); default 20 kHz"),
                     key("eta", Dim::number, false, "Lamb-Dicke parameter; default 0.05"),
                     cyclic("rabi", false, "carrier Rabi (Hz, 2 pi f); default closure value"),
                     key("n_max", Dim::count, false, "highest Fock level; default 10"),
                     key("initial_fock", Dim::count, false, "default 0"),
                     key("duration", Dim::time, false, "default 1 / detuning (cyclic)"),
                     key("samples", Dim::count, false, "approximate rows; default 100"),
                 },
                 {}});

  out.push_back({"slide",
                 "beam exposure of a sliding ion",
                 {
                     key("speed", Dim::velocity, true, "ion speed"),
                     key("diameter", Dim::length, false, "beam diameter (gives the time)"),
                     key("time", Dim::time, false, "exposure time (gives the diameter)"),
                     cyclic("rabi", false, "light-shift Rabi (Hz, 2 pi f)"),
                     cyclic("light_detuning", false, "light-shift detuning (Hz, 2 pi f)"),
                 },
                 {}});

  out.push_back({"ring",
                 "ring-trap schedule and duty-cycled Rabi drive",
                 {
                     key("radius", Dim::length, true, "ring radius"),
                     key("chord", Dim::length, true, "beam width l"),
                     key("rotation_frequency", Dim::rate, true, "turns per second"),
                     key("duration", Dim::time, true, "gate duration"),
                     key("decay_rate", Dim::rate, false, "qubit decay (1/s); default 0"),
                     cyclic("rabi", false, "Rabi while lit (Hz, 2 pi f); default pi pulse"),
                 },
                 {}});

  out.push_back({"clock",
                 "autonomous clock tick statistics",
                 {
                     cyclic("omega_ge", true, "g-e gap (Hz, 2 pi f)"),
                     cyclic("omega_se", true, "s-e gap (Hz, 2 pi f)"),
                     cyclic("omega_c", true, "cold qubit gap (Hz, 2 pi f)"),
                     cyclic("omega_h", true, "hot qubit gap (Hz, 2 pi f)"),
                     key("t_cold", Dim::temperature, true, "cold bath"),
                     key("t_hot", Dim::temperature, true, "hot bath"),
                     cyclic("g3", true, "three-body coupling (Hz, 2 pi f)"),
                     key("cold_rate", Dim::rate, false, "cold dissipation (1/s); default 10 g3"),
                     key("hot_rate", Dim::rate, true, "hot dissipation (1/s)"),
                     key("emission_rate", Dim::rate, true, "e -> s emission (1/s)"),
                     key("decay_rate", Dim::rate, true, "s -> g decay (1/s)"),
                     key("duration", Dim::time, true, "trajectory length"),
                     key("trajectories", Dim::count, false, "default 100"),
                     choice("start", {"gibbs", "steady"}, "initial state; default gibbs"),
                     key("s_lifetime", Dim::time, false, "metastable lifetime for the margin"),
                     key("gate_time", Dim::time, false, "gate duration for the margin"),
                     key("target_angle", Dim::angle, false, "fractional-gate target"),
                     cyclic("g_ab", false, "fractional-gate coupling (Hz, 2 pi f)"),
                     key("tick_time", Dim::time, false, "interaction time per tick"),
                     key("budget_mean", Dim::number, false, "tick budget mean; default planned"),
                     key("budget_variance", Dim::number, false, "tick budget variance; default 0"),
                     key("mc_samples", Dim::count, false, "default 100000"),
                 },
                 {}});

  out.push_back({"xy-gate",
                 "tick-photon XY gate between two transmons",
                 {
                     cyclic("omega_c", true, "cavity (Hz, 2 pi f)"),
                     cyclic("omega_a", true, "transmon A (Hz, 2 pi f)"),
                     cyclic("omega_b", true, "transmon B (Hz, 2 pi f)"),
                     cyclic("chi", false, "dispersive shift (Hz, 2 pi f); default resonant"),
                     cyclic("g_ab", true, "exchange coupling (Hz, 2 pi f)"),
                     key("gamma_c", Dim::rate, true, "cavity decay (1/s)"),
                     key("n_max", Dim::count, false, "highest Fock level; default 5"),
                     key("temperature", Dim::temperature, false, "waveguide temperature"),
                     choice("injection", {"instantaneous", "pulsed"}, "default instantaneous"),
                     choice("input", {"00", "01", "10", "11"}, "qubit input (A B); default 01"),
                     key("duration", Dim::time, false, "default 20 / gamma_c"),
                     key("samples", Dim::count, false, "rows; default 200"),
                     key("zz", Dim::flag, false, "add the empty-cavity ZZ term; default false"),
                     key("bandwidth_ratio", Dim::number, false, "pulsed mode; default 0.03"),
                     cyclic("photon_detuning", false, "pulsed mode (Hz, 2 pi f); default 0"),
                 },
                 {}});
  return out;
}

const std::vector<CommandSchema>& all() {
  static const std::vector<CommandSchema> schemas = build();
  return schemas;
}

}  // namespace

const KeySpec* CommandSchema::find(std::string_view name) const {
  for (const auto& k : keys)
    if (k.name == name) return &k;
  return nullptr;
}

const KeySpec* CommandSchema::find_sweep(std::string_view name) const {
  for (const auto& k : sweep_keys)
    if (k.name == name) return &k;
  return nullptr;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : all()) v.push_back(s.name);
    return v;
  }();
  return names;
}

const CommandSchema& schema(std::string_view subcommand) {
  for (const auto& s : all())
    if (s.name == subcommand) return s;
  fail(ErrorKind::config, "unknown subcommand '" + std::string(subcommand) + "'");
}

}  // namespace aqg::cli
