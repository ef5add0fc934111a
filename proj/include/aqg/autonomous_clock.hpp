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
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "aqg/core/parallel.hpp"
#include "aqg/core/types.hpp"

/// Autonomous quantum clock: a Lambda system (g, e, s) pumped from g to e by
/// a two-qubit engine (cold qubit C, hot qubit H) through the three-body
/// exchange |C=0, H=1, g> <-> |C=1, H=0, e>. Each e -> s emission is a tick.
///
/// Frequencies, rates, and temperatures share one energy unit (hbar = k_B = 1).
namespace aqg::clock {

struct ClockParams {
  double omega_ge = 4.0;
  double omega_se = 3.0;
  double omega_c = 1.0;
  double omega_h = 5.0;
  double t_cold = 0.2;
  double t_hot = 5.0;
  double g3 = 1.0;
  /// Cold-bath dissipation; 0 selects 10 * g3.
  double cold_rate = 0.0;
  double hot_rate = 1.0;
  double emission_rate = 1.0;
  double decay_rate = 0.5;
  /// Largest tolerated |omega_c + omega_ge - omega_h| before a warning.
  double resonance_tol = 1e-9;

  void validate() const;
  double effective_cold_rate() const;
  double resonance_residual() const;
};

/// Basis index of |lambda> (x) |c> (x) |h>, lambda in {0: g, 1: e, 2: s}.
constexpr std::size_t clock_index(std::size_t lambda, std::size_t c, std::size_t h) {
  return 4 * lambda + 2 * c + h;
}

struct ClockModel {
  LindbladModel model;
  std::size_t tick_channel = 0;
  double resonance_residual = 0.0;
  std::vector<std::string> warnings;
  /// |g><g| (x) Gibbs_C (x) Gibbs_H.
  DensityOperator initial_state;
  ClockParams params;
};

/// Mean occupation 1 / (e^{omega/T} - 1).
double bose_occupation(double omega, double temperature);

/// Rotating-frame model H = delta_res |e><e| + g3 (|e><g| s+_C s-_H + h.c.)
/// with detailed-balance thermal channels on C and H, e -> s emission, and
/// s -> g decay.
ClockModel build_clock_model(const ClockParams& params);

/// Gamma_es <P_e> in the Lindblad steady state.
double steady_state_flux(const ClockModel& clock);

struct TickRecord {
  std::vector<double> times;
  std::uint64_t seed = 0;
  double t_start = 0.0;
  double t_end = 0.0;
};

enum class ClockStart { gibbs, steady_state };

struct TickOptions {
  ClockStart start = ClockStart::gibbs;
  /// Propagator step; 0 picks 0.1 / (largest rate in the model).
  double step = 0.0;
  int refine_levels = 14;
};

/// Draws a pure state from the eigen-decomposition of `rho`.
StateVector sample_pure_state(const DensityOperator& rho, std::mt19937_64& rng);

/// One quantum-jump trajectory over [0, duration]; ticks are jumps on the
/// emission channel. Identical seeds give identical records.
TickRecord simulate_ticks(const ClockModel& clock, double duration, std::uint64_t seed,
                          const TickOptions& options = {});

/// Trajectory `i` of the ensemble uses trajectory_rng(seed, i), so serial and
/// parallel runs agree record for record.
std::vector<TickRecord> simulate_ensemble(const ClockModel& clock, double duration,
                                          std::size_t trajectories, std::uint64_t seed,
                                          const TickOptions& options = {},
                                          Execution exec = Execution::parallel);

/// Total ticks per unit time across an ensemble.
double ensemble_tick_rate(std::span<const TickRecord> records);

inline constexpr double kAccuracyCap = 1e15;

struct TickStatistics {
  std::size_t intervals = 0;
  double mean_wait = 0.0;
  double variance = 0.0;
  /// mean^2 / variance, or kAccuracyCap when the variance vanishes.
  double accuracy = 0.0;
  bool capped = false;
};

/// Waiting times are differences of successive ticks; the variance uses the
/// unbiased estimator (0 for a single interval). Needs at least two ticks.
TickStatistics tick_statistics(const TickRecord& record);
/// Pools the intervals of several records.
TickStatistics tick_statistics(std::span<const TickRecord> records);

struct MetastableMargin {
  double ratio = 0.0;
  bool pass = false;
};

/// s_lifetime / gate_time, passing when the ratio is at least 10.
MetastableMargin metastable_margin(double s_lifetime, double gate_time);

struct TickBudget {
  double mean = 0.0;  // 0 selects the planned tick count
  double variance = 0.0;
};

struct FractionalPlan {
  double target = 0.0;
  double per_tick = 0.0;
  int ticks = 0;
  bool overshoot = false;
};

struct AngleErrorStats {
  std::size_t samples = 0;
  double mean_error = 0.0;
  double rms_error = 0.0;
};

struct FractionalResult {
  FractionalPlan plan;
  AngleErrorStats monte_carlo;
};

/// Per-tick angle 2 g_AB t; ticks = round(target / per_tick), at least one,
/// with the overshoot flag when one tick already exceeds the target.
FractionalPlan plan_fractional_gate(double target, double g_ab, double interaction_time);

/// Tick counts drawn from a Gaussian of the budget's mean and variance,
/// rounded and clipped at zero.
int draw_tick_count(const TickBudget& budget, std::mt19937_64& rng);

/// Plan plus the Monte Carlo distribution of the total-angle error
/// k * per_tick - target with k drawn from the budget.
FractionalResult fractional_gate_plan(double target, double g_ab, double interaction_time,
                                      TickBudget budget, std::size_t samples,
                                      std::uint64_t seed);

}  // namespace aqg::clock
