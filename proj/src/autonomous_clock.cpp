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

#include "aqg/autonomous_clock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "aqg/core/diagnostics.hpp"
#include "aqg/core/integrators.hpp"
#include "aqg/core/jumps.hpp"
#include "aqg/core/operators.hpp"

namespace aqg::clock {

namespace {

const std::vector<std::size_t> kDims{3, 2, 2};

Mat on_lambda(const Mat& op) { return ops::embed(op, kDims, 0); }
Mat on_cold(const Mat& op) { return ops::embed(op, kDims, 1); }
Mat on_hot(const Mat& op) { return ops::embed(op, kDims, 2); }

Mat gibbs_qubit(double omega, double temperature) {
  const double w = std::exp(-omega / temperature);
  Mat g = Mat::Zero(2, 2);
  g(0, 0) = 1.0 / (1.0 + w);
  g(1, 1) = w / (1.0 + w);
  return g;
}

double largest_rate(const LindbladModel& model) {
  double r = 0.0;
  for (const auto& ch : model.channels()) r = std::max(r, ch.rate);
  const Mat& h = model.hamiltonian().matrix();
  return std::max(r, h.cwiseAbs().maxCoeff());
}

}  // namespace

void ClockParams::validate() const {
  require(t_cold > 0.0 && t_hot > t_cold, ErrorKind::invalid_parameter,
          "ClockParams: temperatures must satisfy T_H > T_C > 0");
  require(omega_c > 0.0 && omega_h > 0.0 && omega_ge > 0.0 && omega_se > 0.0,
          ErrorKind::invalid_parameter, "ClockParams: gaps must be positive");
  require(g3 >= 0.0 && cold_rate >= 0.0 && hot_rate >= 0.0 && emission_rate >= 0.0 &&
              decay_rate >= 0.0,
          ErrorKind::invalid_parameter, "ClockParams: rates must be nonnegative");
}

double ClockParams::effective_cold_rate() const {
  return cold_rate > 0.0 ? cold_rate : 10.0 * g3;
}

double ClockParams::resonance_residual() const { return omega_c + omega_ge - omega_h; }

double bose_occupation(double omega, double temperature) {
  require(omega > 0.0 && temperature > 0.0, ErrorKind::invalid_parameter,
          "bose_occupation: frequency and temperature must be positive");
  return 1.0 / std::expm1(omega / temperature);
}

ClockModel build_clock_model(const ClockParams& p) {
  p.validate();
  ClockModel out;
  out.params = p;
  out.resonance_residual = p.resonance_residual();

  const Mat pump = ops::kron({ops::projector(3, 1, 0), ops::sigma_plus(), ops::sigma_minus()});
  Mat h = p.g3 * (pump + pump.adjoint());
  h += out.resonance_residual * on_lambda(ops::projector(3, 1, 1));

  const double nc = bose_occupation(p.omega_c, p.t_cold);
  const double nh = bose_occupation(p.omega_h, p.t_hot);
  const double kc = p.effective_cold_rate();
  std::vector<Channel> channels{
      {Operator(on_cold(ops::sigma_minus())), kc * (nc + 1.0), "cold-down"},
      {Operator(on_cold(ops::sigma_plus())), kc * nc, "cold-up"},
      {Operator(on_hot(ops::sigma_minus())), p.hot_rate * (nh + 1.0), "hot-down"},
      {Operator(on_hot(ops::sigma_plus())), p.hot_rate * nh, "hot-up"},
      {Operator(on_lambda(ops::projector(3, 2, 1))), p.emission_rate, "emission"},
      {Operator(on_lambda(ops::projector(3, 0, 2))), p.decay_rate, "decay"},
  };
  out.tick_channel = 4;
  out.model = LindbladModel(Operator::hermitian(h), std::move(channels));

  if (std::abs(out.resonance_residual) > p.resonance_tol) {
    std::ostringstream os;
    os << "build_clock_model: resonance residual omega_c + omega_ge - omega_h = "
       << out.resonance_residual;
    out.warnings.push_back(os.str());
    push_warning(os.str());
  }

  const Mat rho0 = ops::kron({ops::projector(3, 0, 0), gibbs_qubit(p.omega_c, p.t_cold),
                              gibbs_qubit(p.omega_h, p.t_hot)});
  out.initial_state = DensityOperator(rho0);
  return out;
}

double steady_state_flux(const ClockModel& clock) {
  const DensityOperator rho = steady_state(clock.model);
  double pe = 0.0;
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t h = 0; h < 2; ++h) pe += rho.population(clock_index(1, c, h));
  return clock.params.emission_rate * pe;
}

StateVector sample_pure_state(const DensityOperator& rho, std::mt19937_64& rng) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.matrix());
  const auto& w = es.eigenvalues();
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) total += std::max(0.0, w(i));
  const double target = uni(rng) * total;
  double acc = 0.0;
  Eigen::Index pick = w.size() - 1;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    acc += std::max(0.0, w(i));
    if (target < acc) {
      pick = i;
      break;
    }
  }
  return StateVector::normalized(es.eigenvectors().col(pick));
}

namespace {

TickRecord run_one(const ClockModel& clock, const JumpSimulator& sim,
                   const DensityOperator& start, double duration, std::uint64_t seed,
                   std::uint64_t index) {
  auto rng = trajectory_rng(seed, index);
  const StateVector psi0 = sample_pure_state(start, rng);
  TickRecord rec;
  rec.seed = seed;
  rec.t_start = 0.0;
  rec.t_end = duration;
  sim.run(
      psi0.amplitudes(), 0.0, duration, rng,
      [&](const JumpEvent& e) {
        if (e.channel == clock.tick_channel) rec.times.push_back(e.time);
      },
      [](double, const Ket&) {});
  return rec;
}

double pick_step(const ClockModel& clock, const TickOptions& opt) {
  if (opt.step > 0.0) return opt.step;
  const double r = largest_rate(clock.model);
  return r > 0.0 ? 0.1 / r : 1.0;
}

DensityOperator start_state(const ClockModel& clock, ClockStart start) {
  return start == ClockStart::gibbs ? clock.initial_state : steady_state(clock.model);
}

}  // namespace

TickRecord simulate_ticks(const ClockModel& clock, double duration, std::uint64_t seed,
                          const TickOptions& options) {
  require(duration > 0.0, ErrorKind::invalid_parameter,
          "simulate_ticks: duration must be positive");
  const JumpSimulator sim(clock.model, pick_step(clock, options), options.refine_levels);
  return run_one(clock, sim, start_state(clock, options.start), duration, seed, 0);
}

std::vector<TickRecord> simulate_ensemble(const ClockModel& clock, double duration,
                                          std::size_t trajectories, std::uint64_t seed,
                                          const TickOptions& options, Execution exec) {
  require(duration > 0.0, ErrorKind::invalid_parameter,
          "simulate_ensemble: duration must be positive");
  const JumpSimulator sim(clock.model, pick_step(clock, options), options.refine_levels);
  const DensityOperator start = start_state(clock, options.start);
  return map_indexed<TickRecord>(
      trajectories, [&](std::size_t i) { return run_one(clock, sim, start, duration, seed, i); },
      exec);
}

double ensemble_tick_rate(std::span<const TickRecord> records) {
  double ticks = 0.0;
  double time = 0.0;
  for (const auto& r : records) {
    ticks += static_cast<double>(r.times.size());
    time += r.t_end - r.t_start;
  }
  require(time > 0.0, ErrorKind::insufficient_data, "ensemble_tick_rate: no simulated time");
  return ticks / time;
}

TickStatistics tick_statistics(std::span<const TickRecord> records) {
  std::vector<double> waits;
  for (const auto& r : records)
    for (std::size_t i = 1; i < r.times.size(); ++i) waits.push_back(r.times[i] - r.times[i - 1]);
  require(!waits.empty(), ErrorKind::insufficient_data,
          "tick_statistics: need at least two ticks");
  TickStatistics s;
  s.intervals = waits.size();
  s.mean_wait = std::accumulate(waits.begin(), waits.end(), 0.0) / static_cast<double>(s.intervals);
  if (s.intervals > 1) {
    double ss = 0.0;
    for (double w : waits) ss += (w - s.mean_wait) * (w - s.mean_wait);
    s.variance = ss / static_cast<double>(s.intervals - 1);
  }
  // Sub-ulp spread counts as zero so periodic records hit the cap.
  if (s.variance <= 1e-24 * s.mean_wait * s.mean_wait) {
    s.accuracy = kAccuracyCap;
    s.capped = true;
  } else {
    s.accuracy = std::min(kAccuracyCap, s.mean_wait * s.mean_wait / s.variance);
  }
  return s;
}

TickStatistics tick_statistics(const TickRecord& record) {
  return tick_statistics(std::span<const TickRecord>(&record, 1));
}

MetastableMargin metastable_margin(double s_lifetime, double gate_time) {
  require(s_lifetime > 0.0 && gate_time > 0.0, ErrorKind::invalid_parameter,
          "metastable_margin: inputs must be positive");
  const double r = s_lifetime / gate_time;
  return {r, r >= 10.0};
}

FractionalPlan plan_fractional_gate(double target, double g_ab, double interaction_time) {
  require(target > 0.0, ErrorKind::invalid_parameter,
          "plan_fractional_gate: target angle must be positive");
  require(g_ab > 0.0 && interaction_time > 0.0, ErrorKind::invalid_parameter,
          "plan_fractional_gate: coupling and interaction time must be positive");
  FractionalPlan p;
  p.target = target;
  p.per_tick = 2.0 * g_ab * interaction_time;
  if (p.per_tick > target) {
    p.ticks = 1;
    p.overshoot = true;
  } else {
    p.ticks = std::max(1, static_cast<int>(std::lround(target / p.per_tick)));
  }
  return p;
}

int draw_tick_count(const TickBudget& budget, std::mt19937_64& rng) {
  if (budget.variance <= 0.0) return std::max(0, static_cast<int>(std::lround(budget.mean)));
  std::normal_distribution<double> dist(budget.mean, std::sqrt(budget.variance));
  return std::max(0, static_cast<int>(std::lround(dist(rng))));
}

FractionalResult fractional_gate_plan(double target, double g_ab, double interaction_time,
                                      TickBudget budget, std::size_t samples,
                                      std::uint64_t seed) {
  require(budget.variance >= 0.0, ErrorKind::invalid_parameter,
          "fractional_gate_plan: budget variance must be nonnegative");
  FractionalResult out;
  out.plan = plan_fractional_gate(target, g_ab, interaction_time);
  if (budget.mean <= 0.0) budget.mean = out.plan.ticks;
  std::mt19937_64 rng = trajectory_rng(seed, 0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double err = draw_tick_count(budget, rng) * out.plan.per_tick - target;
    sum += err;
    sum_sq += err * err;
  }
  out.monte_carlo.samples = samples;
  if (samples > 0) {
    out.monte_carlo.mean_error = sum / static_cast<double>(samples);
    out.monte_carlo.rms_error = std::sqrt(sum_sq / static_cast<double>(samples));
  }
  return out;
}

}  // namespace aqg::clock
