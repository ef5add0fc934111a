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
#include <cmath>
#include <random>
#include <vector>

#include "aqg/core/types.hpp"

namespace aqg {

struct JumpEvent {
  double time = 0.0;
  std::size_t channel = 0;
};

struct JumpTrajectory {
  Trajectory<StateVector> states;
  std::vector<JumpEvent> jumps;
};

/// Waiting-time (Monte Carlo wave-function) unraveling of a time-independent
/// Lindblad model.
///
/// The no-jump propagator exp(-i H_eff h) is precomputed once together with
/// its binary subdivisions h/2, h/4, ..., so a jump time is located to
/// h / 2^levels by descending the subdivisions.
class JumpSimulator {
 public:
  JumpSimulator(const LindbladModel& model, double step, int refine_levels = 20);

  const LindbladModel& model() const noexcept { return model_; }
  double step() const noexcept { return step_; }

  /// Runs one trajectory on [t_start, t_end]. `on_jump(event)` fires for
  /// every jump; `on_sample(t, psi)` fires on the uniform sampling grid when
  /// `sample_every` > 0 (every `sample_every` propagator steps).
  template <class OnJump, class OnSample>
  Ket run(Ket psi, double t_start, double t_end, std::mt19937_64& rng,
          OnJump&& on_jump, OnSample&& on_sample, std::size_t sample_every = 0) const;

  /// Channel picked with probability proportional to rate_k |L_k psi|^2.
  std::size_t pick_channel(const Ket& psi, double r) const;

 private:
  LindbladModel model_;
  double step_;
  std::vector<Mat> propagators_;  // [0] = full step, [k] = step / 2^k
  std::vector<Mat> scaled_jumps_;  // sqrt(rate) L
};

/// Records the full state trajectory on `grid` together with the jump list.
/// `grid.step` is the propagator step; samples are stored every
/// `grid.store_every` steps.
JumpTrajectory quantum_jump_trajectory(const LindbladModel& model,
                                       const StateVector& psi0,
                                       const TimeGrid& grid, std::uint64_t seed);

/// Deterministic per-trajectory generator: seeds are mixed with the
/// trajectory index so ensembles give identical streams in any order.
std::mt19937_64 trajectory_rng(std::uint64_t seed, std::uint64_t index);

// ---------------------------------------------------------------------------

template <class OnJump, class OnSample>
Ket JumpSimulator::run(Ket psi, double t_start, double t_end, std::mt19937_64& rng,
                       OnJump&& on_jump, OnSample&& on_sample,
                       std::size_t sample_every) const {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  // Time is counted in ticks of step / 2^levels so subdivided propagation
  // stays exactly aligned with the sampling grid.
  const int levels = static_cast<int>(propagators_.size()) - 1;
  const std::uint64_t full = std::uint64_t{1} << levels;
  const double tick_len = step_ / static_cast<double>(full);
  const auto end_tick =
      static_cast<std::uint64_t>(std::llround((t_end - t_start) / tick_len));
  auto chunk = [&](int k) { return full >> k; };

  double threshold = uni(rng);
  std::uint64_t tick = 0;
  int floor_level = 0;
  if (sample_every > 0) on_sample(t_start, Ket(psi / psi.norm()));

  auto arrived = [&](std::uint64_t at) {
    if (sample_every == 0) return;
    if (at == end_tick || (at % full == 0 && (at / full) % sample_every == 0))
      on_sample(t_start + static_cast<double>(at) * tick_len, Ket(psi / psi.norm()));
  };

  while (tick < end_tick) {
    int k = floor_level;
    while (k < levels && (tick % chunk(k) != 0 || tick + chunk(k) > end_tick)) ++k;
    Ket next = propagators_[static_cast<std::size_t>(k)] * psi;
    if (next.squaredNorm() > threshold) {
      psi = std::move(next);
      tick += chunk(k);
      floor_level = 0;
      arrived(tick);
      continue;
    }
    if (k < levels) {
      floor_level = k + 1;
      continue;
    }
    // The norm crosses the threshold within one tick: jump at its end.
    tick += 1;
    const std::size_t ch = pick_channel(next, uni(rng));
    Ket jumped = scaled_jumps_[ch] * next;
    psi = jumped / jumped.norm();
    on_jump(JumpEvent{t_start + static_cast<double>(tick) * tick_len, ch});
    threshold = uni(rng);
    floor_level = 0;
    arrived(tick);
  }
  return Ket(psi / psi.norm());
}

}  // namespace aqg
