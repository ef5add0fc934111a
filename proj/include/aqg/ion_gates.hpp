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
#include <vector>

#include "aqg/core/types.hpp"

/// Trapped-ion gates: Molmer-Sorensen spin-motion dynamics and the transport
/// schedules of the slide and ring-trap proposals.
namespace aqg::ion {

/// Rates are angular and times share one unit (microseconds by convention).
struct MSParams {
  double qubit_gap = 2.0 * kPi * 411e6;
  double mode_frequency = 2.0 * kPi * 1.23;
  double detuning = 2.0 * kPi * 0.020;
  double lamb_dicke = 0.05;
  /// Carrier Rabi frequency; 0 selects the single-loop closure value
  /// detuning / (2 lamb_dicke).
  double rabi = 0.0;
  /// Highest Fock number kept.
  std::size_t n_max = 10;

  void validate() const;
  double effective_rabi() const;
  /// Spin-motion coupling lamb_dicke * rabi / 2.
  double coupling() const;
  /// 2 pi / detuning.
  double closure_time() const;
};

struct MSSample {
  double t = 0.0;
  double fidelity_to_target = 0.0;
  double motional_purity = 0.0;
  double mean_phonons = 0.0;
};

struct MSResult {
  std::vector<MSSample> samples;
  StateVector final_state;
  /// Reduced two-spin state at the final time (basis |dd>, |du>, |ud>, |uu>).
  Mat spin_state;
  /// Largest population seen in Fock level n_max.
  double truncation_population = 0.0;

  const MSSample& final() const { return samples.back(); }
};

/// Spin-down-down plus i spin-up-up, normalized; |down> is basis index 0.
Ket ms_target();

/// Bichromatic interaction-picture evolution
///   H(t) = g (s_y1 + s_y2)(a^dag e^{-i delta t} + a e^{i delta t}),  g = eta Omega / 2
/// (tones at w0 +- (nu - delta))
/// from |spins> (x) |fock> over [0, duration] (duration <= 0 means the
/// closure time). Samples are stored every `sample_every` RK4 steps of size
/// `step`. Throws truncation when the top Fock level holds more than 1e-4.
MSResult ms_evolve(const MSParams& params, const StateVector& spins, std::size_t fock = 0,
                   double duration = 0.0, double step = 0.0, std::size_t sample_every = 10);

/// Time an ion moving at `speed` spends crossing a beam of `diameter`.
double slide_exposure(double speed, double diameter);
/// Beam diameter that gives exposure `time` at `speed`.
double slide_diameter(double speed, double time);
/// Off-resonant light shift rabi^2 / (2 detuning).
double light_shift(double rabi, double detuning);

struct RingParams {
  double radius = 3e-6;
  double rotation_frequency = 100e3;  // Hz
  double chord = 4e-6;
  double duration = 50e-6;
  double decay_rate = 0.167;
  /// Drive Rabi frequency while illuminated; 0 picks the value giving a
  /// pi pulse over the gate.
  double rabi = 0.0;

  void validate() const;
};

struct RingSchedule {
  double theta = 0.0;
  double passes = 0.0;
  double illuminated_fraction = 0.0;
  double pulse_area = 0.0;
  double rabi = 0.0;
};

/// theta = 2 arcsin(l / 2r), passes = duration * f, fraction = theta / pi
/// (the beam crosses the ring in two arcs).
RingSchedule ring_schedule(const RingParams& params);

struct RingRabiResult {
  double excited_population = 0.0;
  double continuous_excited_population = 0.0;
  double fidelity = 0.0;
  Mat final_state;
  Mat continuous_state;
};

/// Duty-cycled resonant drive with amplitude decay, compared to a
/// continuous drive of equal area over the same duration.
RingRabiResult ring_pulsed_rabi(const RingParams& params);

}  // namespace aqg::ion
