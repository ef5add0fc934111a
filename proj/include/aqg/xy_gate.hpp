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

/// Quantum-autonomous XY gate: a tick photon in a cavity dispersively shifts
/// transmon A into resonance with transmon B, switching on their exchange.
///
/// Frequencies and rates are angular and share one unit. The dynamics run in
/// the frame rotating at w_C a^dag a + (w_B / 2)(sz_A + sz_B), where
///   H = -(D_AB / 2) sz_A + chi n sz_A + g (s+_A s-_B + h.c.),  D_AB = w_B - w_A.
/// One photon shifts A's gap by 2 chi, so resonance needs 2 chi = D_AB.
namespace aqg::xy {

enum class Injection { instantaneous, pulsed };

struct XYParams {
  double omega_c = 2.0 * kPi * 6000.0;
  double omega_a = 2.0 * kPi * 4700.0;
  double omega_b = 2.0 * kPi * 5000.0;
  double chi = 2.0 * kPi * 150.0;
  double g_ab = 2.0 * kPi * 5.0;
  double gamma_c = 2.0 * kPi * 5.0;
  /// Highest Fock number kept.
  std::size_t n_max = 5;
  /// Adds (g^2 / D_AB) sz_A sz_B on the empty-cavity sector.
  bool include_zz = false;

  void validate() const;
  double detuning_ab() const { return omega_b - omega_a; }
  /// chi that puts A on resonance with B for a single photon.
  double resonant_chi() const { return 0.5 * detuning_ab(); }
  std::size_t dim() const { return 4 * (n_max + 1); }
};

/// U_XY(theta) = exp(-i theta/4 (sx sx + sy sy)) on A (x) B, index 2a + b.
Mat ideal_xy(double theta);

/// Rotating-frame Hamiltonian on cavity (x) A (x) B.
Operator build_hamiltonian(const XYParams& params);

/// Lab-frame H_CAB as written with the bare frequencies.
Operator build_lab_hamiltonian(const XYParams& params);

/// Basis index of |n> (x) |a> (x) |b>.
constexpr std::size_t xy_index(std::size_t n, std::size_t a, std::size_t b) {
  return 4 * n + 2 * a + b;
}

/// exp(-i H t) restricted to the one-photon sector, as a 4x4 qubit matrix.
Mat single_photon_propagator(const XYParams& params, double t);

struct XYPulse {
  double bandwidth_ratio = 0.03;
  /// Photon carrier minus cavity frequency.
  double photon_detuning = 0.0;
};

struct XYOptions {
  Injection injection = Injection::instantaneous;
  XYPulse pulse;
  /// 0 means 20 / gamma_c (instantaneous) or the pulse window (pulsed);
  /// required when gamma_c = 0.
  double duration = 0.0;
  std::size_t samples = 200;
};

struct XYSample {
  double t = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double cavity_population = 0.0;
};

struct XYReport {
  /// Angle fitted from the |01> -> |10> transfer p = sin^2(theta / 2).
  double theta = 0.0;
  /// Overlap of the final qubit state with U_XY(theta)|psi0>, maximized over a
  /// Z rotation of A (the empty-cavity detuning imprints one).
  double fidelity = 0.0;
  /// 4 (g^2 / D_AB) times the time spent with the cavity empty.
  double residual_zz_phase = 0.0;
  /// Cavity population at the final time.
  double photon_survival = 0.0;
  /// Largest population in Fock level n_max.
  double truncation_population = 0.0;
  std::vector<XYSample> samples;
  Mat qubit_state;
};

/// Evolves the qubits (default |01>) with the tick photon under cavity decay.
/// Throws truncation when Fock level n_max holds more than 1e-4.
XYReport simulate_tick_gate(const XYParams& params, const StateVector& qubits,
                            const XYOptions& options = {});

struct ZZEstimate {
  double zz = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

/// g^2 / D with pass flag for |D / g| >= threshold.
ZZEstimate zz_strength(double g_ab, double detuning_ab, double threshold = 10.0);

struct ThermalPhotons {
  double n_th = 0.0;
  double dephasing_rate = 0.0;
};

/// n_th = 1 / (e^{w/T} - 1) with w and T in one energy unit; the dephasing
/// estimate is gamma_c n_th.
ThermalPhotons thermal_photon_number(double omega, double temperature, double gamma_c = 0.0);

/// Same with a cyclic frequency in Hz and a temperature in kelvin.
ThermalPhotons thermal_photon_number_si(double frequency_hz, double kelvin,
                                        double gamma_c = 0.0);

}  // namespace aqg::xy
