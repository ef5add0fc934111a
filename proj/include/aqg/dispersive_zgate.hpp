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
#include <span>
#include <vector>

#include "aqg/core/parallel.hpp"
#include "aqg/core/types.hpp"

/// Quantum-autonomous Z gate on a qubit dispersively coupled to a cavity that
/// scatters a single Gaussian photon.
///
/// The qubit coherence follows from the qubit-conditioned cavity amplitudes
///
///   i d<s>/dt   = chi <s(-inf)> a_up conj(a_down)
///   i d a_up/dt = [delta + (chi - i gamma)/2] a_up - i sqrt(gamma) u(t)
///   i d a_dn/dt = [delta - (chi + i gamma)/2] a_dn - i sqrt(gamma) u(t)
///
/// where u(t) is the photon's temporal profile. All rates share one unit; the
/// step sizes and windows are chosen relative to gamma and the bandwidth, so
/// any unit system works.
namespace aqg::zgate {

struct DispersiveZParams {
  double chi = 0.5;
  double gamma = 1.0;
  double delta = 0.25;
  double bandwidth = 0.03;
  /// Pulse center. The default places the pulse's leading 3-sigma edge at
  /// t = 0, the instant the clock emits the photon.
  double t0 = 100.0;

  /// Appendix-style operating point: delta = chi/2, bandwidth = ratio*gamma,
  /// t0 = 3/bandwidth.
  static DispersiveZParams on_rule(double chi, double gamma, double bandwidth_ratio = 0.03);

  void validate() const;
};

struct CoherenceTrajectory {
  std::vector<double> times;
  std::vector<cplx> sigma_minus;
  std::vector<cplx> a_up;
  std::vector<cplx> a_down;
  cplx initial_coherence{0.5, 0.0};
  double t0 = 0.0;
  double gamma = 1.0;

  std::size_t size() const noexcept { return times.size(); }
  /// Rotation angle accumulated by time t_i, -arg(s(t_i)/s(-inf)), unwrapped
  /// along the trajectory so it starts at 0.
  std::vector<double> phases() const;
  std::vector<double> magnitudes() const;
};

struct EomOptions {
  /// Integration step; 0 picks min(0.05/gamma, 0.1/bandwidth, 0.5/|lambda|max).
  double step = 0.0;
  /// Time after t0 to integrate; 0 means max(6/bandwidth, 300/gamma).
  double window_after = 0.0;
  /// Stored sample spacing; 0 means about 0.1/gamma.
  double sample_spacing = 0.0;
};

/// Integrates the effective equations of motion from t0 - 6/bandwidth with
/// empty cavity amplitudes. Throws incomplete_scattering when either cavity
/// amplitude still exceeds 1e-4 at the end of the window.
CoherenceTrajectory evolve_effective_eoms(const DispersiveZParams& params,
                                          cplx initial_coherence,
                                          const EomOptions& options = {});

/// Same integration, keeping only the final coherence.
cplx final_coherence(const DispersiveZParams& params, cplx initial_coherence,
                     const EomOptions& options = {});

/// Step size used when EomOptions::step is 0.
double default_step(const DispersiveZParams& params);

/// 2 arctan(2 chi / gamma).
double analytic_phase(double chi, double gamma);

/// Narrow-bandwidth limit of s(+inf)/s(-inf):
/// 1 - i chi gamma / [(delta + (chi - i gamma)/2)(delta - (chi - i gamma)/2)].
cplx long_time_coherence(double chi, double gamma, double delta);

/// Fidelity of the final qubit state to a|0> + b e^{-i phi}|1>, given the
/// populations are preserved:
///   F = |a|^4 + |b|^4 + 2 Re(conj(a) b e^{-i phi} rho01),
/// where rho01 = <0|rho|1> = conj(<sigma_->). The ideal value of rho01 is
/// a conj(b) e^{i phi}.
double gate_fidelity(cplx rho01, cplx a, cplx b, double target_phi);

struct ChiSweep {
  double chi_min_over_gamma = 0.0;
  double chi_max_over_gamma = 30.0;
  std::size_t samples = 601;

  std::vector<double> chis(double gamma) const;
};

struct ZGateReport {
  double target_phi = 0.0;
  double phi_final = 0.0;
  double coherence_final = 0.0;
  double fidelity = 0.0;
  double chi_used = 0.0;
  double settle_time = 0.0;
};

struct RotationSetup {
  double gamma = 1.0;
  double bandwidth_ratio = 0.03;
  cplx a{0.70710678118654752, 0.0};
  cplx b{0.70710678118654752, 0.0};
  double settle_tol = 1e-3;
};

/// Final coherences over a chi sweep on the delta = chi/2 rule. The parallel
/// and serial paths return identical vectors.
std::vector<cplx> sweep_final_coherence(std::span<const DispersiveZParams> points,
                                        cplx initial_coherence,
                                        Execution exec = Execution::parallel);

/// Best fidelity to a rotation by `target_phi` over the chi sweep; ties go to
/// the smaller chi. The report's settle time comes from re-evolving the
/// winning point.
ZGateReport optimize_rotation(double target_phi, const ChiSweep& sweep,
                              const RotationSetup& setup = {},
                              Execution exec = Execution::parallel);

/// optimize_rotation for several targets, sharing one sweep.
std::vector<ZGateReport> fidelity_curve(std::span<const double> targets,
                                        const ChiSweep& sweep,
                                        const RotationSetup& setup = {},
                                        Execution exec = Execution::parallel);

/// First time after which the coherence magnitude and the rotation angle
/// each vary by less than `tol` over the rest of the trajectory. The settled
/// tail must last at least 50/gamma (no_steady_state otherwise), and the
/// trajectory must reach 300/gamma past t0.
double steady_state_time(const CoherenceTrajectory& traj, double tol);

}  // namespace aqg::zgate
