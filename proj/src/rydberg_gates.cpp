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

#include "aqg/rydberg_gates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "aqg/core/operators.hpp"

namespace aqg::rydberg {

namespace {

constexpr std::size_t kDim = 9;
constexpr std::array<std::size_t, 4> kComputational = {
    two_atom_index(k0, k0), two_atom_index(k0, k1), two_atom_index(k1, k0),
    two_atom_index(k1, k1)};

Mat single_atom_drive(double rabi) {
  Mat h = Mat::Zero(3, 3);
  h(kR, k1) = 0.5 * rabi;
  h(k1, kR) = 0.5 * rabi;
  return h;
}

Mat pulse_hamiltonian(const BlockadeParams& p, bool on_control) {
  const std::vector<std::size_t> dims{3, 3};
  Mat h = ops::embed(single_atom_drive(p.rabi), dims, on_control ? 0 : 1);
  const Mat pr = ops::projector(3, kR, kR);
  h -= p.detuning * (ops::embed(pr, dims, 0) + ops::embed(pr, dims, 1));
  const std::size_t rr = two_atom_index(kR, kR);
  if (p.hard_blockade) {
    for (std::size_t i = 0; i < kDim; ++i) {
      if (i == rr) continue;
      h(rr, i) = 0.0;
      h(i, rr) = 0.0;
    }
  } else {
    h(rr, rr) += p.blockade;
  }
  return h;
}

Mat evolve(const Mat& h, double t) { return Mat((-kI * t * h).exp()); }

ConditionalPhaseTable table_from(const Mat& u) {
  ConditionalPhaseTable tab;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto i = static_cast<Eigen::Index>(kComputational[k]);
    const cplx amp = u(i, i);
    tab.phase[k] = ops::wrap_angle(std::arg(amp));
    tab.leakage[k] = std::clamp(1.0 - std::norm(amp), 0.0, 1.0);
  }
  // Reference every phase to |00>.
  const double ref = tab.phase[0];
  for (double& ph : tab.phase) ph = ops::wrap_angle(ph - ref);
  return tab;
}

Mat sector_propagator(double sector_rabi, double detuning, double xi, double tau) {
  Mat h(2, 2);
  h << 0.0, 0.5 * sector_rabi * std::exp(kI * xi), 0.5 * sector_rabi * std::exp(-kI * xi),
      -detuning;
  return evolve(h, tau);
}

double sector_leakage(double rabi, double detuning, double xi) {
  const double tau = 2.0 * kPi / std::sqrt(detuning * detuning + 2.0 * rabi * rabi);
  const Mat u = sector_propagator(rabi, detuning, xi, tau) *
                sector_propagator(rabi, detuning, 0.0, tau);
  return std::norm(u(1, 0));
}

}  // namespace

void BlockadeParams::validate() const {
  require(rabi > 0.0 && std::isfinite(rabi), ErrorKind::invalid_parameter,
          "BlockadeParams: rabi must be positive");
  require(blockade >= 0.0 && std::isfinite(blockade), ErrorKind::invalid_parameter,
          "BlockadeParams: blockade shift must be nonnegative");
  require(std::isfinite(detuning), ErrorKind::invalid_parameter,
          "BlockadeParams: detuning must be finite");
}

double ConditionalPhaseTable::conditional_phase() const {
  return ops::wrap_angle(phase[1] + phase[2] - phase[0] - phase[3]);
}

double ConditionalPhaseTable::max_leakage() const {
  return *std::max_element(leakage.begin(), leakage.end());
}

Mat blockade_unitary(const BlockadeParams& params) {
  params.validate();
  const Mat hc = pulse_hamiltonian(params, true);
  const Mat ht = pulse_hamiltonian(params, false);
  const double t_pi = kPi / params.rabi;
  const Mat uc = evolve(hc, t_pi);
  return uc * evolve(ht, 2.0 * t_pi) * uc;
}

BlockadeResult blockade_cz(const BlockadeParams& params, const StateVector& psi0) {
  require(psi0.dim() == kDim, ErrorKind::invalid_state,
          "blockade_cz: two-atom state must have 9 amplitudes");
  const Mat u = blockade_unitary(params);
  return {StateVector::normalized(u * psi0.amplitudes()), table_from(u)};
}

Mat blockade_ideal() {
  Mat m = Mat::Zero(4, 4);
  m.diagonal() << 1.0, -1.0, -1.0, -1.0;
  return m;
}

double blockade_cz_fidelity(const BlockadeParams& params) {
  const Mat u = blockade_unitary(params);
  Mat block(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          u(static_cast<Eigen::Index>(kComputational[r]),
            static_cast<Eigen::Index>(kComputational[c]));
  return ops::average_gate_fidelity(blockade_ideal(), block);
}

LevinePichlerParams LevinePichlerParams::from_rates(double rabi, double detuning, double xi) {
  LevinePichlerParams p;
  p.rabi = rabi;
  p.detuning = detuning;
  p.xi = xi;
  p.tau = 2.0 * kPi / std::sqrt(detuning * detuning + 2.0 * rabi * rabi);
  return p;
}

void LevinePichlerParams::validate() const {
  require(rabi > 0.0 && std::isfinite(rabi), ErrorKind::invalid_parameter,
          "LevinePichlerParams: rabi must be positive");
  require(tau > 0.0 && std::isfinite(tau), ErrorKind::invalid_parameter,
          "LevinePichlerParams: tau must be positive");
  require(std::isfinite(detuning) && std::isfinite(xi), ErrorKind::invalid_parameter,
          "LevinePichlerParams: non-finite parameter");
}

double solve_xi(double rabi, double detuning) {
  require(rabi > 0.0, ErrorKind::invalid_parameter, "solve_xi: rabi must be positive");
  constexpr int kScan = 720;
  const double dx = 2.0 * kPi / kScan;
  int best = 0;
  double best_val = sector_leakage(rabi, detuning, 0.0);
  for (int i = 1; i < kScan; ++i) {
    const double v = sector_leakage(rabi, detuning, i * dx);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const auto res = boost::math::tools::brent_find_minima(
      [&](double xi) { return sector_leakage(rabi, detuning, xi); }, (best - 1) * dx,
      (best + 1) * dx, 52);
  double xi = std::fmod(res.first, 2.0 * kPi);
  if (xi < 0.0) xi += 2.0 * kPi;
  return xi;
}

cplx levine_pichler_return(const LevinePichlerParams& params, double sector_rabi) {
  params.validate();
  const Mat u = sector_propagator(sector_rabi, params.detuning, params.xi, params.tau) *
                sector_propagator(sector_rabi, params.detuning, 0.0, params.tau);
  return u(0, 0);
}

ConditionalPhaseTable levine_pichler(const LevinePichlerParams& params,
                                     double leakage_threshold) {
  params.validate();
  const cplx a01 = levine_pichler_return(params, params.rabi);
  const cplx a11 = levine_pichler_return(params, std::sqrt(2.0) * params.rabi);
  ConditionalPhaseTable tab;
  tab.phase = {0.0, ops::wrap_angle(std::arg(a01)), ops::wrap_angle(std::arg(a01)),
               ops::wrap_angle(std::arg(a11))};
  tab.leakage = {0.0, std::clamp(1.0 - std::norm(a01), 0.0, 1.0),
                 std::clamp(1.0 - std::norm(a01), 0.0, 1.0),
                 std::clamp(1.0 - std::norm(a11), 0.0, 1.0)};
  if (tab.max_leakage() > leakage_threshold) {
    std::ostringstream os;
    os << "levine_pichler: leakage " << tab.max_leakage() << " exceeds threshold "
       << leakage_threshold;
    fail(ErrorKind::incomplete_return, os.str());
  }
  return tab;
}

double back_solve_rabi(double tau, double detuning_over_rabi) {
  require(tau > 0.0, ErrorKind::invalid_parameter, "back_solve_rabi: tau must be positive");
  return 2.0 * kPi / (tau * std::sqrt(detuning_over_rabi * detuning_over_rabi + 2.0));
}

UltrafastAmplitudes ultrafast_phase(double coupling, double t) {
  require(coupling > 0.0, ErrorKind::invalid_parameter,
          "ultrafast_phase: coupling must be positive");
  return {cplx(std::cos(coupling * t), 0.0), cplx(0.0, -std::sin(coupling * t))};
}

double clock_laser_distance(double delay, double refractive_index) {
  require(refractive_index >= 1.0, ErrorKind::invalid_parameter,
          "clock_laser_distance: refractive index must be at least 1");
  require(delay >= 0.0, ErrorKind::invalid_parameter,
          "clock_laser_distance: delay must be nonnegative");
  return kSpeedOfLight * delay / refractive_index;
}

}  // namespace aqg::rydberg
