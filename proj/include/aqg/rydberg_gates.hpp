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

#include <array>

#include "aqg/core/types.hpp"

/// Neutral-atom gates: the three-pulse blockade controlled-Z, the two-pulse
/// global-drive controlled-Z of Levine and Pichler, resonant dipole-dipole
/// exchange, and the clock-laser delay line.
namespace aqg::rydberg {

/// Single-atom levels; the two-atom basis index is 3 * control + target.
enum Level : std::size_t { k0 = 0, k1 = 1, kR = 2 };

constexpr std::size_t two_atom_index(std::size_t control, std::size_t target) {
  return 3 * control + target;
}

struct BlockadeParams {
  double rabi = 1.0;
  /// Energy shift of |rr>.
  double blockade = 100.0;
  /// Laser detuning applied during every pulse, as a -detuning energy on |r>.
  double detuning = 0.0;
  /// Removes every coupling into |rr> (the infinite-shift limit).
  bool hard_blockade = false;

  void validate() const;
};

/// Diagonal action on the computational states |00>, |01>, |10>, |11>.
struct ConditionalPhaseTable {
  std::array<double, 4> phase{};    // wrapped into (-pi, pi]
  std::array<double, 4> leakage{};  // 1 - |<in|out>|^2

  /// phi01 + phi10 - phi00 - phi11, wrapped.
  double conditional_phase() const;
  double max_leakage() const;
};

struct BlockadeResult {
  StateVector state;
  ConditionalPhaseTable table;
};

/// 9x9 propagator of the pi (control), 2pi (target), pi (control) sequence.
Mat blockade_unitary(const BlockadeParams& params);

/// Evolves `psi0` through the sequence and extracts the phase table from the
/// four computational inputs.
BlockadeResult blockade_cz(const BlockadeParams& params, const StateVector& psi0);

/// Ideal action of the sequence on the computational block:
/// diag(1, -1, -1, -1), a controlled-Z up to single-qubit Z rotations.
Mat blockade_ideal();

/// Average gate fidelity of the computational block to blockade_ideal().
double blockade_cz_fidelity(const BlockadeParams& params);

struct LevinePichlerParams {
  double rabi = 1.0;
  double detuning = 0.377;
  double xi = 0.0;
  double tau = 0.0;

  /// tau = 2 pi / sqrt(detuning^2 + 2 rabi^2).
  static LevinePichlerParams from_rates(double rabi, double detuning, double xi);
  void validate() const;
};

/// Phase offset of the second pulse that returns the single-excitation
/// sectors to the computational state, by a coarse scan followed by Brent
/// minimization of the residual Rydberg population.
double solve_xi(double rabi, double detuning);

/// Ground-state return amplitude of one 2x2 sector with coupling strength
/// `sector_rabi` (rabi or sqrt(2) rabi).
cplx levine_pichler_return(const LevinePichlerParams& params, double sector_rabi);

/// Phase table of the two-pulse sequence. Throws incomplete_return when any
/// computational state leaks more than `leakage_threshold`.
ConditionalPhaseTable levine_pichler(const LevinePichlerParams& params,
                                     double leakage_threshold = 1e-3);

/// Rabi frequency that makes the pulse last `tau` at detuning = ratio * rabi.
double back_solve_rabi(double tau, double detuning_over_rabi);

struct UltrafastAmplitudes {
  cplx dd;
  cplx pf;
};

/// cos(J t)|dd> - i sin(J t)|pf>.
UltrafastAmplitudes ultrafast_phase(double coupling, double t);

inline constexpr double kSpeedOfLight = 299792458.0;

/// Delay-line length c T / n.
double clock_laser_distance(double delay, double refractive_index = 1.0);

}  // namespace aqg::rydberg
