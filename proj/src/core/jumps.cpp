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

#include "aqg/core/jumps.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace aqg {

JumpSimulator::JumpSimulator(const LindbladModel& model, double step, int refine_levels)
    : model_(model), step_(step) {
  require(step > 0.0 && std::isfinite(step), ErrorKind::invalid_parameter,
          "JumpSimulator: step must be positive");
  require(refine_levels >= 1 && refine_levels <= 40, ErrorKind::invalid_parameter,
          "JumpSimulator: refine_levels must lie in [1, 40]");
  const Mat heff = model_.effective_hamiltonian();
  propagators_.reserve(static_cast<std::size_t>(refine_levels) + 1);
  for (int k = 0; k <= refine_levels; ++k) {
    const double h = step / static_cast<double>(1ull << k);
    propagators_.push_back(Mat((-kI * h * heff).exp()));
  }
  for (const auto& ch : model_.channels())
    scaled_jumps_.push_back(std::sqrt(ch.rate) * ch.jump.matrix());
}

std::size_t JumpSimulator::pick_channel(const Ket& psi, double r) const {
  std::vector<double> w(scaled_jumps_.size());
  double total = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = (scaled_jumps_[k] * psi).squaredNorm();
    total += w[k];
  }
  require(total > 0.0, ErrorKind::invalid_model,
          "JumpSimulator: jump requested but every channel has zero weight");
  double acc = 0.0;
  const double target = r * total;
  for (std::size_t k = 0; k < w.size(); ++k) {
    acc += w[k];
    if (target < acc && w[k] > 0.0) return k;
  }
  for (std::size_t k = w.size(); k-- > 0;)
    if (w[k] > 0.0) return k;
  return 0;
}

std::mt19937_64 trajectory_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), 0x5eedu};
  return std::mt19937_64(seq);
}

JumpTrajectory quantum_jump_trajectory(const LindbladModel& model, const StateVector& psi0,
                                       const TimeGrid& grid, std::uint64_t seed) {
  grid.validate();
  require(psi0.dim() == model.dim(), ErrorKind::invalid_model,
          "quantum_jump_trajectory: dimension mismatch");
  const JumpSimulator sim(model, grid.step);
  auto rng = trajectory_rng(seed, 0);
  JumpTrajectory out;
  sim.run(
      psi0.amplitudes(), grid.t_start, grid.t_end, rng,
      [&](const JumpEvent& e) { out.jumps.push_back(e); },
      [&](double t, const Ket& psi) {
        out.states.times.push_back(t);
        out.states.states.push_back(StateVector::normalized(psi));
      },
      grid.store_every);
  return out;
}

}  // namespace aqg
