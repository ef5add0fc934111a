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
#include <functional>
#include <utility>

#include "aqg/core/types.hpp"

namespace aqg {

/// One classical fourth-order Runge-Kutta step of y' = f(t, y).
template <class State, class Rhs>
State rk4_step(const Rhs& f, double t, const State& y, double h) {
  const State k1 = f(t, y);
  const State k2 = f(t + 0.5 * h, State(y + (0.5 * h) * k1));
  const State k3 = f(t + 0.5 * h, State(y + (0.5 * h) * k2));
  const State k4 = f(t + h, State(y + h * k3));
  return State(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

/// Fixed-step RK4 over `grid`. `observe(t, y)` is called at t_start, every
/// `grid.store_every` steps, and at t_end.
template <class State, class Rhs, class Observer>
State rk4_integrate(const Rhs& f, State y, const TimeGrid& grid, Observer&& observe) {
  grid.validate();
  const std::size_t n = grid.steps();
  double t = grid.t_start;
  observe(t, y);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = (i + 1 == n) ? grid.t_end - t : grid.step;
    y = rk4_step(f, t, y, h);
    t = (i + 1 == n) ? grid.t_end : grid.t_start + static_cast<double>(i + 1) * grid.step;
    if ((i + 1) % grid.store_every == 0 || i + 1 == n) observe(t, y);
  }
  return y;
}

using HamiltonianFn = std::function<Mat(double)>;

/// i d|psi>/dt = H(t)|psi>. H is checked for hermiticity at the grid ends and
/// midpoint (invalid_model on failure).
Trajectory<StateVector> integrate_schrodinger(const HamiltonianFn& hamiltonian,
                                              const StateVector& psi0,
                                              const TimeGrid& grid);

Trajectory<StateVector> integrate_schrodinger(const Operator& hamiltonian,
                                              const StateVector& psi0,
                                              const TimeGrid& grid);

/// Lindblad master equation with a constant model.
Trajectory<DensityOperator> integrate_lindblad(const LindbladModel& model,
                                               const DensityOperator& rho0,
                                               const TimeGrid& grid);

/// Lindblad master equation whose Hamiltonian is `model.hamiltonian() +
/// drive(t)`; the collapse channels stay fixed.
Trajectory<DensityOperator> integrate_lindblad(const LindbladModel& model,
                                               const HamiltonianFn& drive,
                                               const DensityOperator& rho0,
                                               const TimeGrid& grid);

/// Largest positivity violation (negative eigenvalue magnitude) seen along a
/// trajectory; 0 when all states are positive semidefinite.
double max_positivity_violation(const Trajectory<DensityOperator>& traj);

/// Dense Liouvillian acting on column-stacked vec(rho).
Mat liouvillian(const LindbladModel& model);

/// Stationary state from the Liouvillian null space (trace fixed to 1).
DensityOperator steady_state(const LindbladModel& model);

}  // namespace aqg
