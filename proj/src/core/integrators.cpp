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

#include "aqg/core/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include <Eigen/LU>

#include "aqg/core/diagnostics.hpp"
#include "aqg/core/operators.hpp"

namespace aqg {

namespace {

thread_local std::vector<std::string> g_warnings;

constexpr double kPositivityWarn = 1e-6;

void check_hamiltonian(const HamiltonianFn& hamiltonian, const TimeGrid& grid,
                       Eigen::Index dim) {
  for (double t : {grid.t_start, 0.5 * (grid.t_start + grid.t_end), grid.t_end}) {
    const Mat h = hamiltonian(t);
    require(h.rows() == dim && h.cols() == dim, ErrorKind::invalid_model,
            "integrate_schrodinger: Hamiltonian dimension does not match the state");
    require(ops::is_hermitian(h, 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff())),
            ErrorKind::invalid_model, "integrate_schrodinger: H(t) is not Hermitian");
  }
}

void warn_on_positivity(const Trajectory<DensityOperator>& traj) {
  const double v = max_positivity_violation(traj);
  if (v > kPositivityWarn) {
    std::ostringstream os;
    os << "integrate_lindblad: positivity violated by " << v << " (step too large?)";
    push_warning(os.str());
  }
}

}  // namespace

void push_warning(std::string message) { g_warnings.push_back(std::move(message)); }

std::vector<std::string> take_warnings() {
  std::vector<std::string> out;
  out.swap(g_warnings);
  return out;
}

Trajectory<StateVector> integrate_schrodinger(const HamiltonianFn& hamiltonian,
                                              const StateVector& psi0,
                                              const TimeGrid& grid) {
  grid.validate();
  check_hamiltonian(hamiltonian, grid, static_cast<Eigen::Index>(psi0.dim()));
  Trajectory<StateVector> traj;
  auto rhs = [&](double t, const Ket& y) -> Ket { return -kI * (hamiltonian(t) * y); };
  rk4_integrate(rhs, psi0.amplitudes(), grid, [&](double t, const Ket& y) {
    traj.times.push_back(t);
    traj.states.push_back(StateVector::normalized(y));
  });
  return traj;
}

Trajectory<StateVector> integrate_schrodinger(const Operator& hamiltonian,
                                              const StateVector& psi0,
                                              const TimeGrid& grid) {
  require(hamiltonian.is_hermitian(), ErrorKind::invalid_model,
          "integrate_schrodinger: Hamiltonian is not Hermitian");
  require(hamiltonian.dim() == psi0.dim(), ErrorKind::invalid_model,
          "integrate_schrodinger: dimension mismatch");
  grid.validate();
  const Mat h = hamiltonian.matrix();
  Trajectory<StateVector> traj;
  auto rhs = [&](double, const Ket& y) -> Ket { return -kI * (h * y); };
  rk4_integrate(rhs, psi0.amplitudes(), grid, [&](double t, const Ket& y) {
    traj.times.push_back(t);
    traj.states.push_back(StateVector::normalized(y));
  });
  return traj;
}

namespace {

template <class HeffAt>
Trajectory<DensityOperator> lindblad_impl(const LindbladModel& model, HeffAt&& heff_at,
                                          const DensityOperator& rho0,
                                          const TimeGrid& grid) {
  require(rho0.dim() == model.dim(), ErrorKind::invalid_model,
          "integrate_lindblad: dimension mismatch");
  grid.validate();
  std::vector<Mat> jumps;
  for (const auto& ch : model.channels())
    if (ch.rate > 0.0) jumps.push_back(std::sqrt(ch.rate) * ch.jump.matrix());

  auto rhs = [&](double t, const Mat& rho) -> Mat {
    const Mat heff = heff_at(t);
    Mat d = -kI * (heff * rho) + kI * (rho * heff.adjoint());
    for (const auto& l : jumps) d.noalias() += l * rho * l.adjoint();
    return d;
  };
  Trajectory<DensityOperator> traj;
  rk4_integrate(rhs, rho0.matrix(), grid, [&](double t, const Mat& rho) {
    traj.times.push_back(t);
    traj.states.push_back(DensityOperator::unchecked(rho));
  });
  warn_on_positivity(traj);
  return traj;
}

}  // namespace

Trajectory<DensityOperator> integrate_lindblad(const LindbladModel& model,
                                               const DensityOperator& rho0,
                                               const TimeGrid& grid) {
  const Mat heff = model.effective_hamiltonian();
  return lindblad_impl(model, [&](double) -> const Mat& { return heff; }, rho0, grid);
}

Trajectory<DensityOperator> integrate_lindblad(const LindbladModel& model,
                                               const HamiltonianFn& drive,
                                               const DensityOperator& rho0,
                                               const TimeGrid& grid) {
  grid.validate();
  check_hamiltonian(drive, grid, static_cast<Eigen::Index>(model.dim()));
  const Mat heff = model.effective_hamiltonian();
  return lindblad_impl(model, [&](double t) -> Mat { return heff + drive(t); }, rho0, grid);
}

double max_positivity_violation(const Trajectory<DensityOperator>& traj) {
  if (traj.states.empty()) return 0.0;
  // Eigen-decompose a handful of samples; a full scan is too costly for long
  // trajectories and drift accumulates monotonically in practice.
  double worst = 0.0;
  const std::size_t n = traj.states.size();
  for (std::size_t i : {n / 4, n / 2, (3 * n) / 4, n - 1})
    worst = std::max(worst, -traj.states[i].min_eigenvalue());
  return worst;
}

Mat liouvillian(const LindbladModel& model) {
  // vec(A X B) = (B^T kron A) vec(X) with column stacking.
  const auto d = static_cast<Eigen::Index>(model.dim());
  const Mat id = Mat::Identity(d, d);
  const Mat heff = model.effective_hamiltonian();
  Mat l = -kI * ops::kron(id, heff) + kI * ops::kron(Mat(heff.conjugate()), id);
  for (const auto& ch : model.channels()) {
    if (ch.rate == 0.0) continue;
    const Mat& j = ch.jump.matrix();
    l += ch.rate * ops::kron(Mat(j.conjugate()), j);
  }
  return l;
}

DensityOperator steady_state(const LindbladModel& model) {
  const auto d = static_cast<Eigen::Index>(model.dim());
  Mat l = liouvillian(model);
  Ket rhs = Ket::Zero(d * d);
  // Replace the first equation by the trace condition.
  l.row(0).setZero();
  for (Eigen::Index i = 0; i < d; ++i) l(0, i * d + i) = 1.0;
  rhs(0) = 1.0;
  Eigen::FullPivLU<Mat> lu(l);
  require(lu.rank() == d * d, ErrorKind::degenerate_parameter,
          "steady_state: Liouvillian has a degenerate null space");
  const Ket v = lu.solve(rhs);
  Mat rho = Eigen::Map<const Mat>(v.data(), d, d);
  rho = 0.5 * (rho + rho.adjoint());
  return DensityOperator::unchecked(rho);
}

}  // namespace aqg
