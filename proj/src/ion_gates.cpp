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

#include "aqg/ion_gates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "aqg/core/integrators.hpp"
#include "aqg/core/operators.hpp"

namespace aqg::ion {

namespace {

constexpr double kTruncationLimit = 1e-4;

double top_fock_population(const Ket& psi, std::size_t n_levels) {
  double p = 0.0;
  const auto nf = static_cast<Eigen::Index>(n_levels);
  for (Eigen::Index s = 0; s < 4; ++s) p += std::norm(psi(s * nf + nf - 1));
  return p;
}

}  // namespace

void MSParams::validate() const {
  require(n_max >= 2, ErrorKind::invalid_parameter, "MSParams: n_max must be at least 2");
  require(lamb_dicke >= 0.0 && std::isfinite(lamb_dicke), ErrorKind::invalid_parameter,
          "MSParams: lamb_dicke must be nonnegative");
  require(detuning != 0.0 && std::isfinite(detuning), ErrorKind::invalid_parameter,
          "MSParams: detuning must be nonzero");
  require(rabi >= 0.0 && std::isfinite(rabi), ErrorKind::invalid_parameter,
          "MSParams: rabi must be nonnegative");
  require(mode_frequency > 0.0, ErrorKind::invalid_parameter,
          "MSParams: mode frequency must be positive");
}

double MSParams::effective_rabi() const {
  if (rabi > 0.0) return rabi;
  return lamb_dicke > 0.0 ? std::abs(detuning) / (2.0 * lamb_dicke) : 0.0;
}

double MSParams::coupling() const { return 0.5 * lamb_dicke * effective_rabi(); }

double MSParams::closure_time() const { return 2.0 * kPi / std::abs(detuning); }

Ket ms_target() {
  Ket t = Ket::Zero(4);
  t(0) = 1.0 / std::sqrt(2.0);
  t(3) = kI / std::sqrt(2.0);
  return t;
}

MSResult ms_evolve(const MSParams& params, const StateVector& spins, std::size_t fock,
                   double duration, double step, std::size_t sample_every) {
  params.validate();
  require(spins.dim() == 4, ErrorKind::invalid_state, "ms_evolve: spin state must have dim 4");
  require(fock <= params.n_max, ErrorKind::invalid_state,
          "ms_evolve: initial Fock number exceeds n_max");
  const std::size_t nf = params.n_max + 1;
  const double t_end = duration > 0.0 ? duration : params.closure_time();
  const double g = params.coupling();
  if (step <= 0.0) {
    const double fast = std::max(std::abs(params.detuning),
                                 4.0 * g * std::sqrt(static_cast<double>(nf)));
    step = std::min(t_end / 2000.0, 0.1 / fast);
  }

  const Mat sy = ops::sigma_y();
  const Mat id2 = Mat::Identity(2, 2);
  const Mat s_total = ops::kron(sy, id2) + ops::kron(id2, sy);
  const Mat up = g * ops::kron(s_total, Mat(ops::destroy(params.n_max).adjoint()));
  const Mat down = up.adjoint();
  const double delta = params.detuning;
  auto rhs = [&](double t, const Ket& y) -> Ket {
    const cplx ph = std::exp(kI * delta * t);
    return -kI * (std::conj(ph) * (up * y) + ph * (down * y));
  };

  Ket fock_ket = Ket::Zero(static_cast<Eigen::Index>(nf));
  fock_ket(static_cast<Eigen::Index>(fock)) = 1.0;
  const Ket psi0 = ops::kron(spins.amplitudes(), fock_ket);
  const Ket target = ms_target();
  const Mat n_op = ops::number(params.n_max);
  const std::vector<std::size_t> dims{4, nf};

  TimeGrid grid;
  grid.t_start = 0.0;
  grid.t_end = t_end;
  grid.step = step;
  grid.store_every = std::max<std::size_t>(1, sample_every);

  MSResult out;
  auto observe = [&](double t, const Ket& y) {
    const Ket psi = y / y.norm();
    const Mat rho = psi * psi.adjoint();
    const Mat spin = ops::partial_trace_keep(rho, dims, 0);
    const Mat mot = ops::partial_trace_keep(rho, dims, 1);
    MSSample s;
    s.t = t;
    s.fidelity_to_target = (target.adjoint() * spin * target)(0, 0).real();
    s.motional_purity = (mot * mot).trace().real();
    s.mean_phonons = (mot * n_op).trace().real();
    out.samples.push_back(s);
    out.truncation_population = std::max(out.truncation_population, top_fock_population(psi, nf));
    out.spin_state = spin;
  };
  const Ket y = rk4_integrate(rhs, psi0, grid, observe);
  out.final_state = StateVector::normalized(y);

  if (out.truncation_population > kTruncationLimit) {
    std::ostringstream os;
    os << "ms_evolve: Fock level n_max holds population " << out.truncation_population
       << " (> 1e-4); raise n_max";
    fail(ErrorKind::truncation, os.str());
  }
  return out;
}

double slide_exposure(double speed, double diameter) {
  require(speed > 0.0, ErrorKind::invalid_parameter, "slide_exposure: speed must be positive");
  require(diameter >= 0.0, ErrorKind::invalid_parameter,
          "slide_exposure: diameter must be nonnegative");
  return diameter / speed;
}

double slide_diameter(double speed, double time) {
  require(speed > 0.0, ErrorKind::invalid_parameter, "slide_diameter: speed must be positive");
  require(time >= 0.0, ErrorKind::invalid_parameter, "slide_diameter: time must be nonnegative");
  return speed * time;
}

double light_shift(double rabi, double detuning) {
  require(detuning != 0.0, ErrorKind::division, "light_shift: detuning must be nonzero");
  return rabi * rabi / (2.0 * detuning);
}

void RingParams::validate() const {
  require(radius > 0.0, ErrorKind::invalid_parameter, "RingParams: radius must be positive");
  require(chord >= 0.0, ErrorKind::invalid_parameter, "RingParams: chord must be nonnegative");
  require(chord <= 2.0 * radius * (1.0 + 1e-12), ErrorKind::geometry,
          "RingParams: beam chord exceeds the ring diameter");
  require(rotation_frequency > 0.0, ErrorKind::invalid_parameter,
          "RingParams: rotation frequency must be positive");
  require(duration > 0.0, ErrorKind::invalid_parameter, "RingParams: duration must be positive");
  require(decay_rate >= 0.0, ErrorKind::invalid_parameter,
          "RingParams: decay rate must be nonnegative");
  require(rabi >= 0.0, ErrorKind::invalid_parameter, "RingParams: rabi must be nonnegative");
}

RingSchedule ring_schedule(const RingParams& params) {
  params.validate();
  RingSchedule s;
  s.theta = 2.0 * std::asin(std::min(1.0, params.chord / (2.0 * params.radius)));
  s.passes = params.duration * params.rotation_frequency;
  s.illuminated_fraction = s.theta / kPi;
  s.rabi = params.rabi;
  if (s.rabi == 0.0 && s.illuminated_fraction > 0.0)
    s.rabi = kPi / (params.duration * s.illuminated_fraction);
  s.pulse_area = s.rabi * params.duration * s.illuminated_fraction;
  return s;
}

namespace {

Mat qubit_propagator(double rabi, double decay, double t) {
  LindbladModel model(Operator::hermitian(0.5 * rabi * ops::sigma_x()),
                      {Channel{Operator(ops::sigma_minus()), decay, "decay"}});
  return Mat((liouvillian(model) * t).exp());
}

Mat propagate(const Mat& prop, const Mat& rho) {
  Ket v = prop * Eigen::Map<const Ket>(rho.data(), rho.size());
  return Eigen::Map<const Mat>(v.data(), rho.rows(), rho.cols());
}

}  // namespace

RingRabiResult ring_pulsed_rabi(const RingParams& params) {
  const RingSchedule sched = ring_schedule(params);
  Mat rho = Mat::Zero(2, 2);
  rho(0, 0) = 1.0;
  const Mat rho0 = rho;

  // Entering an arc at t = 0; arcs repeat every half turn.
  const double half_turn = 0.5 / params.rotation_frequency;
  const double lit = half_turn * sched.illuminated_fraction;
  double t = 0.0;
  while (t < params.duration) {
    const double lit_len = std::min(lit, params.duration - t);
    if (lit_len > 0.0) rho = propagate(qubit_propagator(sched.rabi, params.decay_rate, lit_len), rho);
    t += lit_len;
    const double dark_len = std::min(half_turn - lit, params.duration - t);
    if (dark_len > 0.0) rho = propagate(qubit_propagator(0.0, params.decay_rate, dark_len), rho);
    t += std::max(dark_len, 0.0);
  }

  const Mat cont = propagate(qubit_propagator(sched.rabi * sched.illuminated_fraction,
                                          params.decay_rate, params.duration),
                         rho0);
  RingRabiResult out;
  out.final_state = 0.5 * (rho + rho.adjoint());
  out.continuous_state = 0.5 * (cont + cont.adjoint());
  out.excited_population = out.final_state(1, 1).real();
  out.continuous_excited_population = out.continuous_state(1, 1).real();
  out.fidelity = ops::qubit_state_fidelity(out.final_state, out.continuous_state);
  return out;
}

}  // namespace aqg::ion
