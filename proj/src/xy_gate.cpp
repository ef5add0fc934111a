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

#include "aqg/xy_gate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SparseCore>
#include <unsupported/Eigen/MatrixFunctions>

#include "aqg/core/integrators.hpp"
#include "aqg/core/operators.hpp"

namespace aqg::xy {

namespace {

using Sparse = Eigen::SparseMatrix<cplx>;

constexpr double kTruncationLimit = 1e-4;
constexpr double kPlanck = 6.62607015e-34;
constexpr double kBoltzmann = 1.380649e-23;

Mat hamiltonian_matrix(const XYParams& p, std::size_t n_max) {
  const std::vector<std::size_t> dims{n_max + 1, 2, 2};
  const Mat sz_a = ops::embed(ops::sigma_z(), dims, 1);
  const Mat n = ops::embed(ops::number(n_max), dims, 0);
  const Mat hop = ops::embed(ops::kron(ops::sigma_plus(), ops::sigma_minus()), {n_max + 1, 4}, 1);
  Mat h = -0.5 * p.detuning_ab() * sz_a + p.chi * n * sz_a + p.g_ab * (hop + hop.adjoint());
  if (p.include_zz) {
    const Mat zz = ops::kron({ops::projector(n_max + 1, 0, 0), ops::sigma_z(), ops::sigma_z()});
    h += (p.g_ab * p.g_ab / p.detuning_ab()) * zz;
  }
  return h;
}

Mat qubit_block(const Mat& rho, std::size_t n_max) {
  return ops::partial_trace_keep(rho, {n_max + 1, 4}, 1);
}

struct Evolution {
  std::vector<XYSample> samples;
  Mat final_rho;
  double truncation_population = 0.0;
  double empty_time = 0.0;
};

XYSample sample_of(double t, const Mat& rho, std::size_t n_max) {
  XYSample s;
  s.t = t;
  for (std::size_t n = 0; n <= n_max; ++n) {
    s.p01 += rho(xy_index(n, 0, 1), xy_index(n, 0, 1)).real();
    s.p10 += rho(xy_index(n, 1, 0), xy_index(n, 1, 0)).real();
    if (n > 0)
      for (std::size_t q = 0; q < 4; ++q) s.cavity_population += n * rho(4 * n + q, 4 * n + q).real();
  }
  return s;
}

double vacuum_population(const Mat& rho) {
  double p = 0.0;
  for (Eigen::Index q = 0; q < 4; ++q) p += rho(q, q).real();
  return p;
}

double top_population(const Mat& rho, std::size_t n_max) {
  double p = 0.0;
  for (std::size_t q = 0; q < 4; ++q) p += rho(4 * n_max + q, 4 * n_max + q).real();
  return p;
}

void finish(Evolution& ev, const std::vector<double>& vac) {
  for (std::size_t i = 1; i < ev.samples.size(); ++i)
    ev.empty_time += 0.5 * (vac[i] + vac[i - 1]) * (ev.samples[i].t - ev.samples[i - 1].t);
}

// Without a drive the photon number never grows, so Fock levels above one
// stay empty and the n <= 1 block is exact.
Evolution evolve_instantaneous(const XYParams& p, const Ket& qubits, double duration,
                               std::size_t samples) {
  constexpr std::size_t kLocalMax = 1;
  const Mat h = hamiltonian_matrix(p, kLocalMax);
  const Mat a = ops::embed(ops::destroy(kLocalMax), {kLocalMax + 1, 4}, 0);
  Ket one = Ket::Zero(kLocalMax + 1);
  one(1) = 1.0;
  const Ket psi0 = ops::kron(one, qubits);
  Mat rho = psi0 * psi0.adjoint();

  Evolution ev;
  const auto record = [&](double t, const Mat& r) {
    ev.samples.push_back(sample_of(t, r, kLocalMax));
  };
  record(0.0, rho);
  const std::size_t n = std::max<std::size_t>(1, samples);
  const double dt = duration / static_cast<double>(n);
  if (p.gamma_c > 0.0) {
    LindbladModel model(Operator::hermitian(h), {Channel{Operator(a), p.gamma_c, "cavity"}});
    const Mat prop = (liouvillian(model) * dt).exp();
    const auto d = rho.rows();
    for (std::size_t i = 1; i <= n; ++i) {
      Ket v = prop * Eigen::Map<const Ket>(rho.data(), rho.size());
      rho = Eigen::Map<const Mat>(v.data(), d, d);
      rho = 0.5 * (rho + rho.adjoint());
      record(static_cast<double>(i) * dt, rho);
    }
  } else {
    const Mat u = (-kI * dt * h).exp();
    for (std::size_t i = 1; i <= n; ++i) {
      rho = u * rho * u.adjoint();
      record(static_cast<double>(i) * dt, rho);
    }
  }
  // The photon number commutes with H, so the cavity empties as e^{-gamma t}.
  ev.empty_time = p.gamma_c > 0.0 ? duration + std::expm1(-p.gamma_c * duration) / p.gamma_c : 0.0;
  // Embed back into the caller's truncation for the qubit reduction.
  Mat full = Mat::Zero(static_cast<Eigen::Index>(p.dim()), static_cast<Eigen::Index>(p.dim()));
  full.topLeftCorner(rho.rows(), rho.cols()) = rho;
  ev.final_rho = full;
  return ev;
}

Sparse to_sparse(const Mat& m) {
  Sparse s = m.sparseView(1.0, 1e-300);
  s.makeCompressed();
  return s;
}

Evolution evolve_pulsed(const XYParams& p, const Ket& qubits, const XYPulse& pulse,
                        double duration, std::size_t samples) {
  require(p.gamma_c > 0.0, ErrorKind::invalid_parameter,
          "simulate_tick_gate: pulsed injection needs gamma_c > 0");
  require(pulse.bandwidth_ratio > 0.0, ErrorKind::invalid_parameter,
          "simulate_tick_gate: pulse bandwidth ratio must be positive");
  const std::size_t nm = p.n_max;
  const double bw = pulse.bandwidth_ratio * p.gamma_c;
  const double t0 = 6.0 / bw;
  const double t_end = duration > 0.0 ? duration : t0 + std::max(6.0 / bw, 20.0 / p.gamma_c);
  const PulseEnvelope u = gaussian_envelope(bw, t0);

  const Mat h = hamiltonian_matrix(p, nm);
  const Mat a_dense = ops::embed(ops::destroy(nm), {nm + 1, 4}, 0);
  const Sparse heff = to_sparse(h - 0.5 * kI * p.gamma_c * Mat(a_dense.adjoint() * a_dense));
  const Sparse a = to_sparse(a_dense);
  const Sparse ad = to_sparse(a_dense.adjoint());
  const double sg = std::sqrt(p.gamma_c);

  // rho stays Hermitian, so rho X = (X^dag rho)^dag for every product below.
  auto rhs = [&](double t, const Mat& rho) -> Mat {
    const cplx beta = u(t) * std::exp(-kI * pulse.photon_detuning * t);
    const cplx c1 = -kI * sg * beta;
    const cplx c2 = kI * sg * std::conj(beta);
    const Mat w = heff * rho;
    const Mat x = a * rho;
    const Mat y = ad * rho;
    Mat d = -kI * w + kI * w.adjoint();
    d += -kI * (c1 * y + c2 * x - c1 * x.adjoint() - c2 * y.adjoint());
    d += p.gamma_c * (a * Mat(x.adjoint()));
    return d;
  };

  const double spread = h.diagonal().real().maxCoeff() - h.diagonal().real().minCoeff();
  const double fast = spread + 2.0 * p.g_ab + p.gamma_c + std::abs(pulse.photon_detuning);
  TimeGrid grid;
  grid.t_start = 0.0;
  grid.t_end = t_end;
  grid.step = std::min(0.1 / p.gamma_c, 0.1 / fast);
  grid.store_every = std::max<std::size_t>(1, grid.steps() / std::max<std::size_t>(1, samples));

  Ket vac_ket = Ket::Zero(static_cast<Eigen::Index>(nm + 1));
  vac_ket(0) = 1.0;
  const Ket psi0 = ops::kron(vac_ket, qubits);
  Evolution ev;
  std::vector<double> vac;
  ev.final_rho = rk4_integrate(rhs, Mat(psi0 * psi0.adjoint()), grid,
                               [&](double t, const Mat& rho) {
                                 ev.samples.push_back(sample_of(t, rho, nm));
                                 vac.push_back(vacuum_population(rho));
                                 ev.truncation_population =
                                     std::max(ev.truncation_population, top_population(rho, nm));
                               });
  finish(ev, vac);
  return ev;
}

Evolution evolve(const XYParams& p, const Ket& qubits, const XYOptions& opt) {
  if (opt.injection == Injection::pulsed)
    return evolve_pulsed(p, qubits, opt.pulse, opt.duration, opt.samples);
  double duration = opt.duration;
  if (duration <= 0.0) {
    require(p.gamma_c > 0.0, ErrorKind::invalid_parameter,
            "simulate_tick_gate: duration is required when gamma_c = 0");
    duration = 20.0 / p.gamma_c;
  }
  return evolve_instantaneous(p, qubits, duration, opt.samples);
}

double fitted_theta(const Mat& qubit_rho) {
  const double p = std::clamp(qubit_rho(2, 2).real(), 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(p));
}

double z_free_fidelity(const Mat& rho, const Ket& ideal) {
  Ket u0 = ideal;
  Ket u1 = ideal;
  u0.tail(2).setZero();
  u1.head(2).setZero();
  const double a = (u0.adjoint() * rho * u0)(0, 0).real();
  const double b = (u1.adjoint() * rho * u1)(0, 0).real();
  const cplx c = (u0.adjoint() * rho * u1)(0, 0);
  return std::clamp(a + b + 2.0 * std::abs(c), 0.0, 1.0);
}

}  // namespace

void XYParams::validate() const {
  require(gamma_c >= 0.0 && std::isfinite(gamma_c), ErrorKind::invalid_parameter,
          "XYParams: gamma_c must be nonnegative");
  require(n_max >= 2, ErrorKind::invalid_parameter, "XYParams: n_max must be at least 2");
  require(std::isfinite(chi) && std::isfinite(g_ab) && std::isfinite(omega_a) &&
              std::isfinite(omega_b) && std::isfinite(omega_c),
          ErrorKind::invalid_parameter, "XYParams: non-finite parameter");
  require(!include_zz || detuning_ab() != 0.0, ErrorKind::division,
          "XYParams: the ZZ term needs omega_b != omega_a");
}

Mat ideal_xy(double theta) {
  const Mat gen = ops::kron(ops::sigma_x(), ops::sigma_x()) + ops::kron(ops::sigma_y(), ops::sigma_y());
  return (-kI * (theta / 4.0) * gen).exp();
}

Operator build_hamiltonian(const XYParams& params) {
  params.validate();
  return Operator::hermitian(hamiltonian_matrix(params, params.n_max));
}

Operator build_lab_hamiltonian(const XYParams& p) {
  p.validate();
  const std::vector<std::size_t> dims{p.n_max + 1, 2, 2};
  const Mat n = ops::embed(ops::number(p.n_max), dims, 0);
  const Mat sz_a = ops::embed(ops::sigma_z(), dims, 1);
  const Mat sz_b = ops::embed(ops::sigma_z(), dims, 2);
  const Mat hop = ops::embed(ops::kron(ops::sigma_plus(), ops::sigma_minus()), {p.n_max + 1, 4}, 1);
  Mat h = p.omega_c * n + 0.5 * p.omega_a * sz_a + p.chi * n * sz_a + 0.5 * p.omega_b * sz_b +
          p.g_ab * (hop + hop.adjoint());
  return Operator::hermitian(h);
}

Mat single_photon_propagator(const XYParams& params, double t) {
  params.validate();
  const Mat u = (-kI * t * hamiltonian_matrix(params, params.n_max)).exp();
  return u.block(4, 4, 4, 4);
}

XYReport simulate_tick_gate(const XYParams& params, const StateVector& qubits,
                            const XYOptions& options) {
  params.validate();
  require(qubits.dim() == 4, ErrorKind::invalid_state,
          "simulate_tick_gate: qubit state must have dim 4");
  Evolution ev = evolve(params, qubits.amplitudes(), options);
  if (ev.truncation_population > kTruncationLimit) {
    std::ostringstream os;
    os << "simulate_tick_gate: Fock level n_max holds population " << ev.truncation_population
       << " (> 1e-4); raise n_max";
    fail(ErrorKind::truncation, os.str());
  }

  XYReport r;
  r.qubit_state = qubit_block(ev.final_rho, params.n_max);
  const bool from_01 = std::norm(qubits[1]) > 1.0 - 1e-12;
  if (from_01) {
    r.theta = fitted_theta(r.qubit_state);
  } else {
    const Evolution ref = evolve(params, StateVector::basis(4, 1).amplitudes(), options);
    r.theta = fitted_theta(qubit_block(ref.final_rho, params.n_max));
  }
  r.fidelity = z_free_fidelity(r.qubit_state, ideal_xy(r.theta) * qubits.amplitudes());
  r.photon_survival = ev.samples.back().cavity_population;
  r.truncation_population = ev.truncation_population;
  if (params.detuning_ab() != 0.0)
    r.residual_zz_phase =
        4.0 * params.g_ab * params.g_ab / params.detuning_ab() * ev.empty_time;
  r.samples = std::move(ev.samples);
  return r;
}

ZZEstimate zz_strength(double g_ab, double detuning_ab, double threshold) {
  require(detuning_ab != 0.0, ErrorKind::division, "zz_strength: detuning must be nonzero");
  ZZEstimate z;
  z.zz = g_ab * g_ab / detuning_ab;
  z.ratio = g_ab == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(detuning_ab / g_ab);
  z.pass = z.ratio >= threshold;
  return z;
}

ThermalPhotons thermal_photon_number(double omega, double temperature, double gamma_c) {
  require(omega > 0.0 && temperature > 0.0, ErrorKind::invalid_parameter,
          "thermal_photon_number: frequency and temperature must be positive");
  ThermalPhotons t;
  t.n_th = 1.0 / std::expm1(omega / temperature);
  t.dephasing_rate = gamma_c * t.n_th;
  return t;
}

ThermalPhotons thermal_photon_number_si(double frequency_hz, double kelvin, double gamma_c) {
  require(frequency_hz > 0.0 && kelvin > 0.0, ErrorKind::invalid_parameter,
          "thermal_photon_number: frequency and temperature must be positive");
  return thermal_photon_number(kPlanck * frequency_hz, kBoltzmann * kelvin, gamma_c);
}

}  // namespace aqg::xy
