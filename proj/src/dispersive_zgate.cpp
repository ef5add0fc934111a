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

#include "aqg/dispersive_zgate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aqg/core/integrators.hpp"
#include "aqg/core/operators.hpp"

namespace aqg::zgate {

namespace {

using Vec3 = Eigen::Vector3cd;

constexpr double kLeadSigmas = 6.0;
constexpr double kCavityEmpty = 1e-4;
constexpr double kSettledTail = 50.0;      // in 1/gamma
constexpr double kMinWindowAfter = 300.0;  // in 1/gamma

struct Window {
  TimeGrid grid;
};

Window make_window(const DispersiveZParams& p, const EomOptions& opt) {
  const double h = opt.step > 0.0 ? opt.step : default_step(p);
  const double after = opt.window_after > 0.0
                           ? opt.window_after
                           : std::max(kLeadSigmas / p.bandwidth, kMinWindowAfter / p.gamma);
  const double spacing = opt.sample_spacing > 0.0 ? opt.sample_spacing : 0.1 / p.gamma;
  TimeGrid g;
  g.t_start = p.t0 - kLeadSigmas / p.bandwidth;
  g.t_end = p.t0 + after;
  g.step = h;
  g.store_every = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(spacing / h)));
  return {g};
}

/// RHS for (r, a_up, a_down), r = s(t)/s(-inf).
struct EomRhs {
  cplx lam_up;
  cplx lam_down;
  double chi;
  double sqrt_gamma;
  double u_prefactor;
  double u_width;  // bandwidth^2 / 4
  double t0;

  Vec3 operator()(double t, const Vec3& y) const {
    const double s = t - t0;
    const double u = u_prefactor * std::exp(-u_width * s * s);
    Vec3 d;
    d(0) = -kI * chi * y(1) * std::conj(y(2));
    d(1) = -kI * lam_up * y(1) - sqrt_gamma * u;
    d(2) = -kI * lam_down * y(2) - sqrt_gamma * u;
    return d;
  }
};

EomRhs make_rhs(const DispersiveZParams& p) {
  EomRhs f;
  f.lam_up = cplx(p.delta + 0.5 * p.chi, -0.5 * p.gamma);
  f.lam_down = cplx(p.delta - 0.5 * p.chi, -0.5 * p.gamma);
  f.chi = p.chi;
  f.sqrt_gamma = std::sqrt(p.gamma);
  f.u_prefactor = std::pow(p.bandwidth * p.bandwidth / (2.0 * kPi), 0.25);
  f.u_width = 0.25 * p.bandwidth * p.bandwidth;
  f.t0 = p.t0;
  return f;
}

void check_scattered(const Vec3& y) {
  const double m = std::max(std::abs(y(1)), std::abs(y(2)));
  if (m >= kCavityEmpty) {
    std::ostringstream os;
    os << "evolve_effective_eoms: cavity amplitude " << m
       << " has not decayed below 1e-4 by the end of the window";
    fail(ErrorKind::incomplete_scattering, os.str());
  }
}

}  // namespace

DispersiveZParams DispersiveZParams::on_rule(double chi, double gamma, double bandwidth_ratio) {
  DispersiveZParams p;
  p.chi = chi;
  p.gamma = gamma;
  p.delta = 0.5 * chi;
  p.bandwidth = bandwidth_ratio * gamma;
  p.t0 = 3.0 / p.bandwidth;
  return p;
}

void DispersiveZParams::validate() const {
  require(gamma > 0.0 && std::isfinite(gamma), ErrorKind::invalid_parameter,
          "DispersiveZParams: gamma must be positive");
  require(bandwidth > 0.0 && std::isfinite(bandwidth), ErrorKind::invalid_parameter,
          "DispersiveZParams: bandwidth must be positive");
  require(std::isfinite(chi) && std::isfinite(delta) && std::isfinite(t0),
          ErrorKind::invalid_parameter, "DispersiveZParams: non-finite parameter");
}

double default_step(const DispersiveZParams& p) {
  const double lam = std::max(std::abs(cplx(p.delta + 0.5 * p.chi, -0.5 * p.gamma)),
                              std::abs(cplx(p.delta - 0.5 * p.chi, -0.5 * p.gamma)));
  return std::min({0.05 / p.gamma, 0.1 / p.bandwidth, 0.5 / lam});
}

std::vector<double> CoherenceTrajectory::phases() const {
  std::vector<double> out(sigma_minus.size(), 0.0);
  if (std::abs(initial_coherence) == 0.0) return out;
  double prev = 0.0;
  for (std::size_t i = 0; i < sigma_minus.size(); ++i) {
    const double raw = -std::arg(sigma_minus[i] / initial_coherence);
    double unwrapped = raw + 2.0 * kPi * std::round((prev - raw) / (2.0 * kPi));
    out[i] = unwrapped;
    prev = unwrapped;
  }
  return out;
}

std::vector<double> CoherenceTrajectory::magnitudes() const {
  std::vector<double> out(sigma_minus.size());
  std::transform(sigma_minus.begin(), sigma_minus.end(), out.begin(),
                 [](cplx s) { return std::abs(s); });
  return out;
}

CoherenceTrajectory evolve_effective_eoms(const DispersiveZParams& params,
                                          cplx initial_coherence, const EomOptions& options) {
  params.validate();
  const Window w = make_window(params, options);
  const EomRhs rhs = make_rhs(params);
  CoherenceTrajectory traj;
  traj.initial_coherence = initial_coherence;
  traj.t0 = params.t0;
  traj.gamma = params.gamma;
  const Vec3 y0(1.0, 0.0, 0.0);
  const Vec3 y = rk4_integrate(rhs, y0, w.grid, [&](double t, const Vec3& s) {
    traj.times.push_back(t);
    traj.sigma_minus.push_back(initial_coherence * s(0));
    traj.a_up.push_back(s(1));
    traj.a_down.push_back(s(2));
  });
  check_scattered(y);
  return traj;
}

cplx final_coherence(const DispersiveZParams& params, cplx initial_coherence,
                     const EomOptions& options) {
  params.validate();
  const Window w = make_window(params, options);
  const EomRhs rhs = make_rhs(params);
  const Vec3 y = rk4_integrate(rhs, Vec3(1.0, 0.0, 0.0), w.grid, [](double, const Vec3&) {});
  check_scattered(y);
  return initial_coherence * y(0);
}

double analytic_phase(double chi, double gamma) {
  require(gamma > 0.0, ErrorKind::invalid_parameter, "analytic_phase: gamma must be positive");
  return 2.0 * std::atan(2.0 * chi / gamma);
}

cplx long_time_coherence(double chi, double gamma, double delta) {
  require(gamma > 0.0, ErrorKind::invalid_parameter,
          "long_time_coherence: gamma must be positive");
  const cplx half(0.5 * chi, -0.5 * gamma);
  const cplx den = (delta + half) * (delta - half);
  require(std::abs(den) >= 1e-12, ErrorKind::degenerate_parameter,
          "long_time_coherence: denominator vanishes");
  return 1.0 - kI * chi * gamma / den;
}

double gate_fidelity(cplx rho01, cplx a, cplx b, double target_phi) {
  const double pa = std::norm(a);
  const double pb = std::norm(b);
  require(std::abs(pa + pb - 1.0) <= 1e-9, ErrorKind::invalid_state,
          "gate_fidelity: |a|^2 + |b|^2 must equal 1");
  return pa * pa + pb * pb +
         2.0 * (std::conj(a) * b * std::exp(-kI * target_phi) * rho01).real();
}

std::vector<double> ChiSweep::chis(double gamma) const {
  require(samples >= 1, ErrorKind::invalid_parameter, "ChiSweep: empty sweep");
  require(chi_max_over_gamma >= chi_min_over_gamma, ErrorKind::invalid_parameter,
          "ChiSweep: reversed range");
  std::vector<double> out(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double f = samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(samples - 1);
    out[i] = gamma * (chi_min_over_gamma + f * (chi_max_over_gamma - chi_min_over_gamma));
  }
  return out;
}

std::vector<cplx> sweep_final_coherence(std::span<const DispersiveZParams> points,
                                        cplx initial_coherence, Execution exec) {
  return map_indexed<cplx>(
      points.size(),
      [&](std::size_t i) { return final_coherence(points[i], initial_coherence); }, exec);
}

std::vector<ZGateReport> fidelity_curve(std::span<const double> targets, const ChiSweep& sweep,
                                        const RotationSetup& setup, Execution exec) {
  require(setup.gamma > 0.0 && setup.bandwidth_ratio > 0.0, ErrorKind::invalid_parameter,
          "fidelity_curve: gamma and bandwidth ratio must be positive");
  const std::vector<double> chis = sweep.chis(setup.gamma);
  std::vector<DispersiveZParams> points;
  points.reserve(chis.size());
  for (double chi : chis)
    points.push_back(DispersiveZParams::on_rule(chi, setup.gamma, setup.bandwidth_ratio));

  // <sigma_-> = rho10 starts at conj(a) b.
  const cplx s0 = std::conj(setup.a) * setup.b;
  const std::vector<cplx> finals = sweep_final_coherence(points, s0, exec);

  std::vector<ZGateReport> out;
  out.reserve(targets.size());
  for (double phi : targets) {
    std::size_t best = 0;
    double best_f = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < finals.size(); ++i) {
      const double f = gate_fidelity(std::conj(finals[i]), setup.a, setup.b, phi);
      if (f > best_f) {
        best_f = f;
        best = i;
      }
    }
    const CoherenceTrajectory traj = evolve_effective_eoms(points[best], s0);
    ZGateReport r;
    r.target_phi = phi;
    r.phi_final = traj.phases().back();
    r.coherence_final = std::abs(finals[best]);
    r.fidelity = best_f;
    r.chi_used = chis[best];
    r.settle_time = steady_state_time(traj, setup.settle_tol);
    out.push_back(r);
  }
  return out;
}

ZGateReport optimize_rotation(double target_phi, const ChiSweep& sweep,
                              const RotationSetup& setup, Execution exec) {
  const double t[] = {target_phi};
  return fidelity_curve(t, sweep, setup, exec).front();
}

double steady_state_time(const CoherenceTrajectory& traj, double tol) {
  require(traj.size() >= 2, ErrorKind::insufficient_data,
          "steady_state_time: trajectory has fewer than two samples");
  require(tol > 0.0, ErrorKind::invalid_parameter, "steady_state_time: tol must be positive");
  require(traj.times.back() - traj.t0 >= kMinWindowAfter / traj.gamma * (1.0 - 1e-12),
          ErrorKind::invalid_parameter,
          "steady_state_time: trajectory must extend 300/gamma past the pulse center");
  const std::vector<double> ph = traj.phases();
  const std::vector<double> mag = traj.magnitudes();
  const std::size_t n = traj.size();
  double ph_lo = ph[n - 1], ph_hi = ph[n - 1];
  double mg_lo = mag[n - 1], mg_hi = mag[n - 1];
  std::size_t first = n - 1;
  for (std::size_t i = n; i-- > 0;) {
    ph_lo = std::min(ph_lo, ph[i]);
    ph_hi = std::max(ph_hi, ph[i]);
    mg_lo = std::min(mg_lo, mag[i]);
    mg_hi = std::max(mg_hi, mag[i]);
    if (ph_hi - ph_lo >= tol || mg_hi - mg_lo >= tol) break;
    first = i;
  }
  const double settle = traj.times[first];
  if (traj.times.back() - settle < kSettledTail / traj.gamma) {
    fail(ErrorKind::no_steady_state,
         "steady_state_time: coherence has not settled for 50/gamma before the window ends");
  }
  return settle;
}

}  // namespace aqg::zgate
