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

#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "aqg/core/operators.hpp"
#include "aqg/dispersive_zgate.hpp"

using namespace aqg;
using namespace aqg::zgate;

namespace {

// Independent oracles: the cavity amplitudes solve a linear ODE driven by
// the photon, so they are convolutions of the envelope with e^{-i lambda t}.

double envelope(double w, double t0, double t) {
  return std::pow(w * w / (2.0 * kPi), 0.25) * std::exp(-0.25 * w * w * (t - t0) * (t - t0));
}

cplx lambda_up(const DispersiveZParams& p) { return p.delta + 0.5 * (p.chi - kI * p.gamma); }
cplx lambda_down(const DispersiveZParams& p) { return p.delta - 0.5 * (p.chi + kI * p.gamma); }

template <class F>
cplx integrate_complex(F f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  const double re = gauss_kronrod<double, 61>::integrate(
      [&](double x) { return f(x).real(); }, a, b, 15, 1e-12);
  const double im = gauss_kronrod<double, 61>::integrate(
      [&](double x) { return f(x).imag(); }, a, b, 15, 1e-12);
  return {re, im};
}

/// a(t) = -sqrt(gamma) int_{-inf}^t e^{-i lambda (t - s)} u(s) ds
cplx amplitude_oracle(const DispersiveZParams& p, cplx lambda, double t) {
  const double lo = p.t0 - 10.0 / p.bandwidth;
  if (t <= lo) return 0.0;
  return -std::sqrt(p.gamma) *
         integrate_complex(
             [&](double s) { return std::exp(-kI * lambda * (t - s)) * envelope(p.bandwidth, p.t0, s); },
             lo, t);
}

/// s(+inf) / s(-inf) = 1 - i chi gamma int dw/2pi |u(w)|^2 / ((l_up - w)(conj(l_dn) - w))
cplx final_ratio_oracle(const DispersiveZParams& p) {
  const double w = p.bandwidth;
  const cplx lu = lambda_up(p), ld = std::conj(lambda_down(p));
  const cplx integral = integrate_complex(
      [&](double om) {
        const double spectrum = std::sqrt(8.0 * kPi) / w * std::exp(-2.0 * om * om / (w * w));
        return spectrum / ((lu - om) * (ld - om)) / (2.0 * kPi);
      },
      -12.0 * w, 12.0 * w);
  return 1.0 - kI * p.chi * p.gamma * integral;
}

/// <psi|rho|psi> with the populations preserved and psi = a|0> + b e^{-i phi}|1>.
double fidelity_oracle(cplx rho01, cplx a, cplx b, double phi) {
  Mat rho(2, 2);
  rho << std::norm(a), rho01, std::conj(rho01), std::norm(b);
  Ket psi(2);
  psi << a, b * std::exp(-kI * phi);
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

}  // namespace

TEST(DispersiveZ, CavityAmplitudesMatchConvolution) {
  const auto p = DispersiveZParams::on_rule(1.7, 1.0);
  const auto traj = evolve_effective_eoms(p, 0.5);
  for (double frac : {0.3, 0.5, 0.62, 0.8}) {
    const std::size_t i = static_cast<std::size_t>(frac * static_cast<double>(traj.size()));
    EXPECT_LT(std::abs(traj.a_up[i] - amplitude_oracle(p, lambda_up(p), traj.times[i])), 1e-7);
    EXPECT_LT(std::abs(traj.a_down[i] - amplitude_oracle(p, lambda_down(p), traj.times[i])), 1e-7);
  }
}

TEST(DispersiveZ, FinalCoherenceMatchesSpectralOracle) {
  for (double chi : {0.3, 0.5, 2.0, 7.5}) {
    for (double ratio : {0.03, 0.5}) {
      const auto p = DispersiveZParams::on_rule(chi, 1.0, ratio);
      const cplx s = final_coherence(p, 0.5);
      // The drive is cut at +-8/W, where the envelope is e^-16 of its peak.
      EXPECT_LT(std::abs(s / 0.5 - final_ratio_oracle(p)), 2e-6) << chi << " " << ratio;
    }
  }
}

TEST(DispersiveZ, GateFidelityMatchesDensityMatrixOverlap) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    cplx a(u(rng), u(rng)), b(u(rng), u(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    const cplx rho01 = 0.3 * cplx(u(rng), u(rng));
    const double phi = 3.0 * u(rng);
    EXPECT_NEAR(gate_fidelity(rho01, a, b, phi), fidelity_oracle(rho01, a, b, phi), 1e-12);
  }
}

TEST(DispersiveZ, PhaseFormulaForRandomCouplings) {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> log_gamma(-1.0, 1.0), ratio(0.05, 10.0);
  for (int i = 0; i < 10; ++i) {
    const double gamma = std::pow(10.0, log_gamma(rng));
    const double chi = ratio(rng) * gamma;
    const auto p = DispersiveZParams::on_rule(chi, gamma);
    const double phase = -std::arg(final_coherence(p, 0.5));
    EXPECT_LT(ops::angle_distance(phase, analytic_phase(chi, gamma)), 0.02) << chi << " " << gamma;
  }
}

TEST(DispersiveZ, NarrowBandLimitMatchesLongTimeCoherence) {
  const auto p = DispersiveZParams::on_rule(0.8, 1.0, 0.005);
  EXPECT_LT(std::abs(final_coherence(p, 1.0) - long_time_coherence(0.8, 1.0, 0.4)), 2e-3);
  // On the delta = chi/2 rule the limit has unit modulus.
  EXPECT_NEAR(std::abs(long_time_coherence(3.0, 1.0, 1.5)), 1.0, 1e-12);
}

TEST(DispersiveZ, CoherenceNeverGrows) {
  const auto p = DispersiveZParams::on_rule(2.0, 1.0, 0.5);
  const auto traj = evolve_effective_eoms(p, 0.5);
  for (double m : traj.magnitudes()) EXPECT_LE(m, 0.5 + 1e-12);
}

TEST(DispersiveZ, PhaseIsOddInChi) {
  const auto a = DispersiveZParams::on_rule(1.2, 1.0);
  const auto b = DispersiveZParams::on_rule(-1.2, 1.0);
  EXPECT_NEAR(std::arg(final_coherence(a, 0.5)), -std::arg(final_coherence(b, 0.5)), 1e-10);
}

TEST(DispersiveZ, UnitsAreScaleFree) {
  const auto a = DispersiveZParams::on_rule(1.5, 1.0);
  const auto b = DispersiveZParams::on_rule(1.5e8, 1e8);
  EXPECT_LT(std::abs(final_coherence(a, 0.5) - final_coherence(b, 0.5)), 1e-9);
}

TEST(DispersiveZ, SweepSerialEqualsParallel) {
  std::vector<DispersiveZParams> pts;
  for (double chi : ChiSweep{0.0, 30.0, 31}.chis(1.0)) pts.push_back(DispersiveZParams::on_rule(chi, 1.0));
  EXPECT_EQ(sweep_final_coherence(pts, 0.5, Execution::serial),
            sweep_final_coherence(pts, 0.5, Execution::parallel));
}

TEST(DispersiveZ, OptimizedRotationMatchesOracleSweep) {
  const ChiSweep sweep;
  const auto report = optimize_rotation(kPi / 2.0, sweep);
  const cplx a(std::sqrt(0.5), 0.0);
  double best = -1.0, best_chi = 0.0;
  for (double chi : sweep.chis(1.0)) {
    const auto p = DispersiveZParams::on_rule(chi, 1.0);
    const cplx rho01 = std::conj(0.5 * final_ratio_oracle(p));
    const double f = fidelity_oracle(rho01, a, a, kPi / 2.0);
    if (f > best) {
      best = f;
      best_chi = chi;
    }
  }
  EXPECT_NEAR(report.fidelity, best, 1e-6);
  EXPECT_DOUBLE_EQ(report.chi_used, best_chi);
  EXPECT_NEAR(report.fidelity, 0.999776, 5e-6);
  EXPECT_NEAR(report.coherence_final, 0.499776, 5e-6);
  EXPECT_GE(report.settle_time, 100.0);
  EXPECT_LE(report.settle_time, 300.0);
}

TEST(DispersiveZ, InRegimeCurveStaysHigh) {
  std::vector<double> targets;
  for (int k = 0; k <= 8; ++k) targets.push_back(kPi * k / 8.0);
  for (const auto& r : fidelity_curve(targets, ChiSweep{})) EXPECT_GE(r.fidelity, 0.99);
}

TEST(DispersiveZ, DetunedRegimeDegradesWithAngle) {
  std::vector<double> targets;
  for (int k = 0; k <= 8; ++k) targets.push_back(kPi * k / 8.0);
  RotationSetup setup;
  setup.bandwidth_ratio = 0.5;
  const auto curve = fidelity_curve(targets, ChiSweep{}, setup);
  for (std::size_t i = 1; i < curve.size(); ++i)
    EXPECT_LT(curve[i].fidelity, curve[i - 1].fidelity) << "phi = " << targets[i];
}

TEST(DispersiveZ, ShortWindowIsIncompleteScattering) {
  const auto p = DispersiveZParams::on_rule(1.0, 1.0);
  EomOptions opt;
  opt.window_after = 2.0;
  try {
    evolve_effective_eoms(p, 0.5, opt);
    FAIL() << "expected incomplete scattering";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::incomplete_scattering);
  }
}

TEST(DispersiveZ, InvalidParametersRejected) {
  DispersiveZParams p;
  p.gamma = -1.0;
  EXPECT_THROW(final_coherence(p, 0.5), Error);
  p = DispersiveZParams{};
  p.bandwidth = 0.0;
  EXPECT_THROW(final_coherence(p, 0.5), Error);
}
