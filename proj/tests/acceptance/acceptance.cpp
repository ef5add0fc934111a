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

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "aqg/autonomous_clock.hpp"
#include "aqg/core/operators.hpp"
#include "aqg/dispersive_zgate.hpp"
#include "aqg/ion_gates.hpp"
#include "aqg/rydberg_gates.hpp"
#include "aqg/xy_gate.hpp"

using namespace aqg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome phase_formula() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> log_gamma(-2.0, 2.0), log_ratio(-1.3, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double gamma = std::pow(10.0, log_gamma(rng));
    const double chi = std::pow(10.0, log_ratio(rng)) * gamma;
    const auto p = zgate::DispersiveZParams::on_rule(chi, gamma, 0.03);
    const double phase = -std::arg(zgate::final_coherence(p, 0.5));
    worst = std::max(worst, ops::angle_distance(phase, zgate::analytic_phase(chi, gamma)));
  }
  return {worst < 0.02, fmt("20 random (chi, gamma), max |phase - 2 atan(2 chi/gamma)| = %.2e rad", worst)};
}

zgate::ZGateReport half_pi_report() {
  static const zgate::ZGateReport r = zgate::optimize_rotation(kPi / 2.0, zgate::ChiSweep{});
  return r;
}

Outcome fidelity_benchmark() {
  const auto r = half_pi_report();
  const bool ok = std::abs(r.fidelity - 0.9989) <= 0.002 && std::abs(r.coherence_final - 0.4997) <= 0.001;
  return {ok, fmt("F = %.6f (0.9989 +- 0.002), coherence = %.6f (0.4997 +- 0.001), chi = %.2f gamma",
                  r.fidelity, r.coherence_final, r.chi_used)};
}

Outcome settling_time() {
  const auto r = half_pi_report();
  const double si = r.settle_time * 10e-9;  // 1/gamma = 10 ns
  const bool ok = r.settle_time >= 100.0 && r.settle_time <= 300.0 && si >= 1e-6 && si <= 3e-6;
  return {ok, fmt("settle = %.1f/gamma, %.3f us at 1/gamma = 10 ns", r.settle_time, si * 1e6)};
}

Outcome fidelity_shape() {
  std::vector<double> targets;
  for (int k = 0; k <= 16; ++k) targets.push_back(kPi * k / 16.0);
  double min_in = 1.0;
  for (const auto& r : zgate::fidelity_curve(targets, zgate::ChiSweep{})) min_in = std::min(min_in, r.fidelity);
  zgate::RotationSetup detuned;
  detuned.bandwidth_ratio = 0.5;
  const auto curve = zgate::fidelity_curve(targets, zgate::ChiSweep{}, detuned);
  bool monotone = true;
  for (std::size_t i = 1; i < curve.size(); ++i) monotone = monotone && curve[i].fidelity < curve[i - 1].fidelity;
  return {min_in >= 0.99 && monotone,
          fmt("in-regime min F = %.5f over 17 angles; bandwidth 0.5 gamma: F from %.5f to %.5f, %s",
              min_in, curve.front().fidelity, curve.back().fidelity,
              monotone ? "strictly decreasing" : "NOT monotone")};
}

Outcome blockade() {
  rydberg::BlockadeParams hard;
  hard.hard_blockade = true;
  const auto t = rydberg::blockade_cz(hard, StateVector::basis(9, 0)).table;
  const double expected[4] = {0.0, kPi, kPi, kPi};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, ops::angle_distance(t.phase[i], expected[i]));
  double prev = 0.0;
  bool monotone = true;
  std::string fs;
  for (double v : {5.0, 10.0, 20.0, 50.0, 100.0}) {
    rydberg::BlockadeParams p;
    p.blockade = v;
    const double f = rydberg::blockade_cz_fidelity(p);
    monotone = monotone && f > prev;
    prev = f;
    fs += fmt(" %.5f", f);
  }
  return {worst < 1e-6 && monotone,
          fmt("hard-blockade phase error %.1e; F(V/Omega = 5..100) =%s", worst, fs.c_str())};
}

Outcome levine_pichler() {
  const double ratio = 0.377;
  const double xi = rydberg::solve_xi(1.0, ratio);
  const auto t = rydberg::levine_pichler(rydberg::LevinePichlerParams::from_rates(1.0, ratio, xi));
  const double rabi = rydberg::back_solve_rabi(195e-9, ratio);
  const double tau = 2.0 * kPi / std::sqrt(ratio * ratio * rabi * rabi + 2.0 * rabi * rabi);
  const double cp = t.conditional_phase();
  const bool ok = ops::angle_distance(cp, kPi) <= 0.02 && t.max_leakage() < 1e-3 &&
                  std::abs(tau - 195e-9) < 1e-12;
  return {ok, fmt("xi = %.5f, conditional phase = %.5f, leakage = %.1e; back-solved Omega/2pi = %.4f MHz "
                  "gives tau = %.2f ns",
                  xi, cp, t.max_leakage(), rabi / (2.0 * kPi) * 1e-6, tau * 1e9)};
}

Outcome ultrafast() {
  const double j = 2.0 * kPi * 250e6;
  const auto a = rydberg::ultrafast_phase(j, kPi / j);
  const double err = std::abs(a.dd - cplx(-1.0, 0.0));
  return {err < 1e-9, fmt("|c_dd(pi/J) + 1| = %.1e", err)};
}

Outcome molmer_sorensen() {
  const auto r = ion::ms_evolve(ion::MSParams{}, StateVector::basis(4, 0));
  const auto& f = r.final();
  return {f.fidelity_to_target > 0.99 && f.mean_phonons < 1e-3,
          fmt("t = %.1f us, F = %.10f, <n> = %.1e (n_max = 10)", f.t, f.fidelity_to_target, f.mean_phonons)};
}

Outcome arithmetic() {
  const double d1 = ion::slide_diameter(3.7, 7.5e-6), d2 = ion::slide_diameter(0.5, 50e-6);
  const auto ring = ion::ring_schedule(ion::RingParams{});
  const double nth = xy::thermal_photon_number_si(6e9, 0.035).n_th;
  const bool ok = std::abs(d1 - 27.75e-6) < 1e-15 && std::abs(d2 - 25e-6) < 1e-15 &&
                  std::abs(ring.passes - 5.0) < 1e-12 && std::abs(ring.theta - 1.46) < 5e-3 && nth <= 1e-3;
  return {ok, fmt("slide %.2f um, %.2f um; ring passes %.0f, theta %.4f rad; n_th = %.3e", d1 * 1e6, d2 * 1e6,
                  ring.passes, ring.theta, nth)};
}

Outcome autonomous_clock() {
  const auto model = clock::build_clock_model(clock::ClockParams{});
  const double flux = clock::steady_state_flux(model);
  clock::TickOptions opt;
  opt.start = clock::ClockStart::steady_state;
  const auto recs = clock::simulate_ensemble(model, 20.0, 10000, 1, opt);
  const double rate = clock::ensemble_tick_rate(recs);
  const double rel = rate / flux - 1.0;
  const auto m = clock::metastable_margin(4e-6, 250e-9);
  return {std::abs(rel) < 0.03 && std::abs(m.ratio - 16.0) < 1e-12 && m.pass,
          fmt("10^4 trajectories: jump rate %.5f vs Lindblad flux %.5f (%+.2f%%); margin %.1f %s", rate, flux,
              rel * 100.0, m.ratio, m.pass ? "pass" : "fail")};
}

Outcome xy_gate() {
  xy::XYParams p;
  p.gamma_c = 0.0;
  double worst = 0.0;
  for (double t : {0.01, 0.025, 0.05, 0.1}) {
    const Mat diff = xy::single_photon_propagator(p, t) - xy::ideal_xy(2.0 * p.g_ab * t);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  xy::XYParams d = p;
  d.chi = d.resonant_chi() + 10.0 * d.g_ab;
  xy::XYOptions opt;
  opt.duration = 2.0;
  opt.samples = 4000;
  const auto r = xy::simulate_tick_gate(d, StateVector::basis(4, 1), opt);
  double peak = 0.0;
  for (const auto& s : r.samples) peak = std::max(peak, s.p10);
  return {worst < 1e-8 && peak < 0.01,
          fmt("max |U - U_XY(2gt)| = %.1e; transfer detuned by 20 g peaks at %.4f", worst, peak)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"phase formula", phase_formula},
      {"fidelity benchmark", fidelity_benchmark},
      {"settling time", settling_time},
      {"fidelity versus angle", fidelity_shape},
      {"blockade CZ", blockade},
      {"Levine-Pichler", levine_pichler},
      {"ultrafast exchange", ultrafast},
      {"Molmer-Sorensen", molmer_sorensen},
      {"feasibility arithmetic", arithmetic},
      {"autonomous clock", autonomous_clock},
      {"XY gate", xy_gate},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
