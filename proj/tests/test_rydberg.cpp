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

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "aqg/core/operators.hpp"
#include "aqg/rydberg_gates.hpp"

using namespace aqg;
using namespace aqg::rydberg;

namespace {

// Brute-force oracle: RK4 on every column of the 9-level propagator, with
// the Hamiltonian written out element by element.
Mat rk4_propagator(const Mat& h, double t, double dt) {
  const int n = static_cast<int>(std::ceil(t / dt));
  const double step = t / n;
  Mat u = Mat::Identity(h.rows(), h.cols());
  const Mat a = -kI * h;
  for (int i = 0; i < n; ++i) {
    const Mat k1 = a * u;
    const Mat k2 = a * (u + 0.5 * step * k1);
    const Mat k3 = a * (u + 0.5 * step * k2);
    const Mat k4 = a * (u + step * k3);
    u += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

std::size_t idx(std::size_t c, std::size_t t) { return 3 * c + t; }

Mat two_atom_pulse(double rabi, double v, bool control, cplx phase = 1.0, bool drive_both = false,
                   double detuning = 0.0, bool hard = false) {
  Mat h = Mat::Zero(9, 9);
  for (std::size_t other = 0; other < 3; ++other) {
    if (control || drive_both) {
      h(idx(2, other), idx(1, other)) += 0.5 * rabi * std::conj(phase);
      h(idx(1, other), idx(2, other)) += 0.5 * rabi * phase;
    }
    if (!control || drive_both) {
      h(idx(other, 2), idx(other, 1)) += 0.5 * rabi * std::conj(phase);
      h(idx(other, 1), idx(other, 2)) += 0.5 * rabi * phase;
    }
  }
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t t = 0; t < 3; ++t)
      h(idx(c, t), idx(c, t)) -= detuning * ((c == 2) + (t == 2));
  if (hard) {
    h.row(idx(2, 2)).setZero();
    h.col(idx(2, 2)).setZero();
  } else {
    h(idx(2, 2), idx(2, 2)) += v;
  }
  return h;
}

Mat comp_block(const Mat& u) {
  const std::size_t c[4] = {idx(0, 0), idx(0, 1), idx(1, 0), idx(1, 1)};
  Mat b(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = u(c[i], c[j]);
  return b;
}

double avg_fidelity(const Mat& ideal, const Mat& actual) {
  const Mat m = ideal.adjoint() * actual;
  return (std::norm(m.trace()) + (m.adjoint() * m).trace().real()) / 20.0;
}

double oracle_blockade_fidelity(double v_over_rabi) {
  const double dt = 0.02 / std::max(1.0, v_over_rabi);
  const Mat u = rk4_propagator(two_atom_pulse(1.0, v_over_rabi, true), kPi, dt) *
                rk4_propagator(two_atom_pulse(1.0, v_over_rabi, false), 2.0 * kPi, dt) *
                rk4_propagator(two_atom_pulse(1.0, v_over_rabi, true), kPi, dt);
  Mat ideal = Mat::Zero(4, 4);
  ideal.diagonal() << 1.0, -1.0, -1.0, -1.0;
  return avg_fidelity(ideal, comp_block(u));
}

}  // namespace

TEST(Blockade, HardBlockadePhaseTable) {
  BlockadeParams p;
  p.hard_blockade = true;
  const auto t = blockade_cz(p, StateVector::basis(9, 0)).table;
  const double expected[4] = {0.0, kPi, kPi, kPi};
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT(ops::angle_distance(t.phase[i], expected[i]), 1e-6) << i;
    EXPECT_LT(t.leakage[i], 1e-12);
  }
  EXPECT_NEAR(blockade_cz_fidelity(p), 1.0, 1e-12);
}

TEST(Blockade, SuperpositionsGetTheIdealUpToGlobalPhase) {
  BlockadeParams p;
  p.hard_blockade = true;
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n(0.0, 1.0);
  const std::size_t comp[4] = {idx(0, 0), idx(0, 1), idx(1, 0), idx(1, 1)};
  const Mat ideal = blockade_ideal();
  for (int trial = 0; trial < 20; ++trial) {
    Ket in = Ket::Zero(9), c(4);
    for (int k = 0; k < 4; ++k) {
      c(k) = cplx(n(rng), n(rng));
    }
    c.normalize();
    for (int k = 0; k < 4; ++k) in(comp[k]) = c(k);
    const auto res = blockade_cz(p, StateVector(in));
    Ket expect = Ket::Zero(9);
    const Ket out4 = ideal * c;
    for (int k = 0; k < 4; ++k) expect(comp[k]) = out4(k);
    EXPECT_GT(std::norm(expect.dot(res.state.amplitudes())), 1.0 - 1e-6);
  }
}

TEST(Blockade, FiniteShiftMatchesBruteForceIntegration) {
  for (double v : {5.0, 20.0}) {
    BlockadeParams p;
    p.blockade = v;
    EXPECT_NEAR(blockade_cz_fidelity(p), oracle_blockade_fidelity(v), 1e-7) << v;
  }
}

TEST(Blockade, FidelityGrowsWithShift) {
  double prev = 0.0;
  for (double v : {5.0, 10.0, 20.0, 50.0, 100.0}) {
    BlockadeParams p;
    p.blockade = v;
    const double f = blockade_cz_fidelity(p);
    EXPECT_GT(f, prev) << v;
    prev = f;
  }
  BlockadeParams p;
  p.blockade = 20.0;
  EXPECT_NEAR(blockade_cz_fidelity(p), 0.99907, 1e-5);
}

TEST(Blockade, RejectsBadParameters) {
  BlockadeParams p;
  p.rabi = 0.0;
  EXPECT_THROW(blockade_unitary(p), Error);
  EXPECT_THROW(blockade_cz(BlockadeParams{}, StateVector::basis(4, 0)), Error);
}

TEST(LevinePichler, ControlledZAtSolvedPhase) {
  const double xi = solve_xi(1.0, 0.377);
  const auto t = levine_pichler(LevinePichlerParams::from_rates(1.0, 0.377, xi));
  EXPECT_LT(ops::angle_distance(t.conditional_phase(), kPi), 0.02);
  EXPECT_LT(t.max_leakage(), 1e-3);
  EXPECT_NEAR(t.phase[0], 0.0, 0.0);
}

TEST(LevinePichler, SectorReductionMatchesTwoAtomModel) {
  const double d = 0.377, xi = solve_xi(1.0, d);
  const auto lp = LevinePichlerParams::from_rates(1.0, d, xi);
  const Mat u1 = two_atom_pulse(1.0, 0.0, true, 1.0, true, d, true);
  const Mat u2 = two_atom_pulse(1.0, 0.0, true, std::exp(kI * xi), true, d, true);
  const Mat u = (-kI * lp.tau * u2).exp() * (-kI * lp.tau * u1).exp();
  const Mat b = comp_block(u);
  const auto t = levine_pichler(lp);
  for (int k = 1; k < 4; ++k) {
    EXPECT_LT(ops::angle_distance(std::arg(b(k, k)) - std::arg(b(0, 0)), t.phase[k]), 1e-10) << k;
    EXPECT_NEAR(1.0 - std::norm(b(k, k)), t.leakage[k], 1e-10) << k;
  }
}

TEST(LevinePichler, ScaleInvariance) {
  const double xi = solve_xi(1.0, 0.377);
  const auto a = levine_pichler(LevinePichlerParams::from_rates(1.0, 0.377, xi));
  for (double s : {0.01, 3.0, 2.0 * kPi * 3.5e6}) {
    const auto b = levine_pichler(LevinePichlerParams::from_rates(s, 0.377 * s, xi));
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(a.phase[k], b.phase[k], 1e-9) << s;
    EXPECT_NEAR(solve_xi(s, 0.377 * s), xi, 1e-6);
  }
}

TEST(LevinePichler, BackSolvedRabiReproducesPulseLength) {
  const double rabi = back_solve_rabi(195e-9, 0.377);
  EXPECT_NEAR(rabi / (2.0 * kPi), 3.5038e6, 1e3);
  EXPECT_NEAR(LevinePichlerParams::from_rates(rabi, 0.377 * rabi, 0.0).tau, 195e-9, 1e-18);
}

TEST(LevinePichler, LeakyPhaseThrows) {
  try {
    levine_pichler(LevinePichlerParams::from_rates(1.0, 0.377, 0.0));
    FAIL() << "expected incomplete return";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::incomplete_return);
  }
}

TEST(Ultrafast, HalfPeriodReturnsWithSignFlip) {
  const double j = 2.0 * kPi * 250e6;
  const auto a = ultrafast_phase(j, kPi / j);
  EXPECT_LT(std::abs(a.dd - cplx(-1.0, 0.0)), 1e-9);
  EXPECT_LT(std::abs(a.pf), 1e-9);
  const auto q = ultrafast_phase(j, 0.5 * kPi / j);
  EXPECT_LT(std::abs(q.dd), 1e-12);
  EXPECT_LT(std::abs(q.pf - cplx(0.0, -1.0)), 1e-12);
  const auto z = ultrafast_phase(j, 0.0);
  EXPECT_EQ(z.dd, cplx(1.0, 0.0));
}

TEST(Ultrafast, Unitarity) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 100; ++i) {
    const auto a = ultrafast_phase(0.7, u(rng));
    EXPECT_NEAR(std::norm(a.dd) + std::norm(a.pf), 1.0, 1e-14);
  }
  EXPECT_THROW(ultrafast_phase(0.0, 1.0), Error);
}

TEST(LaserTiming, DelayLineLength) {
  EXPECT_NEAR(clock_laser_distance(70e-9), 20.99, 5e-3);
  EXPECT_NEAR(clock_laser_distance(70e-9, 1.5), 13.99, 5e-3);
  EXPECT_EQ(clock_laser_distance(0.0), 0.0);
  EXPECT_THROW(clock_laser_distance(70e-9, 0.9), Error);
}
