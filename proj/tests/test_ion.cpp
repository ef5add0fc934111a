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

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "aqg/core/operators.hpp"
#include "aqg/ion_gates.hpp"

using namespace aqg;
using namespace aqg::ion;

namespace {

// Closed-form oracle for the bichromatic interaction: the phase-space loop
// of the mode returns at t = 2 pi / delta, leaving exp(-i 2 pi (g/delta)^2 Sy^2)
// on the spins, and the mode holds 8 (g/delta)^2 sin^2(delta t / 2) phonons
// when starting from |dd>.
Ket closure_state(double g_over_delta) {
  const Mat sy = ops::sigma_y(), id = Mat::Identity(2, 2);
  const Mat s = ops::kron(sy, id) + ops::kron(id, sy);
  const Mat u = (-kI * 2.0 * kPi * g_over_delta * g_over_delta * s * s).exp();
  return u.col(0);
}

double phonon_oracle(double g, double delta, double t) {
  const double s = std::sin(0.5 * delta * t);
  return 8.0 * (g / delta) * (g / delta) * s * s;
}

}  // namespace

TEST(MolmerSorensen, ReachesEntangledTargetAtClosure) {
  const MSParams p;
  const auto r = ms_evolve(p, StateVector::basis(4, 0));
  EXPECT_NEAR(r.final().t, 50.0, 1e-9);
  EXPECT_GT(r.final().fidelity_to_target, 0.99);
  EXPECT_NEAR(r.final().fidelity_to_target, 1.0, 1e-6);
  EXPECT_LT(r.final().mean_phonons, 1e-3);
  EXPECT_NEAR(r.final().motional_purity, 1.0, 1e-6);
}

TEST(MolmerSorensen, PhononsFollowClosedForm) {
  const MSParams p;
  const auto r = ms_evolve(p, StateVector::basis(4, 0));
  double peak = 0.0;
  for (const auto& s : r.samples) {
    EXPECT_NEAR(s.mean_phonons, phonon_oracle(p.coupling(), p.detuning, s.t), 1e-6) << s.t;
    peak = std::max(peak, s.mean_phonons);
  }
  EXPECT_NEAR(peak, 0.5, 1e-3);
}

TEST(MolmerSorensen, SpinStateMatchesOracleOffTheGateCondition) {
  MSParams p;
  p.rabi = 0.6 * p.detuning / p.lamb_dicke;  // g = 0.3 delta
  p.n_max = 16;
  const auto r = ms_evolve(p, StateVector::basis(4, 0));
  const Ket psi = closure_state(0.3);
  EXPECT_NEAR((psi.adjoint() * r.spin_state * psi)(0, 0).real(), 1.0, 1e-6);
}

TEST(MolmerSorensen, InsensitiveToInitialPhonons) {
  MSParams p;
  p.n_max = 14;
  const Ket target = ms_target();
  for (std::size_t n0 : {1u, 2u}) {
    const auto r = ms_evolve(p, StateVector::basis(4, 0), n0);
    EXPECT_GT((target.adjoint() * r.spin_state * target)(0, 0).real(), 0.9999) << n0;
  }
}

TEST(MolmerSorensen, TruncationConverged) {
  MSParams a, b;
  b.n_max = 20;
  const double fa = ms_evolve(a, StateVector::basis(4, 0)).final().fidelity_to_target;
  const double fb = ms_evolve(b, StateVector::basis(4, 0)).final().fidelity_to_target;
  EXPECT_NEAR(fa, fb, 1e-8);
}

TEST(MolmerSorensen, SmallFockSpaceThrowsTruncation) {
  MSParams p;
  p.n_max = 2;
  p.rabi = 8.0 * p.detuning / p.lamb_dicke;
  try {
    ms_evolve(p, StateVector::basis(4, 0));
    FAIL() << "expected truncation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::truncation);
  }
}

TEST(Slide, ExposureArithmetic) {
  EXPECT_NEAR(slide_diameter(3.7, 7.5e-6), 27.75e-6, 1e-15);
  EXPECT_NEAR(slide_diameter(0.5, 50e-6), 25e-6, 1e-15);
  EXPECT_NEAR(slide_exposure(3.7, 27.75e-6), 7.5e-6, 1e-15);
  EXPECT_NEAR(light_shift(2.0, 4.0), 0.5, 1e-15);
  EXPECT_THROW(slide_exposure(0.0, 1e-6), Error);
}

TEST(Ring, ScheduleGeometry) {
  const auto s = ring_schedule(RingParams{});
  EXPECT_NEAR(s.theta, 2.0 * std::asin(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(s.theta, 1.46, 5e-3);
  EXPECT_NEAR(s.passes, 5.0, 1e-12);
  EXPECT_NEAR(s.illuminated_fraction, s.theta / kPi, 1e-15);
  EXPECT_NEAR(s.pulse_area, kPi, 1e-12);
}

TEST(Ring, ChordWiderThanRingIsGeometryError) {
  RingParams p;
  p.chord = 7e-6;
  try {
    ring_schedule(p);
    FAIL() << "expected geometry error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::geometry);
  }
}

TEST(Ring, PulsedDriveTracksContinuousDrive) {
  RingParams p;
  p.decay_rate = 0.0;
  const auto r = ring_pulsed_rabi(p);
  EXPECT_NEAR(r.excited_population, 1.0, 1e-9);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);

  p.decay_rate = 2e3;
  const auto d = ring_pulsed_rabi(p);
  EXPECT_GT(d.fidelity, 0.999);
  EXPECT_LT(d.excited_population, 1.0);
}
