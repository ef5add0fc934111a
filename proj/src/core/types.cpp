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

#include "aqg/core/types.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "aqg/core/operators.hpp"

namespace aqg {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kStateTol = 1e-9;

void require_square(const Mat& m, const char* what) {
  require(m.rows() == m.cols() && m.rows() > 0, ErrorKind::invalid_model,
          std::string(what) + ": matrix must be square and non-empty");
}

}  // namespace

Operator::Operator(Mat m) : m_(std::move(m)) {
  require_square(m_, "Operator");
  hermitian_ = ops::is_hermitian(m_, kHermitianTol);
}

Operator Operator::hermitian(Mat m) {
  require_square(m, "Operator::hermitian");
  require(ops::is_hermitian(m, kHermitianTol), ErrorKind::invalid_model,
          "Operator::hermitian: matrix is not Hermitian within 1e-12");
  Operator op;
  op.m_ = std::move(m);
  op.hermitian_ = true;
  return op;
}

Operator Operator::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator::hermitian(Mat::Zero(n, n));
}

Operator Operator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator::hermitian(Mat::Identity(n, n));
}

Operator Operator::adjoint() const { return Operator(Mat(m_.adjoint())); }

Operator operator+(const Operator& a, const Operator& b) {
  require(a.dim() == b.dim(), ErrorKind::invalid_model, "Operator +: dimension mismatch");
  return Operator(Mat(a.matrix() + b.matrix()));
}

Operator operator-(const Operator& a, const Operator& b) {
  require(a.dim() == b.dim(), ErrorKind::invalid_model, "Operator -: dimension mismatch");
  return Operator(Mat(a.matrix() - b.matrix()));
}

Operator operator*(const Operator& a, const Operator& b) {
  require(a.dim() == b.dim(), ErrorKind::invalid_model, "Operator *: dimension mismatch");
  return Operator(Mat(a.matrix() * b.matrix()));
}

Operator operator*(cplx s, const Operator& a) { return Operator(Mat(s * a.matrix())); }
Operator operator*(double s, const Operator& a) { return Operator(Mat(s * a.matrix())); }

StateVector::StateVector(Ket amplitudes) : v_(std::move(amplitudes)) {
  require(v_.size() > 0, ErrorKind::invalid_state, "StateVector: empty");
  const double n2 = v_.squaredNorm();
  if (std::abs(n2 - 1.0) > kStateTol) {
    std::ostringstream os;
    os << "StateVector: squared norm " << n2 << " differs from 1 by more than 1e-9";
    fail(ErrorKind::invalid_state, os.str());
  }
}

StateVector StateVector::normalized(Ket amplitudes) {
  const double n = amplitudes.norm();
  require(n > 0.0 && std::isfinite(n), ErrorKind::invalid_state,
          "StateVector::normalized: zero or non-finite vector");
  return StateVector(Ket(amplitudes / n));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  require(index < dim, ErrorKind::invalid_state, "StateVector::basis: index out of range");
  Ket v = Ket::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

DensityOperator::DensityOperator(Mat rho) : rho_(std::move(rho)) {
  require(rho_.rows() == rho_.cols() && rho_.rows() > 0, ErrorKind::invalid_state,
          "DensityOperator: matrix must be square and non-empty");
  require(ops::is_hermitian(rho_, kStateTol), ErrorKind::invalid_state,
          "DensityOperator: not Hermitian within 1e-9");
  require(std::abs(trace() - 1.0) <= kStateTol, ErrorKind::invalid_state,
          "DensityOperator: trace differs from 1 by more than 1e-9");
  require(min_eigenvalue() >= -kStateTol, ErrorKind::invalid_state,
          "DensityOperator: negative eigenvalue below -1e-9");
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
  return DensityOperator::unchecked(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator DensityOperator::unchecked(Mat rho) {
  DensityOperator d;
  d.rho_ = std::move(rho);
  return d;
}

double DensityOperator::min_eigenvalue() const {
  const Mat herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

cplx DensityOperator::expectation(const Operator& op) const {
  return (rho_ * op.matrix()).trace();
}

LindbladModel::LindbladModel(Operator hamiltonian, std::vector<Channel> channels)
    : h_(std::move(hamiltonian)), channels_(std::move(channels)) {
  require(h_.dim() > 0, ErrorKind::invalid_model, "LindbladModel: empty Hamiltonian");
  require(h_.is_hermitian(), ErrorKind::invalid_model,
          "LindbladModel: Hamiltonian is not Hermitian");
  for (const auto& ch : channels_) {
    require(ch.rate >= 0.0 && std::isfinite(ch.rate), ErrorKind::invalid_model,
            "LindbladModel: channel '" + ch.name + "' has a negative or non-finite rate");
    require(ch.jump.dim() == h_.dim(), ErrorKind::invalid_model,
            "LindbladModel: channel '" + ch.name + "' dimension mismatch");
  }
}

Mat LindbladModel::effective_hamiltonian() const {
  Mat heff = h_.matrix();
  for (const auto& ch : channels_) {
    if (ch.rate == 0.0) continue;
    heff -= (0.5 * ch.rate) * kI * (ch.jump.matrix().adjoint() * ch.jump.matrix());
  }
  return heff;
}

PulseEnvelope::PulseEnvelope(Rule rule, double t_start, double t_end)
    : rule_(std::move(rule)), t_start_(t_start), t_end_(t_end) {
  require(t_end_ >= t_start_, ErrorKind::invalid_parameter,
          "PulseEnvelope: support window is reversed");
}

PulseEnvelope gaussian_envelope(double bandwidth, double center) {
  require(bandwidth > 0.0 && std::isfinite(bandwidth), ErrorKind::invalid_parameter,
          "gaussian_envelope: bandwidth must be positive");
  const double prefactor = std::pow(bandwidth * bandwidth / (2.0 * kPi), 0.25);
  const double a = 0.25 * bandwidth * bandwidth;
  return PulseEnvelope(
      [=](double t) {
        const double s = t - center;
        return cplx(prefactor * std::exp(-a * s * s), 0.0);
      },
      center - 8.0 / bandwidth, center + 8.0 / bandwidth);
}

std::size_t TimeGrid::steps() const {
  const double span = (t_end - t_start) / step;
  auto n = static_cast<std::size_t>(std::ceil(span - 1e-9));
  return n == 0 ? 1 : n;
}

void TimeGrid::validate() const {
  require(std::isfinite(t_start) && std::isfinite(t_end) && t_end > t_start,
          ErrorKind::invalid_parameter, "TimeGrid: t_end must exceed t_start");
  require(step > 0.0 && std::isfinite(step), ErrorKind::invalid_parameter,
          "TimeGrid: step must be positive");
  require(store_every >= 1, ErrorKind::invalid_parameter,
          "TimeGrid: store_every must be at least 1");
}

}  // namespace aqg
