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

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aqg/core/error.hpp"

namespace aqg {

using cplx = std::complex<double>;
using Ket = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Square complex matrix with a validated hermiticity flag.
///
/// Construct through `Operator::hermitian` when the matrix is meant to be an
/// observable or Hamiltonian; the factory checks the claim to 1e-12.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Mat m);

  static Operator hermitian(Mat m);
  static Operator zero(std::size_t dim);
  static Operator identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Mat& matrix() const noexcept { return m_; }
  bool is_hermitian() const noexcept { return hermitian_; }
  Operator adjoint() const;

 private:
  Mat m_;
  bool hermitian_ = false;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(cplx s, const Operator& a);
Operator operator*(double s, const Operator& a);

/// Normalized pure state.
class StateVector {
 public:
  StateVector() = default;
  /// Throws invalid_state unless the norm is 1 within 1e-9.
  explicit StateVector(Ket amplitudes);

  /// Normalizes first; throws invalid_state on a zero vector.
  static StateVector normalized(Ket amplitudes);
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(v_.size()); }
  const Ket& amplitudes() const noexcept { return v_; }
  cplx operator[](std::size_t i) const { return v_(static_cast<Eigen::Index>(i)); }

 private:
  Ket v_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix (all to 1e-9).
class DensityOperator {
 public:
  DensityOperator() = default;
  explicit DensityOperator(Mat rho);

  static DensityOperator pure(const StateVector& psi);
  /// Wraps an integrator output without re-validating positivity.
  static DensityOperator unchecked(Mat rho);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  const Mat& matrix() const noexcept { return rho_; }
  double trace() const { return rho_.trace().real(); }
  double min_eigenvalue() const;
  double population(std::size_t i) const {
    return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  }
  cplx expectation(const Operator& op) const;

 private:
  Mat rho_;
};

struct Channel {
  Operator jump;
  double rate = 0.0;
  std::string name;
};

/// Hamiltonian plus Markovian collapse channels.
class LindbladModel {
 public:
  LindbladModel() = default;
  /// Throws invalid_model on a non-Hermitian Hamiltonian, a negative rate or
  /// a dimension mismatch.
  LindbladModel(Operator hamiltonian, std::vector<Channel> channels);

  std::size_t dim() const noexcept { return h_.dim(); }
  const Operator& hamiltonian() const noexcept { return h_; }
  const std::vector<Channel>& channels() const noexcept { return channels_; }

  /// H - (i/2) sum_k rate_k L_k^dag L_k
  Mat effective_hamiltonian() const;

 private:
  Operator h_;
  std::vector<Channel> channels_;
};

/// Complex drive amplitude with compact support; zero outside the window.
class PulseEnvelope {
 public:
  using Rule = std::function<cplx(double)>;

  PulseEnvelope() = default;
  PulseEnvelope(Rule rule, double t_start, double t_end);

  cplx operator()(double t) const {
    if (t < t_start_ || t > t_end_ || !rule_) return {0.0, 0.0};
    return rule_(t);
  }
  double t_start() const noexcept { return t_start_; }
  double t_end() const noexcept { return t_end_; }

 private:
  Rule rule_;
  double t_start_ = 0.0;
  double t_end_ = 0.0;
};

/// u(t) = (W^2/2pi)^{1/4} exp[-(W^2/4)(t - t0)^2], with support t0 +- 8/W.
PulseEnvelope gaussian_envelope(double bandwidth, double center);

/// Uniform grid. `store_every` thins the stored trajectory; the final time
/// is always stored.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  double step = 1e-3;
  std::size_t store_every = 1;

  /// Number of integration steps; the last step is shortened to land on t_end.
  std::size_t steps() const;
  void validate() const;
};

template <class State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;

  std::size_t size() const noexcept { return times.size(); }
  const State& back() const { return states.back(); }
};

}  // namespace aqg
