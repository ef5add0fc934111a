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

#include "aqg/core/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aqg::ops {

Mat sigma_x() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat sigma_y() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = -kI;
  m(1, 0) = kI;
  return m;
}

Mat sigma_z() {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

Mat sigma_plus() { return projector(2, 1, 0); }
Mat sigma_minus() { return projector(2, 0, 1); }

Mat projector(std::size_t dim, std::size_t i, std::size_t j) {
  const auto n = static_cast<Eigen::Index>(dim);
  Mat m = Mat::Zero(n, n);
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

Mat destroy(std::size_t n_max) {
  const auto n = static_cast<Eigen::Index>(n_max + 1);
  Mat a = Mat::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Mat number(std::size_t n_max) {
  const auto n = static_cast<Eigen::Index>(n_max + 1);
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron(std::initializer_list<Mat> factors) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

Ket kron(const Ket& a, const Ket& b) {
  Ket out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Mat embed(const Mat& op, const std::vector<std::size_t>& dims, std::size_t which) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const auto d = static_cast<Eigen::Index>(dims[k]);
    out = kron(out, k == which ? op : Mat(Mat::Identity(d, d)));
  }
  return out;
}

Mat partial_trace_keep(const Mat& rho, const std::vector<std::size_t>& dims,
                       std::size_t keep) {
  return partial_trace_keep(rho, dims, std::vector<std::size_t>{keep});
}

Mat partial_trace_keep(const Mat& rho, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& keep) {
  const std::size_t nsys = dims.size();
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  std::size_t kept = 1;
  for (auto k : keep) kept *= dims[k];

  // Row-major digit decomposition of a composite index.
  std::vector<std::size_t> stride(nsys, 1);
  for (std::size_t k = nsys; k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  std::vector<bool> is_kept(nsys, false);
  for (auto k : keep) is_kept[k] = true;

  auto kept_index = [&](std::size_t idx) {
    std::size_t out = 0;
    for (auto k : keep) out = out * dims[k] + (idx / stride[k]) % dims[k];
    return out;
  };
  auto traced_index = [&](std::size_t idx) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < nsys; ++k)
      if (!is_kept[k]) out = out * dims[k] + (idx / stride[k]) % dims[k];
    return out;
  };

  const auto m = static_cast<Eigen::Index>(kept);
  Mat red = Mat::Zero(m, m);
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t ti = traced_index(i);
    const std::size_t ki = kept_index(i);
    for (std::size_t j = 0; j < total; ++j) {
      if (traced_index(j) != ti) continue;
      red(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(kept_index(j))) +=
          rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return red;
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double overlap_fidelity(const Mat& rho, const Ket& psi) {
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

double qubit_state_fidelity(const Mat& rho, const Mat& sigma) {
  const double tr = (rho * sigma).trace().real();
  const double d1 = std::max(0.0, rho.determinant().real());
  const double d2 = std::max(0.0, sigma.determinant().real());
  return tr + 2.0 * std::sqrt(d1 * d2);
}

double average_gate_fidelity(const Mat& ideal, const Mat& actual) {
  const double d = static_cast<double>(ideal.rows());
  const Mat m = ideal.adjoint() * actual;
  const double tr2 = std::norm(m.trace());
  const double hs = (m.adjoint() * m).trace().real();
  return (tr2 + hs) / (d * (d + 1.0));
}

double wrap_angle(double phi) {
  double w = std::remainder(phi, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

double angle_distance(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

}  // namespace aqg::ops
