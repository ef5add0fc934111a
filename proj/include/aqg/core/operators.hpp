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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "aqg/core/types.hpp"

namespace aqg::ops {

// Two-level operators in the {|0>, |1>} basis; sigma_z|1> = +|1>, so |1> is
// the upper level and sigma_+ = |1><0|.
Mat sigma_x();
Mat sigma_y();
Mat sigma_z();
Mat sigma_plus();
Mat sigma_minus();

/// |i><j| on a `dim`-level system.
Mat projector(std::size_t dim, std::size_t i, std::size_t j);

/// Bosonic annihilation operator on Fock states 0..n_max.
Mat destroy(std::size_t n_max);
Mat number(std::size_t n_max);

Mat kron(const Mat& a, const Mat& b);
Mat kron(std::initializer_list<Mat> factors);
Ket kron(const Ket& a, const Ket& b);

/// Places `op` on subsystem `which` of a product space with the given local
/// dimensions (first factor is the most significant index).
Mat embed(const Mat& op, const std::vector<std::size_t>& dims, std::size_t which);

/// Reduced density matrix of subsystem `keep`.
Mat partial_trace_keep(const Mat& rho, const std::vector<std::size_t>& dims,
                       std::size_t keep);

/// Reduced density matrix keeping the listed subsystems, in listed order.
Mat partial_trace_keep(const Mat& rho, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& keep);

bool is_hermitian(const Mat& m, double tol);

/// <psi|rho|psi>
double overlap_fidelity(const Mat& rho, const Ket& psi);

/// Uhlmann fidelity of two qubit states, Tr(rho sigma) + 2 sqrt(det rho det sigma).
double qubit_state_fidelity(const Mat& rho, const Mat& sigma);

/// Average gate fidelity of `actual` (restricted d x d block) to `ideal`,
/// (|Tr M|^2 + Tr M^dag M) / (d (d + 1)) with M = ideal^dag actual.
double average_gate_fidelity(const Mat& ideal, const Mat& actual);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double phi);

/// |wrap(a - b)|
double angle_distance(double a, double b);

}  // namespace aqg::ops
