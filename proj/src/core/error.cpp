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

#include "aqg/core/error.hpp"

namespace aqg {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_model: return "invalid-model";
    case ErrorKind::invalid_state: return "invalid-state";
    case ErrorKind::incomplete_scattering: return "incomplete-scattering";
    case ErrorKind::degenerate_parameter: return "degenerate-parameter";
    case ErrorKind::no_steady_state: return "no-steady-state";
    case ErrorKind::incomplete_return: return "incomplete-return";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::geometry: return "geometry";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::division: return "division";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

bool is_numerical(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::incomplete_scattering:
    case ErrorKind::degenerate_parameter:
    case ErrorKind::no_steady_state:
    case ErrorKind::incomplete_return:
    case ErrorKind::truncation:
      return true;
    default:
      return false;
  }
}

}  // namespace aqg
