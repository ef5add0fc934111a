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
#include <exception>
#include <vector>

#ifdef AQG_HAVE_OPENMP
#include <omp.h>
#endif

namespace aqg {

enum class Execution { serial, parallel };

/// Number of OpenMP workers used by Execution::parallel (1 without OpenMP).
int worker_count();
void set_worker_count(int n);

/// out[i] = fn(i) for i in [0, n). Results land in index order whatever the
/// schedule, so both execution modes return identical vectors. The first
/// exception thrown by any index is rethrown after the loop.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t n, Fn&& fn, Execution exec) {
  std::vector<T> out(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
#ifdef AQG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef AQG_HAVE_OPENMP
#pragma omp critical(aqg_map_error)
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace aqg
