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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqg/cli/config.hpp"
#include "aqg/core/parallel.hpp"

namespace aqg::cli {

std::string_view tool_version();

/// Rectangular numeric table plus the scalar results and notes of a run.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns = {}) : columns_(std::move(columns)) {}

  /// Throws Error(config) when the row arity differs from the columns.
  void add_row(std::vector<double> row);
  void add_result(const std::string& name, double value);
  void add_result(const std::string& name, const std::string& value);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& results() const { return results_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Looks up a scalar result; nullopt when absent or not numeric.
  std::optional<double> result(const std::string& name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> results_;
  std::vector<std::string> notes_;
  std::vector<std::string> warnings_;
};

/// CSV with `#` metadata lines (tool version, command, seed, the full config,
/// results, notes, warnings) followed by the header row and data rows.
std::string render_csv(const ResultTable& table, const RunConfig& config, std::uint64_t seed);

/// Config text echoed in a CSV's metadata, or nullopt when there is none.
std::optional<std::string> config_text_from_csv(std::string_view csv);

/// Seed recorded in a CSV's metadata.
std::optional<std::uint64_t> seed_from_csv(std::string_view csv);

struct RunOptions {
  std::uint64_t seed = 1;
  Execution exec = Execution::parallel;
};

/// Runs one subcommand. Throws aqg::Error from the physics modules.
ResultTable run_table(const RunConfig& config, const RunOptions& options = {});

struct RunOutcome {
  /// 0 success, 1 validation error, 2 numerical failure.
  int exit_code = 0;
  std::optional<ResultTable> table;
  std::string error;
};

RunOutcome run(const RunConfig& config, const RunOptions& options = {});

/// Quick property checks gating golden regeneration; returns the failures.
std::vector<std::string> check_invariants(std::string_view subcommand);

}  // namespace aqg::cli
