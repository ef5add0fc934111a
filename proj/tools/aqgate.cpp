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

// aqgate: command-line front end for the autonomous-gate simulations.
//
//   aqgate fidelity-sweep --config sweep.cfg --out sweep.csv
//   aqgate laser-timing T=70ns
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aqg/cli/config.hpp"
#include "aqg/cli/run.hpp"
#include "aqg/core/parallel.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 1;
  int workers = 0;
  bool regen_golden = false;
  std::vector<std::string> overrides;
};

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  text = os.str();
  return true;
}

int execute(const std::string& subcommand, const Flags& f) {
  std::string text;
  if (!f.config_path.empty() && !read_file(f.config_path, text)) {
    std::cerr << "aqgate: cannot read config '" << f.config_path << "'\n";
    return 1;
  }
  const auto parsed = aqg::cli::parse_config(text, subcommand, f.overrides);
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) std::cerr << "aqgate: " << e << "\n";
    return 1;
  }

  if (f.regen_golden) {
    if (f.out_path.empty()) {
      std::cerr << "aqgate: --regen-golden needs --out\n";
      return 1;
    }
    const auto failures = aqg::cli::check_invariants(subcommand);
    if (!failures.empty()) {
      for (const auto& m : failures) std::cerr << "aqgate: invariant failed: " << m << "\n";
      std::cerr << "aqgate: refusing to regenerate " << f.out_path << "\n";
      return 2;
    }
  }

  if (f.workers > 0) aqg::set_worker_count(f.workers);
  aqg::cli::RunOptions opt;
  opt.seed = f.seed;
  opt.exec = f.workers == 1 ? aqg::Execution::serial : aqg::Execution::parallel;
  const auto outcome = aqg::cli::run(parsed.config, opt);
  if (outcome.exit_code != 0) {
    std::cerr << "aqgate: " << outcome.error << "\n";
    return outcome.exit_code;
  }

  const std::string csv = aqg::cli::render_csv(*outcome.table, parsed.config, f.seed);
  for (const auto& w : outcome.table->warnings()) std::cerr << "aqgate: warning: " << w << "\n";
  if (f.out_path.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(f.out_path, std::ios::binary);
  if (!out || !(out << csv)) {
    std::cerr << "aqgate: cannot write '" << f.out_path << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulations of autonomous quantum gates"};
  app.set_version_flag("--version", std::string(aqg::cli::tool_version()));
  app.require_subcommand(1);

  Flags flags;
  std::string chosen;
  for (const auto& name : aqg::cli::subcommands()) {
    const auto& schema = aqg::cli::schema(name);
    std::ostringstream keys;
    keys << schema.summary << "\n\nConfig keys:";
    for (const auto& k : schema.keys)
      keys << "\n  " << k.name << " (" << aqg::cli::dim_name(k.dim)
           << (k.required ? ", required" : "") << "): " << k.doc;
    for (const auto& k : schema.sweep_keys) keys << "\n  [sweep] " << k.name << ": " << k.doc;

    CLI::App* sub = app.add_subcommand(name, keys.str());
    sub->add_option("--config", flags.config_path, "config file")->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out_path, "CSV output path (default stdout)");
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--workers", flags.workers, "worker threads (0 = all, 1 = serial)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--regen-golden", flags.regen_golden,
                  "check invariants before writing a golden file");
    sub->add_option("overrides", flags.overrides, "key=value overrides, e.g. T=70ns");
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return execute(chosen, flags);
}
