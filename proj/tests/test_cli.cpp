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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "aqg/cli/config.hpp"
#include "aqg/cli/run.hpp"
#include "aqg/core/types.hpp"

using namespace aqg;
using namespace aqg::cli;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig must_parse(std::string_view text, std::string_view sub = {},
                     const std::vector<std::string>& overrides = {}) {
  auto r = parse_config(text, sub, overrides);
  EXPECT_TRUE(r.ok()) << (r.errors.empty() ? "" : r.errors.front());
  return r.config;
}

bool contains(const std::vector<std::string>& errors, std::string_view needle) {
  for (const auto& e : errors)
    if (e.find(needle) != std::string::npos) return true;
  return false;
}

std::optional<double> as_number(const std::string& tok) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '=') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

/// Token-wise comparison: numbers within a relative tolerance, words exactly.
void expect_csv_close(const std::string& golden, const std::string& fresh, double rel) {
  const auto a = lines(golden), b = lines(fresh);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ta = tokens(a[i]), tb = tokens(b[i]);
    ASSERT_EQ(ta.size(), tb.size()) << "line " << i + 1;
    for (std::size_t k = 0; k < ta.size(); ++k) {
      const auto x = as_number(ta[k]), y = as_number(tb[k]);
      if (x && y) {
        EXPECT_LE(std::abs(*x - *y), rel * std::max(std::abs(*x), std::abs(*y)) + 1e-300)
            << "line " << i + 1 << ": " << a[i] << " vs " << b[i];
      } else {
        EXPECT_EQ(ta[k], tb[k]) << "line " << i + 1;
      }
    }
  }
}

const char* kUnits[] = {"Hz", "kHz", "MHz", "GHz", "THz", "s",   "ms",  "us",   "ns",
                        "ps", "K",   "mK",  "uK",  "m",   "mm",  "um",  "nm",   "m/s",
                        "mm/s", "um/s", "km/s", "rad", "deg", "pi"};

std::string random_unit(Dim d, std::mt19937_64& rng) {
  std::vector<std::string> ok;
  for (const char* u : kUnits)
    if (unit_factor(d, u)) ok.push_back(u);
  return ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
}

std::string random_config_text(const CommandSchema& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mant(0.1, 10.0);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::bernoulli_distribution keep(0.6);
  std::ostringstream os;
  os << "[" << s.name << "]\n";
  char buf[64];
  for (const auto& k : s.keys) {
    if (!k.required && !keep(rng)) continue;
    os << k.name << " = ";
    switch (k.dim) {
      case Dim::flag:
        os << (keep(rng) ? "true" : "false");
        break;
      case Dim::choice:
        os << k.choices[std::uniform_int_distribution<std::size_t>(0, k.choices.size() - 1)(rng)];
        break;
      case Dim::count:
        os << std::uniform_int_distribution<int>(1, 500)(rng);
        break;
      case Dim::number:
        std::snprintf(buf, sizeof buf, "%.17g", mant(rng) * std::pow(10.0, expo(rng)));
        os << buf;
        break;
      default:
        std::snprintf(buf, sizeof buf, "%.17g", mant(rng) * std::pow(10.0, expo(rng)));
        os << buf << " " << random_unit(k.dim, rng);
    }
    os << "\n";
  }
  if (!s.sweep_keys.empty() && keep(rng)) {
    const auto& k = s.sweep_keys.front();
    const std::string u = random_unit(k.dim, rng);
    std::snprintf(buf, sizeof buf, "%.17g .. %.17g", mant(rng), 10.0 + mant(rng));
    os << "\n[sweep]\n" << k.name << ": " << buf << " " << u << ", "
       << std::uniform_int_distribution<int>(2, 900)(rng) << " samples\n";
  }
  return os.str();
}

const std::vector<std::string> kGoldens{
    "clock",        "dispersive_z", "fidelity_sweep", "fidelity_sweep_detuned",
    "laser_timing", "levine_pichler", "ms_gate",      "ring",
    "rydberg_cz",   "slide",        "ultrafast",      "xy_gate"};

}  // namespace

TEST(Config, UnitsConvertToSi) {
  const auto c = must_parse("[fidelity-sweep]\ngamma = 100 MHz\nbandwidth = 0.03 gamma\n");
  EXPECT_DOUBLE_EQ(c.si("gamma"), 1e8);
  EXPECT_DOUBLE_EQ(c.si("bandwidth"), 3e6);

  const auto r = must_parse("[rydberg-cz]\nrabi = 1 MHz\n");
  EXPECT_DOUBLE_EQ(r.si("rabi"), 2.0 * kPi * 1e6);

  const auto l = must_parse("[laser-timing]\nT = 70ns\n");
  EXPECT_DOUBLE_EQ(l.si("T"), 70e-9);

  const auto s = must_parse("[slide]\nspeed = 3.7 m/s\ntime = 7.5 us\n");
  EXPECT_DOUBLE_EQ(s.si("speed"), 3.7);
  EXPECT_NEAR(s.si("time"), 7.5e-6, 1e-21);

  const auto a = must_parse("[levine-pichler]\ntau = 195 ns\nxi = 180 deg\n");
  EXPECT_NEAR(a.si("xi"), kPi, 1e-15);
}

TEST(Config, SweepBlockExpands) {
  const auto c = must_parse(
      "[fidelity-sweep]\ngamma = 100 MHz\n\n[sweep]\nchi: 0 .. 30 gamma, 601 samples\n");
  const auto pts = c.sweep_points();
  ASSERT_EQ(pts.size(), 601u);
  EXPECT_EQ(pts.front(), 0.0);
  EXPECT_DOUBLE_EQ(pts.back(), 3e9);
  EXPECT_DOUBLE_EQ(pts[20], 1e8);
}

TEST(Config, EmptyFileListsEveryRequiredKey) {
  const auto r = parse_config("", "clock");
  EXPECT_FALSE(r.ok());
  for (const auto& k : schema("clock").keys)
    if (k.required) EXPECT_TRUE(contains(r.errors, "'" + k.name + "'")) << k.name;
}

TEST(Config, EveryProblemCarriesItsLine) {
  const auto r = parse_config(
      "[dispersive-z]\ngamma = 100 MHz\nchi = 1 foo\nbogus = 3\nsettle_tol = x\n"
      "delta = 5 K\n");
  EXPECT_EQ(r.errors.size(), 4u);
  EXPECT_TRUE(contains(r.errors, "line 3"));
  EXPECT_TRUE(contains(r.errors, "line 4"));
  EXPECT_TRUE(contains(r.errors, "line 5"));
  EXPECT_TRUE(contains(r.errors, "line 6"));
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_FALSE(parse_config("[ring]\nradius = 3\n", "ring").ok());  // unit missing
  EXPECT_FALSE(parse_config("[nope]\n").ok());
  EXPECT_FALSE(parse_config("[slide]\nspeed = 1 m/s\nspeed = 2 m/s\n").ok());
  EXPECT_FALSE(parse_config("[xy-gate]\ninput = 2\n", "xy-gate").ok());
  EXPECT_FALSE(
      parse_config("[fidelity-sweep]\ngamma = 1 bandwidth\nbandwidth = 1 gamma\n").ok());
  EXPECT_FALSE(parse_config("[fidelity-sweep]\ngamma = 1 MHz\n[sweep]\ngamma: 0 .. 1 MHz, 3 samples\n")
                   .ok());
  EXPECT_THROW(schema("nope"), Error);
}

TEST(Config, OverridesApplyOnTopAndReportArgumentPosition) {
  const auto c = must_parse("[laser-timing]\nT = 70 ns\n", "laser-timing", {"T=35ns", "n = 1.5"});
  EXPECT_DOUBLE_EQ(c.si("T"), 35e-9);
  EXPECT_DOUBLE_EQ(c.number("n", 1.0), 1.5);
  const auto bad = parse_config("", "laser-timing", {"T=70ns", "Q=1"});
  EXPECT_TRUE(contains(bad.errors, "argument 2"));
}

TEST(Config, EmitParseRoundTrip) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& name = subcommands()[static_cast<std::size_t>(trial) % subcommands().size()];
    const std::string text = random_config_text(schema(name), rng);
    const auto first = parse_config(text, name);
    ASSERT_TRUE(first.ok()) << text << first.errors.front();
    const std::string emitted = emit_config(first.config);
    const auto second = parse_config(emitted, name);
    ASSERT_TRUE(second.ok()) << emitted;
    EXPECT_EQ(second.config, first.config) << text << "---\n" << emitted;
    EXPECT_EQ(emit_config(second.config), emitted);
  }
}

TEST(Run, SameSeedGivesIdenticalCsv) {
  const auto c = must_parse(slurp(fs::path(AQG_GOLDEN_DIR) / "clock.cfg"), "clock");
  const auto a = render_csv(run_table(c, {11, Execution::parallel}), c, 11);
  const auto b = render_csv(run_table(c, {11, Execution::serial}), c, 11);
  EXPECT_EQ(a, b);
  const auto d = render_csv(run_table(c, {12, Execution::parallel}), c, 12);
  EXPECT_NE(a, d);
}

TEST(Run, CsvCarriesEverythingNeededToReproduce) {
  const auto c = must_parse("[ms-gate]\nn_max = 8\nsamples = 10\n", "ms-gate");
  const auto csv = render_csv(run_table(c), c, 5);
  const auto text = config_text_from_csv(csv);
  ASSERT_TRUE(text.has_value());
  const auto again = must_parse(*text);
  EXPECT_EQ(again, c);
  EXPECT_EQ(seed_from_csv(csv), 5u);
  EXPECT_EQ(render_csv(run_table(again), again, *seed_from_csv(csv)), csv);
}

TEST(Run, ExitCodes) {
  const auto ok = run(must_parse("[laser-timing]\nT = 70 ns\n"));
  EXPECT_EQ(ok.exit_code, 0);
  ASSERT_TRUE(ok.table.has_value());
  EXPECT_NEAR(*ok.table->result("distance"), 20.985, 1e-3);
  EXPECT_FALSE(ok.table->notes().empty());

  const auto geometry =
      run(must_parse("[ring]\nradius = 3 um\nchord = 7 um\nrotation_frequency = 100 kHz\n"
                     "duration = 50 us\n"));
  EXPECT_EQ(geometry.exit_code, 1);
  EXPECT_FALSE(geometry.error.empty());

  const auto truncated = run(must_parse("[ms-gate]\nn_max = 2\nrabi = 3.2 MHz\n"));
  EXPECT_EQ(truncated.exit_code, 2);
}

TEST(Run, TableRejectsRaggedRows) {
  ResultTable t({"a", "b"});
  EXPECT_THROW(t.add_row({1.0}), Error);
  t.add_result("x", -0.0);
  EXPECT_EQ(t.results().front().second, "0");
}

TEST(Run, InvariantsHoldForEverySubcommand) {
  for (const auto& name : subcommands()) {
    const auto failures = check_invariants(name);
    EXPECT_TRUE(failures.empty()) << name << ": " << (failures.empty() ? "" : failures.front());
  }
}

TEST(Tool, InvalidConfigWritesNothing) {
  const fs::path dir = fs::temp_directory_path() / "aqgate_cli_test";
  fs::create_directories(dir);
  const fs::path cfg = dir / "bad.cfg", out = dir / "out.csv";
  fs::remove(out);
  std::ofstream(cfg) << "[dispersive-z]\ngamma = 100 MHz\nchi = 1 foo\n";
  const std::string cmd = std::string(AQG_TOOL_PATH) + " dispersive-z --config " + cfg.string() +
                          " --out " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
  EXPECT_FALSE(fs::exists(out));

  const std::string good = std::string(AQG_TOOL_PATH) + " laser-timing T=70ns --out " +
                           out.string() + " 2>/dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(good.c_str())), 0);
  EXPECT_TRUE(fs::exists(out));
  fs::remove_all(dir);
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, MatchesStoredOutput) {
  const fs::path dir(AQG_GOLDEN_DIR);
  const std::string golden = slurp(dir / (GetParam() + ".csv"));
  ASSERT_FALSE(golden.empty());
  const auto config = must_parse(slurp(dir / (GetParam() + ".cfg")));
  const auto stored = config_text_from_csv(golden);
  ASSERT_TRUE(stored.has_value());
  EXPECT_EQ(must_parse(*stored), config);
  const auto seed = seed_from_csv(golden);
  ASSERT_TRUE(seed.has_value());
  expect_csv_close(golden, render_csv(run_table(config, {*seed}), config, *seed), 1e-6);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(kGoldens),
                         [](const auto& info) { return info.param; });
