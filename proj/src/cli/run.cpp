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

#include "aqg/cli/run.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "aqg/autonomous_clock.hpp"
#include "aqg/core/diagnostics.hpp"
#include "aqg/core/error.hpp"
#include "aqg/core/operators.hpp"
#include "aqg/dispersive_zgate.hpp"
#include "aqg/ion_gates.hpp"
#include "aqg/rydberg_gates.hpp"
#include "aqg/xy_gate.hpp"

#ifndef AQG_VERSION
#define AQG_VERSION "0.0.0"
#endif

namespace aqg::cli {

namespace {

constexpr double kHbar = 1.054571817e-34;
constexpr double kBoltzmann = 1.380649e-23;
// Internal time unit of the ion and transmon modules.
constexpr double kMicro = 1e-6;

std::string format_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x == 0.0 ? 0.0 : x);
  return buf;
}

void config_error(const std::string& what) { fail(ErrorKind::config, what); }

std::size_t at_least(const RunConfig& c, const std::string& key, std::size_t fallback,
                     std::size_t minimum) {
  const std::size_t n = c.count(key, fallback);
  if (n < minimum)
    config_error("'" + key + "' must be at least " + std::to_string(minimum));
  return n;
}

void add_phase_table(ResultTable& t, const rydberg::ConditionalPhaseTable& table) {
  for (std::size_t i = 0; i < 4; ++i)
    t.add_row({static_cast<double>(i), table.phase[i], table.leakage[i]});
  t.add_result("conditional_phase", table.conditional_phase());
  t.add_result("max_leakage", table.max_leakage());
}

// ---------------------------------------------------------------- dispersive

ResultTable run_dispersive(const RunConfig& c, const RunOptions&) {
  const double g = c.si("gamma");
  if (!(g > 0.0)) config_error("'gamma' must be positive");
  zgate::DispersiveZParams p =
      zgate::DispersiveZParams::on_rule(c.si("chi") / g, 1.0, c.si_or("bandwidth", 0.03 * g) / g);
  if (c.has("delta")) p.delta = c.si("delta") / g;
  if (c.has("t0")) p.t0 = c.si("t0") * g;
  zgate::EomOptions opt;
  opt.sample_spacing = c.si_or("sample_spacing", 1.0 / g) * g;
  const cplx s0(c.number("coherence", 0.5), 0.0);

  const zgate::CoherenceTrajectory traj = zgate::evolve_effective_eoms(p, s0, opt);
  const auto phases = traj.phases();
  const auto mags = traj.magnitudes();
  ResultTable t({"t", "re_sigma_minus", "im_sigma_minus", "phase", "magnitude"});
  for (std::size_t i = 0; i < traj.size(); ++i)
    t.add_row({traj.times[i] / g, traj.sigma_minus[i].real(), traj.sigma_minus[i].imag(),
               phases[i], mags[i]});
  t.add_result("phase_final", phases.back());
  t.add_result("phase_long_time", -std::arg(zgate::long_time_coherence(p.chi, 1.0, p.delta)));
  t.add_result("phase_analytic", zgate::analytic_phase(p.chi, 1.0));
  t.add_result("magnitude_final", mags.back());
  t.add_result("settle_time",
               zgate::steady_state_time(traj, c.number("settle_tol", 1e-3)) / g);
  return t;
}

ResultTable run_fidelity_sweep(const RunConfig& c, const RunOptions& o) {
  const double g = c.si("gamma");
  if (!(g > 0.0)) config_error("'gamma' must be positive");
  zgate::RotationSetup setup;
  setup.gamma = 1.0;
  setup.bandwidth_ratio = c.si_or("bandwidth", 0.03 * g) / g;
  setup.settle_tol = c.number("settle_tol", 1e-3);
  const std::size_t n = at_least(c, "targets", 9, 2);

  zgate::ChiSweep sweep;
  if (c.sweep) {
    const auto pts = c.sweep_points();
    sweep.chi_min_over_gamma = pts.front() / g;
    sweep.chi_max_over_gamma = pts.back() / g;
    sweep.samples = pts.size();
  }
  std::vector<double> targets(n);
  for (std::size_t k = 0; k < n; ++k)
    targets[k] = kPi * static_cast<double>(k) / static_cast<double>(n - 1);

  const auto reports = zgate::fidelity_curve(targets, sweep, setup, o.exec);
  ResultTable t({"phi_target", "chi_opt", "fidelity", "coherence", "phi_final", "settle_time"});
  for (const auto& r : reports)
    t.add_row({r.target_phi, r.chi_used * g, r.fidelity, r.coherence_final, r.phi_final,
               r.settle_time / g});
  double worst = 1.0;
  for (const auto& r : reports) worst = std::min(worst, r.fidelity);
  t.add_result("min_fidelity", worst);
  t.add_result("chi_samples", static_cast<double>(sweep.samples));
  return t;
}

// ------------------------------------------------------------------- rydberg

ResultTable run_rydberg_cz(const RunConfig& c, const RunOptions& o) {
  const double rabi = c.si("rabi");
  if (!(rabi > 0.0)) config_error("'rabi' must be positive");
  rydberg::BlockadeParams bp;
  bp.rabi = 1.0;
  bp.detuning = c.si_or("detuning", 0.0) / rabi;

  if (c.sweep) {
    const auto pts = c.sweep_points();
    struct Point {
      double fidelity = 0.0;
      rydberg::ConditionalPhaseTable table;
    };
    const auto res = map_indexed<Point>(
        pts.size(),
        [&](std::size_t i) {
          rydberg::BlockadeParams q = bp;
          q.blockade = pts[i] / rabi;
          Point pt;
          pt.fidelity = rydberg::blockade_cz_fidelity(q);
          pt.table = rydberg::blockade_cz(q, StateVector::basis(9, 0)).table;
          return pt;
        },
        o.exec);
    ResultTable t({"blockade", "blockade_over_rabi", "fidelity", "conditional_phase", "max_leakage"});
    for (std::size_t i = 0; i < pts.size(); ++i)
      t.add_row({pts[i] / (2.0 * kPi), pts[i] / rabi, res[i].fidelity,
                 res[i].table.conditional_phase(), res[i].table.max_leakage()});
    return t;
  }

  bp.hard_blockade = !c.has("blockade");
  if (!bp.hard_blockade) bp.blockade = c.si("blockade") / rabi;
  ResultTable t({"input", "phase", "leakage"});
  Ket plus = Ket::Zero(9);
  for (std::size_t a : {0u, 1u})
    for (std::size_t b : {0u, 1u}) plus(rydberg::two_atom_index(a, b)) = 0.5;
  add_phase_table(t, rydberg::blockade_cz(bp, StateVector(plus)).table);
  t.add_result("fidelity", rydberg::blockade_cz_fidelity(bp));
  t.add_result("mode", bp.hard_blockade ? "hard" : "finite");
  return t;
}

ResultTable run_levine_pichler(const RunConfig& c, const RunOptions&) {
  if (c.has("rabi") == c.has("tau")) config_error("give exactly one of 'rabi' and 'tau'");
  const double ratio = c.number("detuning_ratio", 0.377);
  const double rabi = c.has("tau") ? rydberg::back_solve_rabi(c.si("tau"), ratio) : c.si("rabi");
  if (!(rabi > 0.0)) config_error("'rabi' must be positive");
  const double xi = c.has("xi") ? c.si("xi") : rydberg::solve_xi(1.0, ratio);
  const auto lp = rydberg::LevinePichlerParams::from_rates(1.0, ratio, xi);
  const auto table = rydberg::levine_pichler(lp, c.number("leakage_threshold", 1e-3));

  ResultTable t({"input", "phase", "leakage"});
  add_phase_table(t, table);
  t.add_result("rabi", rabi / (2.0 * kPi));
  t.add_result("detuning", ratio * rabi / (2.0 * kPi));
  t.add_result("tau", lp.tau / rabi);
  t.add_result("xi", xi);
  return t;
}

ResultTable run_ultrafast(const RunConfig& c, const RunOptions&) {
  const double j = c.si("coupling");
  if (!(j > 0.0)) config_error("'coupling' must be positive");
  const double duration = c.si_or("duration", kPi / j);
  const std::size_t n = at_least(c, "samples", 101, 2);
  ResultTable t({"t", "re_dd", "im_dd", "re_pf", "im_pf"});
  rydberg::UltrafastAmplitudes a{};
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = duration * static_cast<double>(i) / static_cast<double>(n - 1);
    a = rydberg::ultrafast_phase(j, ti);
    t.add_row({ti, a.dd.real(), a.dd.imag(), a.pf.real(), a.pf.imag()});
  }
  t.add_result("re_dd_final", a.dd.real());
  t.add_result("im_dd_final", a.dd.imag());
  t.add_result("norm_final", std::norm(a.dd) + std::norm(a.pf));
  return t;
}

ResultTable run_laser_timing(const RunConfig& c, const RunOptions&) {
  const double delay = c.si("T");
  if (delay < 0.0) config_error("'T' must be nonnegative");
  const double n = c.number("n", 1.0);
  const double d = rydberg::clock_laser_distance(delay, n);
  ResultTable t({"T", "n", "distance"});
  t.add_row({delay, n, d});
  t.add_result("distance", d);
  if (d > 10.0) {
    const double few = 5.0 * n / rydberg::kSpeedOfLight;
    t.add_note("d = c T / n = " + format_value(d) +
               " m, well beyond a few meters; a 5 m line corresponds to T = " +
               format_value(few * 1e9) + " ns");
  }
  return t;
}

// ----------------------------------------------------------------------- ion

ResultTable run_ms_gate(const RunConfig& c, const RunOptions&) {
  ion::MSParams p;
  if (c.has("mode_frequency")) p.mode_frequency = c.si("mode_frequency") * kMicro;
  if (c.has("detuning")) p.detuning = c.si("detuning") * kMicro;
  p.lamb_dicke = c.number("eta", p.lamb_dicke);
  if (c.has("rabi")) p.rabi = c.si("rabi") * kMicro;
  p.n_max = c.count("n_max", p.n_max);
  const std::size_t fock = c.count("initial_fock", 0);
  const double duration = c.has("duration") ? c.si("duration") / kMicro : 0.0;
  const std::size_t samples = at_least(c, "samples", 100, 1);

  const auto r = ion::ms_evolve(p, StateVector::basis(4, 0), fock, duration, 0.0,
                                std::max<std::size_t>(1, 2000 / samples));
  ResultTable t({"t", "fidelity_to_target", "motional_purity", "mean_phonons"});
  for (const auto& s : r.samples)
    t.add_row({s.t * kMicro, s.fidelity_to_target, s.motional_purity, s.mean_phonons});
  t.add_result("fidelity_final", r.final().fidelity_to_target);
  t.add_result("purity_final", r.final().motional_purity);
  t.add_result("mean_phonons_final", r.final().mean_phonons);
  t.add_result("truncation_population", r.truncation_population);
  t.add_result("closure_time", p.closure_time() * kMicro);
  t.add_result("rabi", p.effective_rabi() / kMicro / (2.0 * kPi));
  return t;
}

ResultTable run_slide(const RunConfig& c, const RunOptions&) {
  const double v = c.si("speed");
  if (c.has("diameter") == c.has("time")) config_error("give exactly one of 'diameter' and 'time'");
  double d = 0.0, time = 0.0;
  if (c.has("diameter")) {
    d = c.si("diameter");
    time = ion::slide_exposure(v, d);
  } else {
    time = c.si("time");
    d = ion::slide_diameter(v, time);
  }
  ResultTable t({"speed", "diameter", "time"});
  t.add_row({v, d, time});
  t.add_result("diameter", d);
  t.add_result("time", time);
  if (c.has("rabi") != c.has("light_detuning"))
    config_error("'rabi' and 'light_detuning' go together");
  if (c.has("rabi"))
    t.add_result("light_shift", ion::light_shift(c.si("rabi"), c.si("light_detuning")));
  return t;
}

ResultTable run_ring(const RunConfig& c, const RunOptions&) {
  ion::RingParams p;
  p.radius = c.si("radius");
  p.chord = c.si("chord");
  p.rotation_frequency = c.si("rotation_frequency");
  p.duration = c.si("duration");
  p.decay_rate = c.si_or("decay_rate", 0.0);
  p.rabi = c.si_or("rabi", 0.0);
  const auto s = ion::ring_schedule(p);
  const auto r = ion::ring_pulsed_rabi(p);

  ResultTable t({"arc", "t_on", "t_off"});
  const double half_turn = 0.5 / p.rotation_frequency;
  const double lit = half_turn * s.illuminated_fraction;
  std::size_t arc = 0;
  for (double on = 0.0; on < p.duration; on = static_cast<double>(++arc) * half_turn)
    t.add_row({static_cast<double>(arc), on, std::min(on + lit, p.duration)});
  t.add_result("theta", s.theta);
  t.add_result("passes", s.passes);
  t.add_result("illuminated_fraction", s.illuminated_fraction);
  t.add_result("rabi", s.rabi / (2.0 * kPi));
  t.add_result("pulse_area", s.pulse_area);
  t.add_result("excited_population", r.excited_population);
  t.add_result("continuous_excited_population", r.continuous_excited_population);
  t.add_result("fidelity_to_continuous", r.fidelity);
  return t;
}

// --------------------------------------------------------------------- clock

ResultTable run_clock(const RunConfig& c, const RunOptions& o) {
  clock::ClockParams p;
  p.omega_ge = c.si("omega_ge");
  p.omega_se = c.si("omega_se");
  p.omega_c = c.si("omega_c");
  p.omega_h = c.si("omega_h");
  p.t_cold = c.si("t_cold") * kBoltzmann / kHbar;
  p.t_hot = c.si("t_hot") * kBoltzmann / kHbar;
  p.g3 = c.si("g3");
  p.cold_rate = c.si_or("cold_rate", 0.0);
  p.hot_rate = c.si("hot_rate");
  p.emission_rate = c.si("emission_rate");
  p.decay_rate = c.si("decay_rate");
  p.resonance_tol = 1e-9 * std::max({p.omega_c, p.omega_ge, p.omega_h});
  const double duration = c.si("duration");
  const std::size_t n = at_least(c, "trajectories", 100, 1);
  clock::TickOptions opt;
  opt.start = c.word("start", "gibbs") == "steady" ? clock::ClockStart::steady_state
                                                   : clock::ClockStart::gibbs;

  const auto model = clock::build_clock_model(p);
  const double flux = clock::steady_state_flux(model);
  const auto records = clock::simulate_ensemble(model, duration, n, o.seed, opt, o.exec);
  const double rate = clock::ensemble_tick_rate(records);

  ResultTable t({"trajectory", "tick", "time"});
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t k = 0; k < records[i].times.size(); ++k)
      t.add_row({static_cast<double>(i), static_cast<double>(k), records[i].times[k]});
  t.add_result("steady_state_flux", flux);
  t.add_result("tick_rate", rate);
  t.add_result("relative_difference", (rate - flux) / flux);
  t.add_result("resonance_residual", model.resonance_residual);
  try {
    const auto st = clock::tick_statistics(records);
    t.add_result("intervals", static_cast<double>(st.intervals));
    t.add_result("mean_wait", st.mean_wait);
    t.add_result("wait_variance", st.variance);
    t.add_result("accuracy", st.accuracy);
    if (st.capped) t.add_note("wait-time variance vanishes; accuracy capped");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::insufficient_data) throw;
    t.add_note("fewer than two ticks per trajectory; no wait-time statistics");
  }

  if (c.has("s_lifetime") || c.has("gate_time")) {
    const auto m = clock::metastable_margin(c.si("s_lifetime"), c.si("gate_time"));
    t.add_result("metastable_margin", m.ratio);
    t.add_result("metastable_pass", m.pass ? "true" : "false");
  }
  if (c.has("target_angle") || c.has("g_ab") || c.has("tick_time")) {
    clock::TickBudget budget{c.number("budget_mean", 0.0), c.number("budget_variance", 0.0)};
    const auto f = clock::fractional_gate_plan(c.si("target_angle"), c.si("g_ab"),
                                               c.si("tick_time"), budget,
                                               c.count("mc_samples", 100000), o.seed);
    t.add_result("per_tick_angle", f.plan.per_tick);
    t.add_result("planned_ticks", static_cast<double>(f.plan.ticks));
    t.add_result("overshoot", f.plan.overshoot ? "true" : "false");
    t.add_result("angle_error_mean", f.monte_carlo.mean_error);
    t.add_result("angle_error_rms", f.monte_carlo.rms_error);
  }
  return t;
}

// ------------------------------------------------------------------------ xy

ResultTable run_xy(const RunConfig& c, const RunOptions&) {
  xy::XYParams p;
  p.omega_c = c.si("omega_c") * kMicro;
  p.omega_a = c.si("omega_a") * kMicro;
  p.omega_b = c.si("omega_b") * kMicro;
  p.g_ab = c.si("g_ab") * kMicro;
  p.gamma_c = c.si("gamma_c") * kMicro;
  p.chi = c.has("chi") ? c.si("chi") * kMicro : p.resonant_chi();
  p.n_max = c.count("n_max", p.n_max);
  p.include_zz = c.flag("zz", false);

  xy::XYOptions opt;
  opt.injection = c.word("injection", "instantaneous") == "pulsed" ? xy::Injection::pulsed
                                                                  : xy::Injection::instantaneous;
  opt.pulse.bandwidth_ratio = c.number("bandwidth_ratio", opt.pulse.bandwidth_ratio);
  opt.pulse.photon_detuning = c.si_or("photon_detuning", 0.0) * kMicro;
  opt.duration = c.si_or("duration", 0.0) / kMicro;
  opt.samples = at_least(c, "samples", 200, 1);
  const std::string input = c.word("input", "01");
  const std::size_t index = 2 * static_cast<std::size_t>(input[0] - '0') +
                            static_cast<std::size_t>(input[1] - '0');

  const auto r = xy::simulate_tick_gate(p, StateVector::basis(4, index), opt);
  ResultTable t({"t", "p01", "p10", "cavity_population"});
  for (const auto& s : r.samples) t.add_row({s.t * kMicro, s.p01, s.p10, s.cavity_population});
  t.add_result("theta", r.theta);
  t.add_result("fidelity", r.fidelity);
  t.add_result("residual_zz_phase", r.residual_zz_phase);
  t.add_result("photon_survival", r.photon_survival);
  t.add_result("truncation_population", r.truncation_population);
  const auto zz = xy::zz_strength(p.g_ab, p.detuning_ab());
  t.add_result("zz_strength", zz.zz / kMicro);
  t.add_result("detuning_over_g", zz.ratio);
  t.add_result("zz_negligible", zz.pass ? "true" : "false");
  if (c.has("temperature")) {
    const auto th = xy::thermal_photon_number_si(c.si("omega_c") / (2.0 * kPi),
                                                 c.si("temperature"), c.si("gamma_c"));
    t.add_result("thermal_photons", th.n_th);
    t.add_result("thermal_dephasing_rate", th.dephasing_rate);
  }
  return t;
}

using Runner = std::function<ResultTable(const RunConfig&, const RunOptions&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table{
      {"dispersive-z", run_dispersive},   {"fidelity-sweep", run_fidelity_sweep},
      {"rydberg-cz", run_rydberg_cz},     {"levine-pichler", run_levine_pichler},
      {"ultrafast", run_ultrafast},       {"laser-timing", run_laser_timing},
      {"ms-gate", run_ms_gate},           {"slide", run_slide},
      {"ring", run_ring},                 {"clock", run_clock},
      {"xy-gate", run_xy},
  };
  return table;
}

}  // namespace

std::string_view tool_version() { return AQG_VERSION; }

void ResultTable::add_row(std::vector<double> row) {
  require(row.size() == columns_.size(), ErrorKind::config,
          "ResultTable: row has " + std::to_string(row.size()) + " values for " +
              std::to_string(columns_.size()) + " columns");
  rows_.push_back(std::move(row));
}

void ResultTable::add_result(const std::string& name, double value) {
  results_.emplace_back(name, format_value(value));
}

void ResultTable::add_result(const std::string& name, const std::string& value) {
  results_.emplace_back(name, value);
}

std::optional<double> ResultTable::result(const std::string& name) const {
  for (const auto& [k, v] : results_) {
    if (k != name) continue;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') return std::nullopt;
    return x;
  }
  return std::nullopt;
}

std::string render_csv(const ResultTable& table, const RunConfig& config, std::uint64_t seed) {
  std::ostringstream os;
  os << "# aqgate " << tool_version() << "\n";
  os << "# command: " << config.subcommand << "\n";
  os << "# seed: " << seed << "\n";
  std::istringstream cfg(emit_config(config));
  for (std::string line; std::getline(cfg, line);) {
    os << "# config:";
    if (!line.empty()) os << " " << line;
    os << "\n";
  }
  for (const auto& [k, v] : table.results()) os << "# result: " << k << " = " << v << "\n";
  for (const auto& n : table.notes()) os << "# note: " << n << "\n";
  for (const auto& w : table.warnings()) os << "# warning: " << w << "\n";
  for (std::size_t i = 0; i < table.columns().size(); ++i)
    os << (i ? "," : "") << table.columns()[i];
  os << "\n";
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_value(row[i]);
    os << "\n";
  }
  return os.str();
}

std::optional<std::string> config_text_from_csv(std::string_view csv) {
  std::istringstream is{std::string(csv)};
  std::string out;
  bool any = false;
  const std::string tag = "# config:";
  for (std::string line; std::getline(is, line);) {
    if (line.rfind(tag, 0) != 0) continue;
    any = true;
    std::string rest = line.substr(tag.size());
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    out += rest + "\n";
  }
  if (!any) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> seed_from_csv(std::string_view csv) {
  std::istringstream is{std::string(csv)};
  const std::string tag = "# seed: ";
  for (std::string line; std::getline(is, line);)
    if (line.rfind(tag, 0) == 0) return std::stoull(line.substr(tag.size()));
  return std::nullopt;
}

ResultTable run_table(const RunConfig& config, const RunOptions& options) {
  const auto& table = runners();
  const auto it = table.find(config.subcommand);
  require(it != table.end(), ErrorKind::config,
          "unknown subcommand '" + config.subcommand + "'");
  take_warnings();
  ResultTable out = it->second(config, options);
  for (auto& w : take_warnings()) out.add_warning(std::move(w));
  return out;
}

RunOutcome run(const RunConfig& config, const RunOptions& options) {
  RunOutcome out;
  try {
    out.table = run_table(config, options);
  } catch (const Error& e) {
    out.exit_code = is_numerical(e.kind()) ? 2 : 1;
    out.error = std::string(error_name(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.error = std::string("internal: ") + e.what();
  }
  return out;
}

// ----------------------------------------------------------------- invariants

namespace {

using Check = std::function<void(std::vector<std::string>&)>;

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

void check_zgate(std::vector<std::string>& f) {
  const auto p = zgate::DispersiveZParams::on_rule(1.0, 1.0);
  const double phase = -std::arg(zgate::final_coherence(p, {0.5, 0.0}));
  expect(f, ops::angle_distance(phase, zgate::analytic_phase(1.0, 1.0)) < 0.02,
         "dispersive phase deviates from 2 arctan(2 chi / gamma)");
  const cplx a(std::sqrt(0.5), 0.0);
  expect(f, std::abs(zgate::gate_fidelity(a * std::conj(a) * std::exp(kI * 0.7), a, a, 0.7) - 1.0) < 1e-12,
         "ideal coherence does not give unit fidelity");
}

void check_rydberg(std::vector<std::string>& f) {
  rydberg::BlockadeParams bp;
  bp.hard_blockade = true;
  const auto t = rydberg::blockade_cz(bp, StateVector::basis(9, 0)).table;
  expect(f, ops::angle_distance(t.phase[0], 0.0) < 1e-6 && ops::angle_distance(t.phase[3], kPi) < 1e-6,
         "hard blockade phase table is not (0, pi, pi, pi)");
  const auto a = rydberg::ultrafast_phase(1.0, 0.37);
  expect(f, std::abs(std::norm(a.dd) + std::norm(a.pf) - 1.0) < 1e-12, "ultrafast amplitudes not unitary");
  expect(f, std::abs(rydberg::clock_laser_distance(1e-9) - 0.299792458) < 1e-12,
         "delay-line length is not c T");
}

void check_ion(std::vector<std::string>& f) {
  expect(f, std::abs(ion::slide_diameter(0.5, 50e-6) - 25e-6) < 1e-15, "slide diameter is not v t");
  const auto s = ion::ring_schedule({});
  expect(f, std::abs(s.passes - 5.0) < 1e-12, "ring passes differ from f T");
  const auto r = ion::ms_evolve({}, StateVector::basis(4, 0));
  expect(f, r.final().fidelity_to_target > 0.99, "MS gate misses the entangled target");
}

void check_clock(std::vector<std::string>& f) {
  const auto model = clock::build_clock_model({});
  const double flux = clock::steady_state_flux(model);
  expect(f, flux > 0.0 && std::isfinite(flux), "clock steady-state flux is not positive");
  const auto m = clock::metastable_margin(4e-6, 250e-9);
  expect(f, std::abs(m.ratio - 16.0) < 1e-12 && m.pass, "metastable margin arithmetic");
}

void check_xy(std::vector<std::string>& f) {
  xy::XYParams p;
  p.gamma_c = 0.0;
  p.chi = p.resonant_chi();
  const double t = 0.01;
  const Mat u = xy::single_photon_propagator(p, t);
  expect(f, (u - xy::ideal_xy(2.0 * p.g_ab * t)).cwiseAbs().maxCoeff() < 1e-8,
         "lossless XY propagator differs from the ideal gate");
}

}  // namespace

std::vector<std::string> check_invariants(std::string_view subcommand) {
  static const std::map<std::string, Check, std::less<>> checks{
      {"dispersive-z", check_zgate}, {"fidelity-sweep", check_zgate},
      {"rydberg-cz", check_rydberg}, {"levine-pichler", check_rydberg},
      {"ultrafast", check_rydberg},  {"laser-timing", check_rydberg},
      {"ms-gate", check_ion},        {"slide", check_ion},
      {"ring", check_ion},           {"clock", check_clock},
      {"xy-gate", check_xy},
  };
  std::vector<std::string> failures;
  const auto it = checks.find(subcommand);
  if (it == checks.end()) {
    failures.push_back("unknown subcommand '" + std::string(subcommand) + "'");
    return failures;
  }
  try {
    it->second(failures);
  } catch (const std::exception& e) {
    failures.push_back(std::string("invariant check threw: ") + e.what());
  }
  return failures;
}

}  // namespace aqg::cli
