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

#include "aqg/cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "aqg/core/error.hpp"
#include "aqg/core/types.hpp"

namespace aqg::cli {

namespace {

struct UnitEntry {
  Dim dim;
  std::string_view unit;
  double factor;
};

constexpr std::array<UnitEntry, 24> kUnits{{
    {Dim::rate, "Hz", 1.0},
    {Dim::rate, "kHz", 1e3},
    {Dim::rate, "MHz", 1e6},
    {Dim::rate, "GHz", 1e9},
    {Dim::rate, "THz", 1e12},
    {Dim::time, "s", 1.0},
    {Dim::time, "ms", 1e-3},
    {Dim::time, "us", 1e-6},
    {Dim::time, "ns", 1e-9},
    {Dim::time, "ps", 1e-12},
    {Dim::temperature, "K", 1.0},
    {Dim::temperature, "mK", 1e-3},
    {Dim::temperature, "uK", 1e-6},
    {Dim::length, "m", 1.0},
    {Dim::length, "mm", 1e-3},
    {Dim::length, "um", 1e-6},
    {Dim::length, "nm", 1e-9},
    {Dim::velocity, "m/s", 1.0},
    {Dim::velocity, "mm/s", 1e-3},
    {Dim::velocity, "um/s", 1e-6},
    {Dim::velocity, "km/s", 1e3},
    {Dim::angle, "rad", 1.0},
    {Dim::angle, "deg", kPi / 180.0},
    {Dim::angle, "pi", kPi},
}};

bool is_physical(Dim d) {
  return d == Dim::rate || d == Dim::time || d == Dim::temperature || d == Dim::length ||
         d == Dim::velocity || d == Dim::angle;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format_number(double x) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

/// Leading number of `text`; the rest (trimmed) goes to `rest`.
bool split_number(std::string_view text, double& number, std::string_view& rest) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, number);
  if (res.ec != std::errc() || !std::isfinite(number)) return false;
  rest = trim(std::string_view(res.ptr, static_cast<std::size_t>(last - res.ptr)));
  return true;
}

class Parser {
 public:
  Parser(std::string_view subcommand) : requested_(subcommand) {}

  void feed_text(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      const auto end = nl == std::string_view::npos ? text.size() : nl;
      ++line_no;
      line(text.substr(pos, end - pos), "line " + std::to_string(line_no));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  void feed_override(std::string_view text, std::size_t index) {
    const std::string where = "argument " + std::to_string(index);
    in_sweep_ = false;
    ensure_section(where);
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      error(where, "expected key=value, got '" + std::string(text) + "'");
      return;
    }
    assignment(trim(text.substr(0, eq)), trim(text.substr(eq + 1)), where, true);
  }

  ParseResult finish() {
    ParseResult out;
    if (!schema_) {
      if (!requested_.empty()) {
        select(requested_, "input");
      } else if (errors_.empty()) {
        error("input", "missing [subcommand] header");
      }
    }
    if (schema_) {
      for (const auto& k : schema_->keys)
        if (k.required && !config_.has(k.name) && !attempted_.count(k.name))
          error("input", "missing required key '" + k.name + "' (" + dim_name(k.dim) + ")");
      check_relative();
    }
    out.config = std::move(config_);
    out.errors = std::move(errors_);
    return out;
  }

 private:
  void error(const std::string& where, const std::string& what) {
    errors_.push_back(where + ": " + what);
  }

  bool select(std::string_view name, const std::string& where) {
    const auto& names = subcommands();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      error(where, "unknown subcommand '" + std::string(name) + "'");
      return false;
    }
    schema_ = &schema(name);
    config_.subcommand = std::string(name);
    return true;
  }

  void ensure_section(const std::string& where) {
    if (!schema_ && !requested_.empty()) select(requested_, where);
  }

  void line(std::string_view raw, const std::string& where) {
    const auto hash = raw.find('#');
    std::string_view s = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (s.empty()) return;

    if (s.front() == '[') {
      if (s.back() != ']') {
        error(where, "malformed section header '" + std::string(s) + "'");
        return;
      }
      const std::string_view name = trim(s.substr(1, s.size() - 2));
      if (name == "sweep") {
        if (!schema_ && !header_failed_) ensure_section(where);
        if (seen_sweep_) error(where, "duplicate [sweep] block");
        in_sweep_ = true;
        seen_sweep_ = true;
        return;
      }
      if (schema_ || header_failed_) {
        error(where, "unexpected section [" + std::string(name) + "]");
        return;
      }
      if (!requested_.empty() && name != requested_) {
        error(where, "config is for [" + std::string(name) + "] but the subcommand is '" +
                         requested_ + "'");
        header_failed_ = true;
        return;
      }
      if (!select(name, where)) header_failed_ = true;
      return;
    }

    if (!schema_ && !header_failed_) {
      ensure_section(where);
      if (!schema_) {
        error(where, "key before the [subcommand] header");
        header_failed_ = true;
        return;
      }
    }
    if (in_sweep_) {
      sweep_line(s, where);
      return;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      error(where, "expected 'key = value unit', got '" + std::string(s) + "'");
      return;
    }
    assignment(trim(s.substr(0, eq)), trim(s.substr(eq + 1)), where, false);
  }

  /// Parses `text` against `spec`; false after reporting an error.
  bool value(const KeySpec& spec, std::string_view text, const std::string& where, Value& out) {
    const std::string label = "'" + spec.name + "'";
    if (text.empty()) {
      error(where, "missing value for " + label);
      return false;
    }
    if (spec.dim == Dim::flag) {
      if (text != "true" && text != "false") {
        error(where, label + " expects true or false, got '" + std::string(text) + "'");
        return false;
      }
      out.word = std::string(text);
      return true;
    }
    if (spec.dim == Dim::choice) {
      if (std::find(spec.choices.begin(), spec.choices.end(), text) == spec.choices.end()) {
        std::string opts;
        for (const auto& c : spec.choices) opts += (opts.empty() ? "" : ", ") + c;
        error(where, label + " must be one of {" + opts + "}, got '" + std::string(text) + "'");
        return false;
      }
      out.word = std::string(text);
      return true;
    }
    std::string_view unit;
    if (!split_number(text, out.number, unit)) {
      error(where, "malformed number '" + std::string(text) + "' for " + label);
      return false;
    }
    out.unit = std::string(unit);
    if (spec.dim == Dim::number || spec.dim == Dim::count) {
      if (!unit.empty()) {
        error(where, "unknown unit '" + out.unit + "' for dimensionless " + label);
        return false;
      }
      if (spec.dim == Dim::count && (out.number < 0.0 || out.number != std::floor(out.number))) {
        error(where, label + " must be a nonnegative integer");
        return false;
      }
      return true;
    }
    if (unit.empty()) {
      error(where, label + " needs a unit (" + dim_name(spec.dim) + ")");
      return false;
    }
    if (unit_factor(spec.dim, unit)) return true;
    const KeySpec* ref = schema_->find(unit);
    if (ref && ref->dim == spec.dim) {
      relative_.push_back({where, spec.name, out.unit});
      return true;
    }
    error(where, "unknown unit '" + out.unit + "' for " + label + " (" + dim_name(spec.dim) + ")");
    return false;
  }

  void assignment(std::string_view key, std::string_view text, const std::string& where,
                  bool is_override) {
    if (!schema_) return;
    const KeySpec* spec = schema_->find(key);
    if (!spec) {
      error(where, "unknown key '" + std::string(key) + "' for [" + schema_->name + "]");
      return;
    }
    if (!is_override && config_.has(spec->name)) {
      error(where, "duplicate key '" + spec->name + "'");
      return;
    }
    attempted_.insert(spec->name);
    Value v;
    if (value(*spec, text, where, v)) config_.values[spec->name] = v;
  }

  void sweep_line(std::string_view s, const std::string& where) {
    // key: min .. max unit, N samples
    const auto colon = s.find(':');
    const auto dots = s.find("..");
    const auto comma = s.rfind(',');
    if (colon == std::string_view::npos || dots == std::string_view::npos ||
        comma == std::string_view::npos || !(colon < dots && dots < comma)) {
      error(where, "expected 'key: min .. max unit, N samples'");
      return;
    }
    if (config_.sweep) {
      error(where, "only one swept parameter is supported");
      return;
    }
    const std::string_view key = trim(s.substr(0, colon));
    const KeySpec* spec = schema_->find_sweep(key);
    if (!spec) {
      error(where, "'" + std::string(key) + "' cannot be swept in [" + schema_->name + "]");
      return;
    }
    SweepSpec sw;
    sw.key = spec->name;
    bool ok = true;

    Value lo;
    std::string_view lo_rest;
    const std::string_view lo_text = trim(s.substr(colon + 1, dots - colon - 1));
    if (!split_number(lo_text, lo.number, lo_rest) || !lo_rest.empty()) {
      error(where, "malformed sweep minimum '" + std::string(lo_text) + "'");
      ok = false;
    }
    Value hi;
    if (!value(*spec, trim(s.substr(dots + 2, comma - dots - 2)), where, hi)) ok = false;

    const std::string_view tail = trim(s.substr(comma + 1));
    double n = 0.0;
    std::string_view word;
    if (!split_number(tail, n, word) || word != "samples" || n < 2.0 || n != std::floor(n)) {
      error(where, "sweep needs 'N samples' with an integer N >= 2");
      ok = false;
    }
    if (!ok) return;
    sw.min = lo.number;
    sw.max = hi.number;
    sw.unit = hi.unit;
    sw.samples = static_cast<std::size_t>(n);
    config_.sweep = sw;
  }

  void check_relative() {
    for (const auto& r : relative_) {
      // The key may have been overridden with an absolute unit since.
      std::set<std::string> seen{r.key};
      std::string unit = r.unit;
      while (true) {
        if (!config_.has(unit)) {
          error(r.where, "'" + r.key + "' is relative to '" + unit + "', which is not set");
          break;
        }
        if (!seen.insert(unit).second) {
          error(r.where, "relative units of '" + r.key + "' form a cycle");
          break;
        }
        const Value& v = config_.values.at(unit);
        if (unit_factor(schema_->find(unit)->dim, v.unit)) break;
        unit = v.unit;
      }
    }
  }

  struct Relative {
    std::string where;
    std::string key;
    std::string unit;
  };

  std::string requested_;
  const CommandSchema* schema_ = nullptr;
  bool header_failed_ = false;
  bool in_sweep_ = false;
  bool seen_sweep_ = false;
  RunConfig config_;
  std::vector<std::string> errors_;
  std::vector<Relative> relative_;
  std::set<std::string> attempted_;
};

}  // namespace

std::optional<double> unit_factor(Dim dim, std::string_view unit) {
  for (const auto& u : kUnits)
    if (u.dim == dim && u.unit == unit) return u.factor;
  return std::nullopt;
}

std::string dim_name(Dim dim) {
  switch (dim) {
    case Dim::rate: return "rate";
    case Dim::time: return "time";
    case Dim::temperature: return "temperature";
    case Dim::length: return "length";
    case Dim::velocity: return "velocity";
    case Dim::angle: return "angle";
    case Dim::number: return "number";
    case Dim::count: return "count";
    case Dim::flag: return "flag";
    case Dim::choice: return "choice";
  }
  return "?";
}

ParseResult parse_config(std::string_view text, std::string_view subcommand,
                         const std::vector<std::string>& overrides) {
  Parser p(subcommand);
  p.feed_text(text);
  for (std::size_t i = 0; i < overrides.size(); ++i) p.feed_override(overrides[i], i + 1);
  return p.finish();
}

namespace {

double resolve(const RunConfig& c, const CommandSchema& s, const KeySpec& spec, const Value& v,
               int depth) {
  require(depth < 32, ErrorKind::config, "relative units nest too deeply");
  if (!is_physical(spec.dim)) return v.number;
  if (auto f = unit_factor(spec.dim, v.unit)) {
    double x = v.number * *f;
    if (spec.dim == Dim::rate && spec.rate_kind == RateKind::cyclic) x *= 2.0 * kPi;
    return x;
  }
  const KeySpec* ref = s.find(v.unit);
  require(ref && c.has(v.unit), ErrorKind::config, "unresolved unit '" + v.unit + "'");
  return v.number * resolve(c, s, *ref, c.values.at(v.unit), depth + 1);
}

}  // namespace

double RunConfig::si(const std::string& key) const {
  const CommandSchema& s = schema(subcommand);
  const KeySpec* spec = s.find(key);
  require(spec != nullptr, ErrorKind::config, "unknown key '" + key + "'");
  require(has(key), ErrorKind::config, "key '" + key + "' is not set");
  return resolve(*this, s, *spec, values.at(key), 0);
}

double RunConfig::si_or(const std::string& key, double fallback) const {
  return has(key) ? si(key) : fallback;
}

std::size_t RunConfig::count(const std::string& key, std::size_t fallback) const {
  return has(key) ? static_cast<std::size_t>(values.at(key).number) : fallback;
}

bool RunConfig::flag(const std::string& key, bool fallback) const {
  return has(key) ? values.at(key).word == "true" : fallback;
}

std::string RunConfig::word(const std::string& key, const std::string& fallback) const {
  return has(key) ? values.at(key).word : fallback;
}

double RunConfig::number(const std::string& key, double fallback) const {
  return has(key) ? values.at(key).number : fallback;
}

std::vector<double> RunConfig::sweep_points() const {
  if (!sweep) return {};
  const CommandSchema& s = schema(subcommand);
  const KeySpec* spec = s.find_sweep(sweep->key);
  require(spec != nullptr, ErrorKind::config, "sweep key '" + sweep->key + "' is not sweepable");
  Value unit_one{1.0, sweep->unit, {}};
  const double scale = resolve(*this, s, *spec, unit_one, 0);
  std::vector<double> out(sweep->samples);
  const double n = static_cast<double>(sweep->samples - 1);
  for (std::size_t i = 0; i < sweep->samples; ++i) {
    const double x = sweep->min + (sweep->max - sweep->min) * static_cast<double>(i) / n;
    out[i] = x * scale;
  }
  return out;
}

std::string emit_config(const RunConfig& config) {
  std::ostringstream os;
  os << "[" << config.subcommand << "]\n";
  for (const auto& [key, v] : config.values) {
    os << key << " = ";
    if (!v.word.empty()) {
      os << v.word;
    } else {
      os << format_number(v.number);
      if (!v.unit.empty()) os << " " << v.unit;
    }
    os << "\n";
  }
  if (config.sweep) {
    const auto& s = *config.sweep;
    os << "\n[sweep]\n"
       << s.key << ": " << format_number(s.min) << " .. " << format_number(s.max) << " " << s.unit
       << ", " << s.samples << " samples\n";
  }
  return os.str();
}

}  // namespace aqg::cli
