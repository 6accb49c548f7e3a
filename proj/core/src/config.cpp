// Copyright 2026 The isogame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "isogame/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "isogame/dataset.hpp"
#include "isogame/errors.hpp"
#include "isogame/sustainability.hpp"

namespace isogame {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            const std::string& expected, std::size_t line) {
  std::string msg;
  if (line) msg = "line " + std::to_string(line) + ": ";
  msg += std::string(key) + " = '" + std::string(value) + "': expected " +
         expected;
  throw ConfigError(msg, line, std::string(key));
}

double as_double(std::string_view key, std::string_view v, std::size_t line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, v, "a number", line);
  }
  return out;
}

template <typename Int>
Int as_integer(std::string_view key, std::string_view v, std::size_t line) {
  Int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, v, "a non-negative integer", line);
  }
  return out;
}

[[noreturn]] void invalid(const std::string& key, const std::string& value,
                          const std::string& allowed) {
  throw ConfigError(key + " = " + value + " is out of range; allowed: " +
                        allowed,
                    0, key);
}

// Derives alpha/beta from alpha_raw, beta_raw and omega when all three are
// present.
void resolve_weights(PayoffParams& p, bool explicit_alpha, bool explicit_beta) {
  if (!(p.alpha_raw && p.beta_raw && p.omega)) return;
  const double alpha = *p.alpha_raw * *p.omega;
  const double beta = *p.beta_raw * (1.0 - *p.omega);
  if (explicit_alpha && p.alpha != alpha) {
    throw ConfigError("alpha = " + format_number(p.alpha) +
                          " disagrees with alpha_raw * omega = " +
                          format_number(alpha),
                      0, "alpha");
  }
  if (explicit_beta && p.beta != beta) {
    throw ConfigError("beta = " + format_number(p.beta) +
                          " disagrees with beta_raw * (1 - omega) = " +
                          format_number(beta),
                      0, "beta");
  }
  p.alpha = alpha;
  p.beta = beta;
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys{
      "n",          "area_side_m",        "isolation_fraction",
      "timesteps",  "slot_minutes",       "alpha",
      "beta",       "alpha_raw",          "beta_raw",
      "omega",      "z",                  "log_base",
      "proximity_mode", "proximity_c",    "proximity_radius_m",
      "delta_max_m", "d_min_m",           "runs",
      "seed",       "r0",                 "r_tilde_mode",
      "r_tilde_value"};
  return keys;
}

void apply_config_value(ScenarioConfig& c, std::string_view key,
                        std::string_view value, std::size_t line) {
  const std::string_view v = trim(value);
  if (key == "n") {
    c.n = as_integer<std::size_t>(key, v, line);
  } else if (key == "area_side_m") {
    c.area_side = as_double(key, v, line);
  } else if (key == "isolation_fraction") {
    c.isolation_fraction = as_double(key, v, line);
  } else if (key == "timesteps") {
    c.timesteps = as_integer<std::size_t>(key, v, line);
  } else if (key == "slot_minutes") {
    c.slot_minutes = as_integer<int>(key, v, line);
  } else if (key == "alpha") {
    c.params.alpha = as_double(key, v, line);
  } else if (key == "beta") {
    c.params.beta = as_double(key, v, line);
  } else if (key == "alpha_raw") {
    c.params.alpha_raw = as_double(key, v, line);
  } else if (key == "beta_raw") {
    c.params.beta_raw = as_double(key, v, line);
  } else if (key == "omega") {
    c.params.omega = as_double(key, v, line);
  } else if (key == "z") {
    c.params.z = as_double(key, v, line);
  } else if (key == "log_base") {
    if (v == "natural" || v == "e" || v == "ln") {
      c.params.log_base = LogBase::kNatural;
    } else if (v == "decimal" || v == "10") {
      c.params.log_base = LogBase::kDecimal;
    } else {
      bad_value(key, v, "natural or decimal", line);
    }
  } else if (key == "proximity_mode") {
    if (v == "count" || v == "fixed_count") {
      c.rule.mode = ProximityRule::Mode::kFixedCount;
    } else if (v == "radius") {
      c.rule.mode = ProximityRule::Mode::kRadius;
    } else {
      bad_value(key, v, "count or radius", line);
    }
  } else if (key == "proximity_c") {
    c.rule.count = as_integer<std::size_t>(key, v, line);
  } else if (key == "proximity_radius_m") {
    c.rule.radius = as_double(key, v, line);
  } else if (key == "delta_max_m") {
    c.bounds.delta_max = as_double(key, v, line);
  } else if (key == "d_min_m") {
    c.bounds.d_min = as_double(key, v, line);
  } else if (key == "runs") {
    c.runs = as_integer<std::size_t>(key, v, line);
  } else if (key == "seed") {
    c.seed = as_integer<std::uint64_t>(key, v, line);
  } else if (key == "r0") {
    c.r0 = as_double(key, v, line);
  } else if (key == "r_tilde_mode") {
    if (v == "fraction") {
      c.r_tilde_mode = ScenarioConfig::CollectionMode::kFraction;
    } else if (v == "absolute") {
      c.r_tilde_mode = ScenarioConfig::CollectionMode::kAbsolute;
    } else {
      bad_value(key, v, "fraction or absolute", line);
    }
  } else if (key == "r_tilde_value") {
    c.r_tilde_value = as_double(key, v, line);
  } else {
    std::string msg;
    if (line) msg = "line " + std::to_string(line) + ": ";
    throw ConfigError(msg + "unknown key '" + std::string(key) + "'", line,
                      std::string(key));
  }
  if (line == 0) resolve_weights(c.params, key == "alpha", key == "beta");
}

void check_config(const ScenarioConfig& c) {
  const PayoffParams& p = c.params;
  const auto num = [](double v) { return format_number(v); };
  if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha)) invalid("alpha", num(p.alpha), "finite, >= 0");
  if (!(p.beta >= 0.0) || !std::isfinite(p.beta)) invalid("beta", num(p.beta), "finite, >= 0");
  if (p.alpha == 0.0 && p.beta == 0.0) invalid("alpha", "0", "alpha and beta not both 0");
  if (!(p.z > 0.0) || !std::isfinite(p.z)) invalid("z", num(p.z), "finite, > 0");
  if (p.omega && !(*p.omega >= 0.0 && *p.omega <= 1.0)) {
    invalid("omega", num(*p.omega), "[0, 1] (weight constraint)");
  }
  if (p.alpha_raw.has_value() != p.beta_raw.has_value()) {
    invalid(p.alpha_raw ? "beta_raw" : "alpha_raw", "(missing)",
            "alpha_raw and beta_raw together");
  }
  if (p.alpha_raw && !p.omega) invalid("omega", "(missing)", "required with alpha_raw/beta_raw");
  if (p.alpha_raw && !(*p.alpha_raw > 0.0)) invalid("alpha_raw", num(*p.alpha_raw), "> 0");
  if (p.beta_raw && !(*p.beta_raw > 0.0)) invalid("beta_raw", num(*p.beta_raw), "> 0");
  if (c.n < 1) invalid("n", std::to_string(c.n), ">= 1");
  if (!(c.area_side > 0.0) || !std::isfinite(c.area_side)) {
    invalid("area_side_m", num(c.area_side), "finite, > 0");
  }
  if (!(c.isolation_fraction >= 0.0 && c.isolation_fraction <= 1.0)) {
    invalid("isolation_fraction", num(c.isolation_fraction), "[0, 1]");
  }
  if (c.timesteps < 1) invalid("timesteps", "0", ">= 1");
  if (c.slot_minutes <= 0 || kMinutesPerDay % c.slot_minutes != 0) {
    invalid("slot_minutes", std::to_string(c.slot_minutes), "a divisor of 1440");
  }
  if (c.rule.mode == ProximityRule::Mode::kFixedCount) {
    if (c.rule.count < 1 || c.rule.count > c.n - 1) {
      invalid("proximity_c", std::to_string(c.rule.count),
              "1 .. n-1 = " + std::to_string(c.n - 1));
    }
  } else if (!(c.rule.radius > 0.0) || !std::isfinite(c.rule.radius)) {
    invalid("proximity_radius_m", num(c.rule.radius), "finite, > 0");
  }
  if (!(c.bounds.delta_max >= 0.0) || !std::isfinite(c.bounds.delta_max)) {
    invalid("delta_max_m", num(c.bounds.delta_max), "finite, >= 0");
  }
  if (!(c.bounds.d_min > 0.0) || !std::isfinite(c.bounds.d_min)) {
    invalid("d_min_m", num(c.bounds.d_min), "finite, > 0");
  }
  if (c.runs < 1) invalid("runs", "0", ">= 1");
  if (!(c.r0 >= 0.0) || !std::isfinite(c.r0)) invalid("r0", num(c.r0), "finite, >= 0");
  if (!(c.r_tilde_value >= 0.0) || !std::isfinite(c.r_tilde_value)) {
    invalid("r_tilde_value", num(c.r_tilde_value), "finite, >= 0");
  }
  // Anything the per-key checks missed.
  try {
    validate_config(c);
  } catch (const ParameterError& e) {
    const std::string what = e.what();
    throw ConfigError(what, 0, what.substr(0, what.find(':')));
  }
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig c;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                            ": expected 'key = value'",
                        line_no, "");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (!seen.emplace(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                            std::string(key) + "'",
                        line_no, std::string(key));
    }
    apply_config_value(c, key, line.substr(eq + 1), line_no);
  }
  resolve_weights(c.params, seen.contains("alpha"), seen.contains("beta"));
  check_config(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read config file " + path.string(), 0, "");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream os;
  const auto kv = [&os](std::string_view k, const std::string& v) {
    os << k << " = " << v << '\n';
  };
  const auto num = [](double v) { return format_number(v); };
  kv("n", std::to_string(c.n));
  kv("area_side_m", num(c.area_side));
  kv("isolation_fraction", num(c.isolation_fraction));
  kv("timesteps", std::to_string(c.timesteps));
  kv("slot_minutes", std::to_string(c.slot_minutes));
  kv("alpha", num(c.params.alpha));
  kv("beta", num(c.params.beta));
  if (c.params.alpha_raw) kv("alpha_raw", num(*c.params.alpha_raw));
  if (c.params.beta_raw) kv("beta_raw", num(*c.params.beta_raw));
  if (c.params.omega) kv("omega", num(*c.params.omega));
  kv("z", num(c.params.z));
  kv("log_base", c.params.log_base == LogBase::kNatural ? "natural" : "decimal");
  kv("proximity_mode",
     c.rule.mode == ProximityRule::Mode::kFixedCount ? "count" : "radius");
  kv("proximity_c", std::to_string(c.rule.count));
  kv("proximity_radius_m", num(c.rule.radius));
  kv("delta_max_m", num(c.bounds.delta_max));
  kv("d_min_m", num(c.bounds.d_min));
  kv("runs", std::to_string(c.runs));
  kv("seed", std::to_string(c.seed));
  kv("r0", num(c.r0));
  kv("r_tilde_mode", c.r_tilde_mode == ScenarioConfig::CollectionMode::kFraction
                         ? "fraction"
                         : "absolute");
  kv("r_tilde_value", num(c.r_tilde_value));
  return os.str();
}

}  // namespace isogame
