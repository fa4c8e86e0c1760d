#include "wavekin/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wavekin/csv_io.hpp"
#include "wavekin/entropy_density.hpp"
#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

const std::set<std::string> kKnownKeys = {
    "kernel.variant",       "kernel.d",
    "kernel.rho",           "kernel.beta",
    "grid.delta",           "grid.m",
    "grid.cutoff_index",    "initial.kind",
    "initial.a",            "initial.b",
    "initial.height",       "initial.path",
    "solver.t_end",         "solver.dt",
    "solver.method",        "solver.theta",
    "solver.snapshot_every","solver.diagnostics_every",
    "entropy.density",      "diagnostics.tail_r",
    "diagnostics.l1_windows","diagnostics.test_functions",
    "output.dir",
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

[[noreturn]] void bad_key(const std::string& key, const std::string& msg) {
  throw ConfigError(key + ": " + msg);
}

double parse_real(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(x)) bad_key(key, "not a finite real: '" + v + "'");
    return x;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad_key(key, "not a real number: '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) bad_key(key, "not an integer: '" + v + "'");
    return x;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad_key(key, "not an integer: '" + v + "'");
  }
}

// "a:b" pair lists, e.g. "1:2, 3:4".
std::vector<std::pair<double, double>> parse_pairs(const std::string& key,
                                                   const std::string& v) {
  std::vector<std::pair<double, double>> pairs;
  for (const auto& item : split(v, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      bad_key(key, "expected 'a:b' pairs, got '" + item + "'");
    }
    pairs.emplace_back(parse_real(key, trim(item.substr(0, colon))),
                       parse_real(key, trim(item.substr(colon + 1))));
  }
  return pairs;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!kKnownKeys.count(key)) {
      throw ConfigError(key + ": unknown configuration key");
    }
    if (kv.count(key)) {
      throw ConfigError(key + ": duplicate key");
    }
    kv[key] = value;
  }

  auto get = [&kv](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  ExperimentConfig cfg;
  cfg.raw_text = text;
  cfg.hash = fnv1a_hash(text);

  // Kernel
  std::string variant = "acoustic";
  if (const auto* v = get("kernel.variant")) variant = *v;
  if (variant == "acoustic") {
    int d = 2;
    if (const auto* v = get("kernel.d")) d = parse_int("kernel.d", *v);
    if (get("kernel.rho") || get("kernel.beta")) {
      throw ConfigError("kernel.rho/kernel.beta apply to the regularized variant only");
    }
    cfg.kernel = InteractionKernel::acoustic(d);
  } else if (variant == "regularized") {
    if (get("kernel.d")) {
      throw ConfigError("kernel.d applies to the acoustic variant only");
    }
    double rho = 2.0, beta = 1.0;
    if (const auto* v = get("kernel.rho")) rho = parse_real("kernel.rho", *v);
    if (const auto* v = get("kernel.beta")) beta = parse_real("kernel.beta", *v);
    cfg.kernel = InteractionKernel::regularized(rho, beta);
  } else {
    bad_key("kernel.variant", "expected 'acoustic' or 'regularized', got '" +
                                  variant + "'");
  }
  const KernelValidation validation = validate_params(cfg.kernel);
  if (!validation.admissible) {
    std::string what = "kernel parameters are not admissible; violated:";
    for (const auto& c : validation.violated_conditions) what += " " + c + ";";
    throw ConfigError("kernel.variant: " + what);
  }

  // Grid
  double delta = 0.05;
  int m = 200, cutoff_index = 100;
  if (const auto* v = get("grid.delta")) delta = parse_real("grid.delta", *v);
  if (const auto* v = get("grid.m")) m = parse_int("grid.m", *v);
  if (const auto* v = get("grid.cutoff_index"))
    cutoff_index = parse_int("grid.cutoff_index", *v);
  cfg.grid = build_grid(delta, m, cutoff_index);

  // Initial datum
  if (const auto* v = get("initial.kind")) {
    if (*v == "zero") cfg.initial.kind = InitialDataSpec::Kind::Zero;
    else if (*v == "indicator") cfg.initial.kind = InitialDataSpec::Kind::Indicator;
    else if (*v == "bump") cfg.initial.kind = InitialDataSpec::Kind::Bump;
    else if (*v == "file") cfg.initial.kind = InitialDataSpec::Kind::File;
    else bad_key("initial.kind", "expected zero|indicator|bump|file, got '" + *v + "'");
  }
  if (const auto* v = get("initial.a")) cfg.initial.a = parse_real("initial.a", *v);
  if (const auto* v = get("initial.b")) cfg.initial.b = parse_real("initial.b", *v);
  if (const auto* v = get("initial.height"))
    cfg.initial.height = parse_real("initial.height", *v);
  if (const auto* v = get("initial.path")) cfg.initial.path = *v;
  if (cfg.initial.kind == InitialDataSpec::Kind::File && cfg.initial.path.empty()) {
    bad_key("initial.path", "required when initial.kind = file");
  }
  if (cfg.initial.kind == InitialDataSpec::Kind::Indicator ||
      cfg.initial.kind == InitialDataSpec::Kind::Bump) {
    if (!(cfg.initial.a > 0.0) || !(cfg.initial.b > cfg.initial.a)) {
      bad_key("initial.a", "initial support must satisfy 0 < a < b");
    }
    if (cfg.initial.b > cfg.grid.cutoff()) {
      bad_key("initial.b", "initial support must stay within the cutoff N");
    }
    if (cfg.initial.height < 0.0) bad_key("initial.height", "must be >= 0");
  }

  // Solver
  if (const auto* v = get("solver.t_end"))
    cfg.solver.t_end = parse_real("solver.t_end", *v);
  if (cfg.solver.t_end < 0.0) bad_key("solver.t_end", "must be >= 0");
  if (const auto* v = get("solver.dt")) {
    if (*v == "auto") {
      cfg.solver.auto_dt = true;
    } else {
      cfg.solver.auto_dt = false;
      cfg.solver.dt = parse_real("solver.dt", *v);
      if (!(cfg.solver.dt > 0.0)) bad_key("solver.dt", "must be positive or 'auto'");
    }
  }
  if (const auto* v = get("solver.method")) {
    if (*v == "euler") cfg.solver.method = TimeMethod::Euler;
    else if (*v == "rk4") cfg.solver.method = TimeMethod::Rk4;
    else bad_key("solver.method", "expected euler|rk4, got '" + *v + "'");
  }
  if (const auto* v = get("solver.theta"))
    cfg.solver.theta = parse_real("solver.theta", *v);
  if (!(cfg.solver.theta > 0.0) || cfg.solver.theta > 1.0) {
    bad_key("solver.theta", "must lie in (0, 1]");
  }
  if (const auto* v = get("solver.snapshot_every"))
    cfg.solver.snapshot_every = parse_int("solver.snapshot_every", *v);
  if (const auto* v = get("solver.diagnostics_every"))
    cfg.solver.diagnostics_every = parse_int("solver.diagnostics_every", *v);
  if (cfg.solver.snapshot_every < 1) bad_key("solver.snapshot_every", "must be >= 1");
  if (cfg.solver.diagnostics_every < 1)
    bad_key("solver.diagnostics_every", "must be >= 1");

  // Diagnostics
  if (const auto* v = get("entropy.density")) {
    cfg.diagnostics.entropy_names.clear();
    for (const auto& name : split(*v, ',')) {
      if (name.empty()) continue;
      entropy_by_name(name);  // validates
      cfg.diagnostics.entropy_names.push_back(name);
    }
  }
  if (const auto* v = get("diagnostics.tail_r")) {
    for (const auto& item : split(*v, ',')) {
      if (item.empty()) continue;
      const double r = parse_real("diagnostics.tail_r", item);
      if (!(r > 0.0) || !(r < cfg.grid.omega_max())) {
        bad_key("diagnostics.tail_r", "R must satisfy 0 < R < omega_max");
      }
      cfg.diagnostics.tail_radii.push_back(r);
    }
  }
  if (const auto* v = get("diagnostics.l1_windows")) {
    cfg.diagnostics.l1_windows = parse_pairs("diagnostics.l1_windows", *v);
    for (const auto& [a, b] : cfg.diagnostics.l1_windows) {
      if (!(a > 0.0) || !(b > a) || b > cfg.grid.omega_max()) {
        bad_key("diagnostics.l1_windows", "windows must satisfy 0 < a < b <= omega_max");
      }
    }
  }
  if (const auto* v = get("diagnostics.test_functions")) {
    cfg.diagnostics.test_functions = parse_pairs("diagnostics.test_functions", *v);
    for (const auto& [a, b] : cfg.diagnostics.test_functions) {
      if (!(a > 0.0) || !(b > a) || !(b < cfg.grid.omega_max())) {
        bad_key("diagnostics.test_functions",
                "bump supports must satisfy 0 < a < b < omega_max");
      }
    }
    if (!cfg.diagnostics.test_functions.empty() &&
        cfg.solver.snapshot_every != cfg.solver.diagnostics_every) {
      bad_key("diagnostics.test_functions",
              "weak residuals require snapshot_every == diagnostics_every");
    }
  }
  if (const auto* v = get("output.dir")) cfg.output_dir = *v;
  if (cfg.output_dir.empty()) bad_key("output.dir", "must not be empty");

  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Spectrum make_initial(const ExperimentConfig& config) {
  const auto& init = config.initial;
  switch (init.kind) {
    case InitialDataSpec::Kind::Zero: {
      Spectrum f;
      f.values.assign(config.grid.size(), 0.0);
      return f;
    }
    case InitialDataSpec::Kind::Indicator:
      return project_initial(
          config.grid, [&](double) { return init.height; }, init.a, init.b);
    case InitialDataSpec::Kind::Bump: {
      const double a = init.a, b = init.b, h = init.height;
      return project_initial(
          config.grid,
          [a, b, h](double w) {
            const double s = (2.0 * w - a - b) / (b - a);
            const double u = 1.0 - s * s;
            return u > 0.0 ? h * u * u * u : 0.0;
          },
          a, b);
    }
    case InitialDataSpec::Kind::File: {
      const SpectrumFile file = read_spectrum_csv(init.path);
      if (static_cast<int>(file.values.size()) != config.grid.size()) {
        throw ConfigError("initial.path: snapshot has " +
                          std::to_string(file.values.size()) +
                          " rows but the grid has " +
                          std::to_string(config.grid.size()) + " nodes");
      }
      for (int i = 0; i < config.grid.size(); ++i) {
        if (std::abs(file.omegas[i] - config.grid.omega(i)) >
            1e-12 * std::max(1.0, config.grid.omega_max())) {
          throw ConfigError("initial.path: snapshot nodes do not match the grid");
        }
        if (!(file.values[i] >= 0.0)) {
          throw InputError("initial.path: snapshot contains negative values");
        }
        if (i > config.grid.cutoff_index && file.values[i] != 0.0) {
          throw ConfigError("initial.path: snapshot must be supported in [0, N]");
        }
      }
      Spectrum f;
      f.values = file.values;
      return f;
    }
  }
  throw ConfigError("initial.kind: unhandled kind");
}

}  // namespace wavekin
