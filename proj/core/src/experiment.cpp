#include "wavekin/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "wavekin/csv_io.hpp"
#include "wavekin/entropy.hpp"
#include "wavekin/errors.hpp"
#include "wavekin/weakform.hpp"

namespace wavekin {

namespace {

using nlohmann::json;

MonotonicityVerdict check_nonincreasing(const std::string& quantity,
                                        const std::vector<double>& series) {
  MonotonicityVerdict v;
  v.quantity = quantity;
  v.initial = series.front();
  v.final_value = series.back();
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    v.max_step_violation =
        std::max(v.max_step_violation, series[k + 1] - series[k]);
  }
  v.allowed = 1e-12 * std::abs(v.initial);
  v.pass = v.max_step_violation <= v.allowed;
  return v;
}

std::string snapshot_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%05zu.csv", index);
  return buf;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  RunResult result;
  const fs::path out_dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + config.output_dir);

  {
    std::ofstream echo(out_dir / "config.echo.txt");
    if (!echo) throw IoError("cannot write config echo");
    echo << config.raw_text;
    result.files_written.push_back((out_dir / "config.echo.txt").string());
  }

  DiagnosticsSpec spec;
  for (const auto& name : config.diagnostics.entropy_names) {
    spec.entropies.push_back(entropy_by_name(name));
  }
  spec.tail_radii = config.diagnostics.tail_radii;
  spec.l1_windows = config.diagnostics.l1_windows;

  const Spectrum initial = make_initial(config);
  const bool trivial = std::all_of(initial.values.begin(), initial.values.end(),
                                   [](double v) { return v == 0.0; });
  // Tail fractions are undefined on a zero spectrum; drop them rather than
  // fail the trivial run.
  if (trivial) spec.tail_radii.clear();

  result.trajectory =
      integrate(initial, config.kernel, config.grid, config.solver, spec);
  const Trajectory& traj = result.trajectory;

  // Weak residual series per configured test function (records and
  // snapshots share a cadence whenever test functions are configured).
  std::vector<std::string> weakres_ids;
  std::vector<std::vector<double>> weakres_series;
  for (const auto& [a, b] : config.diagnostics.test_functions) {
    const TestFunction phi = TestFunction::bump(config.grid, a, b);
    const auto series = weak_residual(traj, phi, config.kernel, config.grid);
    if (series.size() != traj.records.size()) {
      throw ContractError("weak-residual series does not align with records");
    }
    weakres_ids.push_back(phi.id());
    std::vector<double> values;
    values.reserve(series.size());
    for (const auto& [t, r] : series) values.push_back(r);
    weakres_series.push_back(std::move(values));
  }

  result.columns =
      diagnostics_columns(config.diagnostics.entropy_names, spec.tail_radii,
                          spec.l1_windows, weakres_ids);
  const fs::path diag_path = out_dir / "diagnostics.csv";
  write_diagnostics_csv(diag_path.string(), result.columns, traj.records,
                        weakres_series, config.hash);
  result.files_written.push_back(diag_path.string());

  json snapshot_index = json::array();
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    const fs::path p = out_dir / snapshot_name(k);
    write_spectrum_csv(p.string(), config.grid, traj.snapshots[k].spectrum,
                       config.hash);
    snapshot_index.push_back(
        {{"file", snapshot_name(k)}, {"time", traj.snapshots[k].time}});
    result.files_written.push_back(p.string());
  }

  // Verdicts.
  std::vector<double> mass_series, energy_series;
  for (const auto& rec : traj.records) {
    mass_series.push_back(rec.mass_0N);
    energy_series.push_back(rec.energy);
  }
  result.monotonicity.push_back(check_nonincreasing("mass_0N", mass_series));
  for (std::size_t e = 0; e < spec.entropies.size(); ++e) {
    if (spec.entropies[e].grade != EntropyGrade::Superlinear) continue;
    std::vector<double> series;
    for (const auto& rec : traj.records) series.push_back(rec.entropies[e]);
    result.monotonicity.push_back(
        check_nonincreasing("entropy_" + spec.entropies[e].name, series));
  }

  const double e0 = energy_series.front();
  double drift = 0.0;
  for (double e : energy_series) drift = std::max(drift, std::abs(e - e0));
  result.energy_drift_rel = e0 != 0.0 ? drift / std::abs(e0) : drift;
  result.energy_pass = result.energy_drift_rel <= 1e-10;

  result.positivity_support_pass = true;
  for (const auto& snap : traj.snapshots) {
    for (int i = 0; i <= config.grid.m; ++i) {
      const double v = snap.spectrum.values[i];
      if (v < 0.0 || (i > 2 * config.grid.cutoff_index && v != 0.0)) {
        result.positivity_support_pass = false;
      }
    }
  }

  // Qualitative cascade statistics (reported, not gating).
  for (std::size_t w = 0; w < spec.l1_windows.size(); ++w) {
    double run_max = 0.0;
    for (const auto& rec : traj.records) {
      run_max = std::max(run_max, rec.l1_windows[w]);
    }
    TrendVerdict t;
    t.quantity = result.columns[3 + spec.entropies.size() + 1 +
                                spec.tail_radii.size() + w];
    t.value = run_max > 0.0 ? traj.records.back().l1_windows[w] / run_max : 0.0;
    t.pass = run_max == 0.0 || t.value < 0.8;
    result.trends.push_back(t);
  }
  for (std::size_t r = 0; r < spec.tail_radii.size(); ++r) {
    TrendVerdict t;
    t.quantity = result.columns[3 + spec.entropies.size() + 1 + r];
    const std::size_t half = traj.records.size() / 2;
    bool nondec = true;
    double worst = 0.0;
    for (std::size_t k = half; k + 1 < traj.records.size(); ++k) {
      const double diff =
          traj.records[k + 1].tail_fractions[r] - traj.records[k].tail_fractions[r];
      worst = std::min(worst, diff);
      if (diff < -1e-12) nondec = false;
    }
    t.value = worst;
    t.pass = nondec;
    result.trends.push_back(t);
  }

  bool verdicts_pass = result.energy_pass && result.positivity_support_pass &&
                       !traj.error.has_value();
  for (const auto& v : result.monotonicity) verdicts_pass &= v.pass;
  result.exit_code = verdicts_pass ? 0 : 3;

  json summary;
  summary["config_hash"] = hash_hex(config.hash);
  summary["steps"] = traj.steps;
  summary["clamped_mass_total"] = traj.clamped_mass_total;
  summary["aborted"] = traj.error.has_value();
  if (traj.error) summary["error"] = *traj.error;
  json final_values;
  const DiagnosticsRecord& last = traj.records.back();
  final_values["t"] = last.time;
  final_values["mass_0N"] = last.mass_0N;
  final_values["energy"] = last.energy;
  for (std::size_t e = 0; e < spec.entropies.size(); ++e) {
    final_values["entropy_" + spec.entropies[e].name] = last.entropies[e];
  }
  final_values["W"] = last.dissipation_W;
  for (std::size_t r = 0; r < spec.tail_radii.size(); ++r) {
    final_values[result.columns[3 + spec.entropies.size() + 1 + r]] =
        last.tail_fractions[r];
  }
  for (std::size_t w = 0; w < spec.l1_windows.size(); ++w) {
    final_values[result.columns[3 + spec.entropies.size() + 1 +
                                spec.tail_radii.size() + w]] =
        last.l1_windows[w];
  }
  summary["final"] = final_values;
  json mono = json::array();
  for (const auto& v : result.monotonicity) {
    mono.push_back({{"quantity", v.quantity},
                    {"initial", v.initial},
                    {"final", v.final_value},
                    {"max_step_violation", v.max_step_violation},
                    {"allowed", v.allowed},
                    {"pass", v.pass}});
  }
  summary["monotonicity"] = mono;
  summary["energy_drift_rel"] = result.energy_drift_rel;
  summary["energy_pass"] = result.energy_pass;
  summary["positivity_support_pass"] = result.positivity_support_pass;
  json trends = json::array();
  for (const auto& t : result.trends) {
    trends.push_back({{"quantity", t.quantity}, {"value", t.value}, {"pass", t.pass}});
  }
  summary["cascade_trends"] = trends;
  summary["verdicts_pass"] = verdicts_pass;

  {
    std::ofstream out(out_dir / "summary.json");
    if (!out) throw IoError("cannot write summary.json");
    out << "// config_hash=" << hash_hex(config.hash) << "\n";
    out << summary.dump(2) << "\n";
    result.files_written.push_back((out_dir / "summary.json").string());
  }

  json manifest;
  manifest["config_hash"] = hash_hex(config.hash);
  manifest["config_echo"] = "config.echo.txt";
  manifest["diagnostics_csv"] = "diagnostics.csv";
  manifest["diagnostics_columns"] = result.columns;
  manifest["snapshots"] = snapshot_index;
  manifest["summary"] = "summary.json";
  {
    std::ofstream out(out_dir / "manifest.json");
    if (!out) throw IoError("cannot write manifest.json");
    out << "// config_hash=" << hash_hex(config.hash) << "\n";
    out << manifest.dump(2) << "\n";
    result.files_written.push_back((out_dir / "manifest.json").string());
  }

  return result;
}

}  // namespace wavekin
