// wavekin: deterministic simulator and property checker for the cutoff
// isotropic 3-wave kinetic equation.
//
// Subcommands:
//   run <config>       integrate an experiment, write CSV/JSON artifacts
//   verify             run the property battery, print per-property verdicts
//   inspect <csv>      summarize a spectrum snapshot file
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-contract
// violation, 4 I/O error. WAVEKIN_THREADS caps internal parallelism.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavekin/config.hpp"
#include "wavekin/csv_io.hpp"
#include "wavekin/errors.hpp"
#include "wavekin/experiment.hpp"
#include "wavekin/verify.hpp"

namespace {

int cmd_run(const std::string& config_path) {
  const wavekin::ExperimentConfig config =
      wavekin::load_config_file(config_path);
  const wavekin::RunResult result = wavekin::run_experiment(config);
  std::cout << "run: " << result.trajectory.steps << " steps, wrote "
            << result.files_written.size() << " files to " << config.output_dir
            << "\n";
  for (const auto& v : result.monotonicity) {
    std::cout << "  " << (v.pass ? "PASS" : "FAIL") << " " << v.quantity
              << " nonincreasing (max step violation " << v.max_step_violation
              << ", allowed " << v.allowed << ")\n";
  }
  std::cout << "  " << (result.energy_pass ? "PASS" : "FAIL")
            << " energy conservation (relative drift "
            << result.energy_drift_rel << ")\n";
  std::cout << "  " << (result.positivity_support_pass ? "PASS" : "FAIL")
            << " positivity and support in [0, 2N]\n";
  for (const auto& t : result.trends) {
    std::cout << "  trend " << t.quantity << ": value " << t.value << " => "
              << (t.pass ? "pass" : "fail") << "\n";
  }
  if (result.trajectory.error) {
    std::cout << "  ABORTED: " << *result.trajectory.error << "\n";
  }
  return result.exit_code;
}

int cmd_verify(int grid_size, const std::string& variant, int d, double rho,
               double beta) {
  wavekin::VerifyOptions options;
  options.grid_size = grid_size;
  if (variant == "acoustic") {
    options.kernel_override = wavekin::InteractionKernel::acoustic(d);
  } else if (variant == "regularized") {
    options.kernel_override = wavekin::InteractionKernel::regularized(rho, beta);
  } else if (!variant.empty()) {
    throw wavekin::ConfigError("--kernel must be acoustic or regularized");
  }
  const wavekin::VerifyReport report = wavekin::verify_properties(options);
  for (const auto& v : report.verdicts) {
    const char* tag = v.pass ? "PASS" : (v.applicable ? "FAIL" : "N/A ");
    std::cout << tag << " " << v.name << ": " << v.detail << "\n";
  }
  std::cout << (report.all_pass() ? "all properties pass"
                                  : "property failures detected")
            << "\n";
  return report.all_pass() ? 0 : 3;
}

int cmd_inspect(const std::string& path) {
  const wavekin::SpectrumFile file = wavekin::read_spectrum_csv(path);
  if (file.values.empty()) {
    std::cout << path << ": empty spectrum\n";
    return 0;
  }
  const std::size_t nodes = file.values.size();
  const double delta =
      nodes > 1 ? file.omegas[1] - file.omegas[0] : 0.0;
  double mass = 0.0, min_v = file.values[0], max_v = file.values[0];
  std::size_t first = nodes, last = 0;
  for (std::size_t i = 0; i < nodes; ++i) {
    mass += file.values[i] * delta;
    min_v = std::min(min_v, file.values[i]);
    max_v = std::max(max_v, file.values[i]);
    if (file.values[i] != 0.0) {
      first = std::min(first, i);
      last = std::max(last, i);
    }
  }
  std::cout << path << ": " << nodes << " nodes, delta=" << delta
            << ", omega_max=" << file.omegas.back() << "\n";
  std::cout << "  mass=" << wavekin::format_full(mass) << " min=" << min_v
            << " max=" << max_v << "\n";
  if (first <= last) {
    std::cout << "  support=[" << file.omegas[first] << ", "
              << file.omegas[last] << "]\n";
  } else {
    std::cout << "  support=empty\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutoff 3-wave kinetic equation simulator"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "integrate an experiment config");
  run->add_option("config", config_path, "experiment config file")->required();

  int grid_size = 64;
  std::string kernel_variant;
  int d = 2;
  double rho = 2.0, beta = 1.0;
  CLI::App* verify = app.add_subcommand("verify", "run the property battery");
  verify->add_option("--grid-size", grid_size, "lattice intervals m");
  verify->add_option("--kernel", kernel_variant,
                     "override kernel: acoustic|regularized");
  verify->add_option("--d", d, "acoustic exponent parameter");
  verify->add_option("--rho", rho, "regularized rho");
  verify->add_option("--beta", beta, "regularized beta");

  std::string snapshot_path;
  CLI::App* inspect = app.add_subcommand("inspect", "summarize a snapshot CSV");
  inspect->add_option("snapshot", snapshot_path, "snapshot CSV file")
      ->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(config_path);
    if (verify->parsed())
      return cmd_verify(grid_size, kernel_variant, d, rho, beta);
    if (inspect->parsed()) return cmd_inspect(snapshot_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const wavekin::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const wavekin::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const wavekin::ContractError& e) {
    std::cerr << "numerical contract violation: " << e.what() << "\n";
    return 3;
  } catch (const wavekin::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
