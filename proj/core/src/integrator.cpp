#include "wavekin/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavekin/collision.hpp"
#include "wavekin/entropy.hpp"
#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

constexpr double kDefaultTimeScale = 1.0;

void axpy(std::vector<double>& y, double a, const std::vector<double>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

DiagnosticsRecord make_record(const Spectrum& f, double t,
                              const InteractionKernel& kernel,
                              const FrequencyGrid& grid,
                              const DiagnosticsSpec& spec,
                              double clamped_total) {
  DiagnosticsRecord rec;
  rec.time = t;
  rec.mass_0N = mass_on_cutoff(f, grid);
  rec.energy = moment(f, grid, MomentWeight::Energy, kernel);
  for (const auto& e : spec.entropies) {
    rec.entropies.push_back(entropy_value(f, kernel, e, grid));
  }
  rec.dissipation_W = dissipation_functional(f, kernel, grid);
  for (double R : spec.tail_radii) {
    rec.tail_fractions.push_back(tail_energy_fraction(f, grid, kernel, R));
  }
  for (const auto& [a, b] : spec.l1_windows) {
    rec.l1_windows.push_back(local_l1(f, grid, a, b));
  }
  rec.clamped_mass = clamped_total;
  return rec;
}

}  // namespace

double stable_dt(const Spectrum& f, const InteractionKernel& kernel,
                 const FrequencyGrid& grid, double theta) {
  if (!(theta > 0.0) || theta > 1.0) {
    throw ConfigError("solver.theta must lie in (0, 1]");
  }
  const GainLossSplit split = gain_loss_split(f, kernel, grid);
  double max_loss = 0.0;
  for (double l : split.loss_rate) max_loss = std::max(max_loss, l);
  if (max_loss <= 0.0) return theta * kDefaultTimeScale;
  return theta / max_loss;
}

StepResult step(const Spectrum& f, const InteractionKernel& kernel,
                const FrequencyGrid& grid, double dt, TimeMethod method) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InputError("step requires a positive finite dt");
  }
  const std::vector<double> U = tabulate_kernel(kernel, grid);
  auto rhs = [&U, &grid](const std::vector<double>& state) {
    return internal::collision_rhs(state, U, grid);
  };
  std::vector<double> next = f.values;
  if (method == TimeMethod::Euler) {
    const std::vector<double> k1 = rhs(f.values);
    axpy(next, dt, k1);
  } else {
    const std::vector<double> k1 = rhs(f.values);
    std::vector<double> stage = f.values;
    axpy(stage, 0.5 * dt, k1);
    const std::vector<double> k2 = rhs(stage);
    stage = f.values;
    axpy(stage, 0.5 * dt, k2);
    const std::vector<double> k3 = rhs(stage);
    stage = f.values;
    axpy(stage, dt, k3);
    const std::vector<double> k4 = rhs(stage);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }

  double max_f = 0.0;
  for (double v : f.values) max_f = std::max(max_f, v);
  for (double v : next) max_f = std::max(max_f, v);
  const double eps_clip = 1e-14 * max_f;

  StepResult result;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] < 0.0) {
      if (next[i] <= -eps_clip) {
        std::ostringstream os;
        os << "positivity violated at node " << i << " (omega="
           << grid.omega(static_cast<int>(i)) << "): f=" << next[i]
           << " undershoots beyond the clamp window " << -eps_clip
           << "; dt=" << dt << " is too large";
        throw ContractError(os.str());
      }
      result.clamped_mass += -next[i] * grid.delta;
      next[i] = 0.0;
    }
  }
  result.spectrum.values = std::move(next);
  result.spectrum.time = f.time + dt;
  return result;
}

Trajectory integrate(const Spectrum& initial, const InteractionKernel& kernel,
                     const FrequencyGrid& grid, const SolverConfig& config,
                     const DiagnosticsSpec& diagnostics) {
  if (config.t_end < 0.0 || !std::isfinite(config.t_end)) {
    throw ConfigError("solver.t_end must be >= 0");
  }
  if (!config.auto_dt && !(config.dt > 0.0)) {
    throw ConfigError("solver.dt must be positive when not 'auto'");
  }
  if (config.snapshot_every < 1 || config.diagnostics_every < 1) {
    throw ConfigError("snapshot_every and diagnostics_every must be >= 1");
  }
  if (static_cast<int>(initial.values.size()) != grid.size()) {
    throw InputError("initial spectrum size does not match grid");
  }
  for (int i = 0; i <= grid.m; ++i) {
    const double v = initial.values[i];
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InputError("initial spectrum must be nonnegative and finite");
    }
    if (i > grid.cutoff_index && v != 0.0) {
      throw InputError("initial spectrum must be supported in [0, N]");
    }
  }

  Trajectory traj;
  traj.method = config.method;
  Spectrum state = initial;
  state.time = 0.0;
  traj.snapshots.push_back({0.0, state});
  traj.records.push_back(
      make_record(state, 0.0, kernel, grid, diagnostics, 0.0));

  const double t_end = config.t_end;
  long k = 0;
  double t = 0.0;
  while (t < t_end && t_end - t > 1e-15 * std::max(1.0, t_end)) {
    double dt = config.auto_dt ? stable_dt(state, kernel, grid, config.theta)
                               : config.dt;
    dt = std::min(dt, t_end - t);
    StepResult res;
    try {
      res = step(state, kernel, grid, dt, config.method);
    } catch (const ContractError& err) {
      traj.error = err.what();
      break;
    }
    state = std::move(res.spectrum);
    traj.clamped_mass_total += res.clamped_mass;
    t = state.time;
    ++k;
    const bool last = !(t < t_end && t_end - t > 1e-15 * std::max(1.0, t_end));
    if (k % config.snapshot_every == 0 || last) {
      traj.snapshots.push_back({t, state});
    }
    if (k % config.diagnostics_every == 0 || last) {
      traj.records.push_back(make_record(state, t, kernel, grid, diagnostics,
                                         traj.clamped_mass_total));
    }
  }
  traj.steps = k;
  return traj;
}

}  // namespace wavekin
