#include "wavekin/collision.hpp"

#include <algorithm>
#include <cmath>

#include "wavekin/errors.hpp"
#include "wavekin/parallel.hpp"

namespace wavekin {

namespace {

void require_nonnegative(const Spectrum& f, const FrequencyGrid& grid) {
  if (static_cast<int>(f.values.size()) != grid.size()) {
    throw InputError("spectrum size does not match grid");
  }
  for (double v : f.values) {
    if (!(v >= 0.0)) throw InputError("collision operator requires f >= 0");
  }
}

// Compensated (Kahan) accumulator used by the bruteforce oracle.
struct KahanSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

namespace internal {

std::vector<double> collision_rhs(const std::vector<double>& fv,
                                  const std::vector<double>& U,
                                  const FrequencyGrid& grid) {
  const int m = grid.m;
  const int n = grid.cutoff_index;
  const double delta = grid.delta;

  // g_k = U_k f_k X(k<=n); every cutoff product below is a product of g's
  // or of g with a bare U / masked f.
  std::vector<double> g(m + 1, 0.0);
  std::vector<double> fmask(m + 1, 0.0);
  for (int k = 0; k <= std::min(n, m); ++k) {
    fmask[k] = fv[k];
    g[k] = U[k] * fv[k];
  }

  std::vector<double> q(m + 1, 0.0);
  parallel_for(0, m + 1, [&](int i) {
    double s1 = 0.0;  // gain minus the two in-range loss channels
    for (int j = 0; j <= i; ++j) {
      const int k = i - j;
      s1 += g[j] * g[k];                       // f_j f_{i-j} X(j<=n & i-j<=n)
      s1 -= fmask[i] * g[j] * U[k];            // f_i f_j    X(i<=n & j<=n)
      s1 -= fmask[i] * U[j] * g[k];            // f_i f_{i-j} X(i<=n & i-j<=n)
    }
    double s2 = 0.0;
    for (int j = 0; j <= m - i; ++j) {
      const int l = i + j;
      s2 += fmask[i] * g[j] * U[l];            // f_j f_i    X(i<=n & j<=n)
      s2 -= g[j] * g[l];                       // f_j f_{i+j} X(j<=n & i+j<=n)
      s2 -= fmask[i] * U[j] * g[l];            // f_i f_{i+j} X(i<=n & i+j<=n)
    }
    q[i] = delta * (s1 - 2.0 * s2);
  });
  return q;
}

}  // namespace internal

CollisionOutput q_cutoff(const Spectrum& f, const InteractionKernel& kernel,
                         const FrequencyGrid& grid) {
  require_nonnegative(f, grid);
  CollisionOutput out;
  out.q = internal::collision_rhs(f.values, tabulate_kernel(kernel, grid), grid);
  return out;
}

CollisionOutput q_cutoff_bruteforce(const Spectrum& f,
                                    const InteractionKernel& kernel,
                                    const FrequencyGrid& grid) {
  require_nonnegative(f, grid);
  const int m = grid.m;
  const int n = grid.cutoff_index;
  const double delta = grid.delta;
  const std::vector<double>& fv = f.values;

  CollisionOutput out;
  out.q.assign(m + 1, 0.0);
  for (int i = 0; i <= m; ++i) {
    KahanSum acc;
    for (int j = 0; j <= i; ++j) {
      const int k = i - j;
      const double UU =
          evaluate(kernel, grid.omega(j)) * evaluate(kernel, grid.omega(k));
      if (j <= n && k <= n) acc.add(delta * UU * fv[j] * fv[k]);
      if (i <= n && j <= n) acc.add(-delta * UU * fv[i] * fv[j]);
      if (i <= n && k <= n) acc.add(-delta * UU * fv[i] * fv[k]);
    }
    for (int j = 0; j <= m - i; ++j) {
      const int l = i + j;
      const double UU =
          evaluate(kernel, grid.omega(j)) * evaluate(kernel, grid.omega(l));
      if (i <= n && j <= n) acc.add(-2.0 * delta * UU * fv[j] * fv[i]);
      if (j <= n && l <= n) acc.add(2.0 * delta * UU * fv[j] * fv[l]);
      if (i <= n && l <= n) acc.add(2.0 * delta * UU * fv[i] * fv[l]);
    }
    out.q[i] = acc.sum;
  }
  return out;
}

GainLossSplit gain_loss_split(const Spectrum& f,
                              const InteractionKernel& kernel,
                              const FrequencyGrid& grid) {
  require_nonnegative(f, grid);
  const int m = grid.m;
  const int n = grid.cutoff_index;
  const double delta = grid.delta;
  const std::vector<double> U = tabulate_kernel(kernel, grid);
  const std::vector<double>& fv = f.values;

  std::vector<double> g(m + 1, 0.0);
  for (int k = 0; k <= std::min(n, m); ++k) g[k] = U[k] * fv[k];

  GainLossSplit split;
  split.gain.assign(m + 1, 0.0);
  split.loss_rate.assign(m + 1, 0.0);
  split.transfer_rate.assign(m + 1, 0.0);
  parallel_for(0, m + 1, [&](int i) {
    double gain = 0.0;
    for (int j = 0; j <= i; ++j) gain += g[j] * g[i - j];
    for (int j = 0; j <= m - i; ++j) gain += 2.0 * g[j] * g[i + j];
    split.gain[i] = delta * gain;
    if (i > n) return;  // L and A carry the X(i<=n) indicator
    double loss = 0.0;
    for (int j = 0; j <= i; ++j) loss += g[j] * U[i - j];
    for (int j = 0; j <= i; ++j) loss += U[j] * g[i - j];
    for (int j = 0; j <= m - i; ++j) loss += 2.0 * g[j] * U[i + j];
    split.loss_rate[i] = delta * loss;
    double transfer = 0.0;
    for (int j = 0; j <= m - i; ++j) transfer += 2.0 * U[j] * g[i + j];
    split.transfer_rate[i] = delta * transfer;
  });
  return split;
}

double energy_production(const Spectrum& f, const InteractionKernel& kernel,
                         const FrequencyGrid& grid) {
  const CollisionOutput out = q_cutoff(f, kernel, grid);
  const std::vector<double> U = tabulate_kernel(kernel, grid);
  double sum = 0.0;
  for (int i = 0; i <= grid.m; ++i) {
    sum += grid.omega(i) * U[i] * out.q[i];
  }
  return sum * grid.delta;
}

double entropy_production(const Spectrum& f, const InteractionKernel& kernel,
                          const FrequencyGrid& grid, const EntropyDensity& e) {
  const CollisionOutput out = q_cutoff(f, kernel, grid);
  const std::vector<double> U = tabulate_kernel(kernel, grid);
  double sum = 0.0;
  for (int i = 0; i <= grid.cutoff_index; ++i) {
    sum += out.q[i] * e.e_prime(U[i] * f.values[i]);
  }
  return sum * grid.delta;
}

LipschitzCheck lipschitz_check(const Spectrum& f, const Spectrum& g,
                               const InteractionKernel& kernel,
                               const FrequencyGrid& grid) {
  if (f.values.size() != g.values.size()) {
    throw InputError("lipschitz_check requires spectra on the same grid");
  }
  const CollisionOutput qf = q_cutoff(f, kernel, grid);
  const CollisionOutput qg = q_cutoff(g, kernel, grid);
  const std::vector<double> U = tabulate_kernel(kernel, grid);

  auto weighted_norm = [&](const std::vector<double>& a,
                           const std::vector<double>& b) {
    double s = 0.0;
    for (int i = 0; i <= grid.m; ++i) {
      s += (1.0 + U[i]) * std::abs(a[i] - b[i]);
    }
    return s * grid.delta;
  };
  const std::vector<double> zero(grid.size(), 0.0);

  double MN = 0.0;
  for (int i = 0; i <= std::min(2 * grid.cutoff_index, grid.m); ++i) {
    MN = std::max(MN, 1.0 + U[i]);
  }

  LipschitzCheck check;
  check.lhs = weighted_norm(qf.q, qg.q);
  check.rhs = 9.0 * MN * MN * MN *
              (weighted_norm(f.values, zero) + weighted_norm(g.values, zero)) *
              weighted_norm(f.values, g.values);
  check.ratio = check.rhs > 0.0 ? check.lhs / check.rhs : 0.0;
  return check;
}

}  // namespace wavekin
