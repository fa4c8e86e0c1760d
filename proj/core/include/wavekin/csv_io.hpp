#ifndef WAVEKIN_CSV_IO_HPP_
#define WAVEKIN_CSV_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "wavekin/grid.hpp"
#include "wavekin/trajectory.hpp"

namespace wavekin {

/// FNV-1a 64-bit hash of a text blob; stamped into every output file's
/// header comment so artifacts can be traced back to their configuration.
std::uint64_t fnv1a_hash(const std::string& text);
std::string hash_hex(std::uint64_t hash);

/// Formats a double with 17 significant digits (lossless round-trip).
std::string format_full(double value);

/// Snapshot CSV: "# config_hash=<hex>" comment line, then "omega,f" header
/// and one full-precision row per node.
void write_spectrum_csv(const std::string& path, const FrequencyGrid& grid,
                        const Spectrum& f, std::uint64_t config_hash);

struct SpectrumFile {
  std::vector<double> omegas;
  std::vector<double> values;
};

/// Reads a snapshot CSV (comment lines ignored).
SpectrumFile read_spectrum_csv(const std::string& path);

/// Column layout for the diagnostics CSV, in the emitted order:
/// t, mass_0N, energy, entropy_<name>..., W, tail_frac_R<r>...,
/// l1_<a>_<b>..., clamped_mass, then optional weakres_<id> columns.
std::vector<std::string> diagnostics_columns(
    const std::vector<std::string>& entropy_names,
    const std::vector<double>& tail_radii,
    const std::vector<std::pair<double, double>>& l1_windows,
    const std::vector<std::string>& weakres_ids);

void write_diagnostics_csv(
    const std::string& path, const std::vector<std::string>& columns,
    const std::vector<DiagnosticsRecord>& records,
    const std::vector<std::vector<double>>& weakres_series,
    std::uint64_t config_hash);

}  // namespace wavekin

#endif  // WAVEKIN_CSV_IO_HPP_
