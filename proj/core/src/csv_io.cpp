#include "wavekin/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wavekin/errors.hpp"

namespace wavekin {

std::uint64_t fnv1a_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string format_full(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_spectrum_csv(const std::string& path, const FrequencyGrid& grid,
                        const Spectrum& f, std::uint64_t config_hash) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "# config_hash=" << hash_hex(config_hash) << "\n";
  out << "omega,f\n";
  for (int i = 0; i < grid.size(); ++i) {
    out << format_full(grid.omega(i)) << "," << format_full(f.values[i])
        << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

SpectrumFile read_spectrum_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  SpectrumFile file;
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "omega,f") {
        throw IoError(path + ": expected header 'omega,f', got '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw IoError(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    try {
      file.omegas.push_back(std::stod(line.substr(0, comma)));
      file.values.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw IoError(path + ":" + std::to_string(lineno) + ": malformed number");
    }
  }
  if (!header_seen) throw IoError(path + ": missing 'omega,f' header");
  return file;
}

namespace {

std::string compact_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

std::vector<std::string> diagnostics_columns(
    const std::vector<std::string>& entropy_names,
    const std::vector<double>& tail_radii,
    const std::vector<std::pair<double, double>>& l1_windows,
    const std::vector<std::string>& weakres_ids) {
  std::vector<std::string> cols = {"t", "mass_0N", "energy"};
  for (const auto& name : entropy_names) cols.push_back("entropy_" + name);
  cols.push_back("W");
  for (double r : tail_radii) cols.push_back("tail_frac_R" + compact_number(r));
  for (const auto& [a, b] : l1_windows) {
    cols.push_back("l1_" + compact_number(a) + "_" + compact_number(b));
  }
  cols.push_back("clamped_mass");
  for (const auto& id : weakres_ids) cols.push_back("weakres_" + id);
  return cols;
}

void write_diagnostics_csv(
    const std::string& path, const std::vector<std::string>& columns,
    const std::vector<DiagnosticsRecord>& records,
    const std::vector<std::vector<double>>& weakres_series,
    std::uint64_t config_hash) {
  for (const auto& series : weakres_series) {
    if (series.size() != records.size()) {
      throw IoError("weak-residual series length does not match records");
    }
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "# config_hash=" << hash_hex(config_hash) << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
  }
  for (std::size_t k = 0; k < records.size(); ++k) {
    const DiagnosticsRecord& r = records[k];
    std::vector<double> row;
    row.push_back(r.time);
    row.push_back(r.mass_0N);
    row.push_back(r.energy);
    for (double v : r.entropies) row.push_back(v);
    row.push_back(r.dissipation_W);
    for (double v : r.tail_fractions) row.push_back(v);
    for (double v : r.l1_windows) row.push_back(v);
    row.push_back(r.clamped_mass);
    for (const auto& series : weakres_series) row.push_back(series[k]);
    if (row.size() != columns.size()) {
      throw IoError("diagnostics row width does not match the column layout");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << format_full(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace wavekin
