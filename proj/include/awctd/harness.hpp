#pragma once

// Experiment orchestration: flat key = value configuration, the run loop with
// per-step metrics, CSV/PGM snapshots, the adaptive-vs-full-grid comparison
// and the cost/cardinality proportionality report.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "awctd/errors.hpp"
#include "awctd/solver.hpp"

namespace awctd {

struct OutputSettings {
  long snapshot_every = 100; ///< 0 disables periodic snapshots (step 0 is always written)
  std::string out_dir = "awctd_out";
};

struct RunConfig {
  SimulationConfig sim;
  OutputSettings output;
};

// ---------------------------------------------------------------------------
// Configuration text
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string &key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError(key + ": expected a real number, got '" + std::string(v) + "'");
  return out;
}

inline long parse_long(const std::string &key, std::string_view v) {
  long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(key + ": expected an integer, got '" + std::string(v) + "'");
  return out;
}

inline int parse_int(const std::string &key, std::string_view v) {
  const long x = parse_long(key, v);
  if (x < -1000000 || x > 1000000) throw ConfigError(key + ": integer out of range");
  return static_cast<int>(x);
}

} // namespace detail

/// Reads a field snapshot CSV (row, col, x_um, z_um, Ey, Hx, Hz) into arrays of the given size.
inline void read_field_csv(const std::string &path, int size, FieldArray &ey, FieldArray &hx, FieldArray &hz) {
  std::ifstream in(path);
  if (!in) throw ConfigError("initial_file: cannot open '" + path + "'");
  ey = hx = hz = FieldArray(size, 0.0);
  std::string line;
  std::getline(in, line); // header
  long count = 0;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    std::vector<std::string_view> cols;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      cols.push_back(rest.substr(0, pos));
    cols.push_back(rest);
    if (cols.size() != 7) throw ConfigError("initial_file: expected 7 columns in '" + path + "'");
    const int row = detail::parse_int("initial_file row", detail::trim(cols[0]));
    const int col = detail::parse_int("initial_file col", detail::trim(cols[1]));
    if (!ey.in_range(col, row)) throw ConfigError("initial_file: index outside the grid in '" + path + "'");
    ey(col, row) = detail::parse_double("initial_file Ey", detail::trim(cols[4]));
    hx(col, row) = detail::parse_double("initial_file Hx", detail::trim(cols[5]));
    hz(col, row) = detail::parse_double("initial_file Hz", detail::trim(cols[6]));
    ++count;
  }
  if (count != static_cast<long>(size) * size)
    throw ConfigError("initial_file: expected " + std::to_string(static_cast<long>(size) * size) + " rows, got " +
                      std::to_string(count));
}

/// Parses flat `key = value` text ('#' starts a comment). Empty text yields
/// the Gaussian-pulse defaults: L = 6 um, PML width L/4, sigma = 1/(4 sqrt 2) um,
/// j_min = 3, j_max = 9, N = 4, zeta = 5e-4, dt = delta / (1.6 c).
inline RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  SimulationConfig &s = cfg.sim;
  std::string initial_kind = "gaussian";
  std::string initial_file;
  std::string h_time = "minus_half";
  std::map<std::string, int> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view val = detail::trim(line.substr(eq + 1));
    if (seen[key]++) throw ConfigError(key + ": given more than once");

    if (key == "domain_length_um") s.domain_length_um = detail::parse_double(key, val);
    else if (key == "jmin") s.j_min = detail::parse_int(key, val);
    else if (key == "jmax") s.j_max = detail::parse_int(key, val);
    else if (key == "order") s.order = detail::parse_int(key, val);
    else if (key == "zeta") s.zeta = detail::parse_double(key, val);
    else if (key == "dt_factor") s.dt_factor = detail::parse_double(key, val);
    else if (key == "steps") s.steps = detail::parse_long(key, val);
    else if (key == "boundary") {
      if (val == "pml") s.boundary.kind = BoundaryKind::pml;
      else if (val == "pec") s.boundary.kind = BoundaryKind::pec;
      else if (val == "none") s.boundary.kind = BoundaryKind::none;
      else throw ConfigError("boundary: expected pml, pec or none, got '" + std::string(val) + "'");
    }
    else if (key == "pml_width_frac") s.boundary.width_frac = detail::parse_double(key, val);
    else if (key == "pml_grade") s.boundary.grade = detail::parse_int(key, val);
    else if (key == "pml_reflection") s.boundary.reflection = detail::parse_double(key, val);
    else if (key == "sigma_um") s.initial.sigma_um = detail::parse_double(key, val);
    else if (key == "center_x_um") s.initial.center_x_um = detail::parse_double(key, val);
    else if (key == "center_z_um") s.initial.center_z_um = detail::parse_double(key, val);
    else if (key == "eps_r") s.eps_r = detail::parse_double(key, val);
    else if (key == "adjacent_levels") s.zone.levels = detail::parse_int(key, val);
    else if (key == "adjacent_space") s.zone.space = detail::parse_int(key, val);
    else if (key == "initial") initial_kind = std::string(val);
    else if (key == "initial_file") initial_file = std::string(val);
    else if (key == "initial_h_time") h_time = std::string(val);
    else if (key == "snapshot_every") cfg.output.snapshot_every = detail::parse_long(key, val);
    else if (key == "out_dir") cfg.output.out_dir = std::string(val);
    else throw ConfigError(key + ": unknown configuration key");
  }

  if (s.zone.levels < 0 || s.zone.space < 0) throw ConfigError("adjacent_levels/adjacent_space: must be >= 0");
  if (cfg.output.snapshot_every < 0) throw ConfigError("snapshot_every: must be >= 0");
  if (h_time != "zero" && h_time != "minus_half")
    throw ConfigError("initial_h_time: expected zero or minus_half, got '" + h_time + "'");
  if (initial_kind == "gaussian") {
    s.initial.kind = InitialCondition::Kind::gaussian;
  } else if (initial_kind == "zero") {
    s.initial.kind = InitialCondition::Kind::zero;
  } else if (initial_kind == "file") {
    if (initial_file.empty()) throw ConfigError("initial_file: required when initial = file");
    if (s.j_max < 1 || s.j_max > 16) throw ConfigError("jmax: must be in [1, 16]");
    s.initial.kind = InitialCondition::Kind::fields;
    read_field_csv(initial_file, (1 << s.j_max) + 1, s.initial.ey, s.initial.hx, s.initial.hz);
    s.initial.h_time =
        h_time == "zero" ? InitialCondition::HTime::at_zero : InitialCondition::HTime::at_minus_half;
  } else {
    throw ConfigError("initial: expected gaussian, zero or file, got '" + initial_kind + "'");
  }
  s.validate();
  return cfg;
}

/// Replaces (or appends) `key = value` lines of a configuration text.
inline std::string override_config_text(std::string_view text, const std::map<std::string, std::string> &overrides) {
  std::ostringstream out;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    if (eq != std::string_view::npos && overrides.count(std::string(detail::trim(line.substr(0, eq))))) continue;
    out << raw << '\n';
  }
  for (const auto &[k, v] : overrides) out << k << " = " << v << '\n';
  return out.str();
}

inline std::string read_text_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline RunConfig load_config_file(const std::string &path) { return parse_config(read_text_file(path)); }

// ---------------------------------------------------------------------------
// Snapshots
// ---------------------------------------------------------------------------

/// Field values of a masked representation extended to the whole grid
/// (FWT on `mask`, IWT on the full mask).
inline FieldArray reconstruct_full(const FieldArray &field, const GridMask &mask, const FilterBank &bank) {
  if (mask.cardinality() == mask.bits().element_count()) return field;
  CoeffPyramid pyr(field, mask.grid());
  fwt_full(pyr, mask, bank);
  iwt_full(pyr, GridMask::full(mask.grid()), bank);
  return std::move(pyr.data);
}

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct SnapshotFiles {
  std::string field_csv;
  std::string mask_pgm;
};

inline void write_mask_pgm(const std::string &path, const GridMask &mask) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mask image '" + path + "'");
  const int n = mask.size();
  out << "P2\n" << n << ' ' << n << "\n255\n";
  for (int iz = 0; iz < n; ++iz) {
    for (int ix = 0; ix < n; ++ix) out << (ix ? " " : "") << (mask(ix, iz) ? 255 : 0);
    out << '\n';
  }
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

/// Reads back a mask image written by write_mask_pgm (nonzero pixel = masked).
inline GridMask read_mask_pgm(const std::string &path, DyadicGrid grid) {
  std::ifstream in(path);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  if (!(in >> magic >> w >> h >> maxval) || magic != "P2")
    throw std::runtime_error("'" + path + "' is not a P2 graymap");
  if (w != grid.size() || h != grid.size()) throw std::runtime_error("'" + path + "' has the wrong dimensions");
  GridMask mask = GridMask::coarsest(grid);
  for (int iz = 0; iz < h; ++iz)
    for (int ix = 0; ix < w; ++ix) {
      int v = 0;
      if (!(in >> v)) throw std::runtime_error("'" + path + "' is truncated");
      if (v) mask.insert(ix, iz);
    }
  return mask;
}

/// Writes field_k<k>.csv (values extended to the full grid) and mask_k<k>.pgm (Mask0).
inline SnapshotFiles emit_snapshot(const Simulation &sim, const FieldState &state, const std::string &dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  SnapshotFiles files;
  files.field_csv = "field_k" + std::to_string(state.k) + ".csv";
  files.mask_pgm = "mask_k" + std::to_string(state.k) + ".pgm";

  const FieldArray ey = reconstruct_full(state.ey, state.mask0, sim.bank());
  const FieldArray hx = reconstruct_full(state.hx, state.mask1, sim.bank());
  const FieldArray hz = reconstruct_full(state.hz, state.mask1, sim.bank());

  const std::string path = (fs::path(dir) / files.field_csv).string();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write snapshot '" + path + "'");
  out << "row,col,x_um,z_um,Ey,Hx,Hz\n";
  const int n = sim.size();
  for (int iz = 0; iz < n; ++iz)
    for (int ix = 0; ix < n; ++ix)
      out << iz << ',' << ix << ',' << format_double(sim.x_of(ix) * 1e6) << ',' << format_double(sim.z_of(iz) * 1e6)
          << ',' << format_double(ey(ix, iz)) << ',' << format_double(hx(ix, iz)) << ','
          << format_double(hz(ix, iz)) << '\n';
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
  write_mask_pgm((fs::path(dir) / files.mask_pgm).string(), state.mask0);
  return files;
}

// ---------------------------------------------------------------------------
// Run loop and manifest
// ---------------------------------------------------------------------------

struct StepRecord {
  long k = 0;
  double t = 0.0;
  std::size_t cardinality = 0; ///< |Mask0|
  double cp = 1.0;
  double wall_ms = 0.0;
  std::size_t cardinality_mask1 = 0;
  std::size_t cardinality_mask2 = 0;
};

struct RunManifest {
  std::vector<StepRecord> records; ///< k = 0 is the initial state (wall_ms = 0)
  std::map<long, SnapshotFiles> snapshots;
  double max_cp = 0.0;
  double min_cp = 1.0;
  std::optional<double> final_oracle_error;
};

inline StepRecord make_record(const FieldState &s, double wall_ms) {
  StepRecord r;
  r.k = s.k;
  r.t = s.t;
  r.cardinality = s.mask0.cardinality();
  r.cp = s.mask0.compression_rate();
  r.wall_ms = wall_ms;
  r.cardinality_mask1 = s.mask1.cardinality();
  r.cardinality_mask2 = s.mask2.cardinality();
  return r;
}

inline void write_manifest_csv(const std::string &path, const RunManifest &m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");
  out << "step,time_s,cardinality,cp,wall_ms,cardinality_mask1,cardinality_mask2,field_file,mask_file\n";
  for (const StepRecord &r : m.records) {
    out << r.k << ',' << format_double(r.t) << ',' << r.cardinality << ',' << format_double(r.cp) << ','
        << format_double(r.wall_ms) << ',' << r.cardinality_mask1 << ',' << r.cardinality_mask2 << ',';
    if (auto it = m.snapshots.find(r.k); it != m.snapshots.end())
      out << it->second.field_csv << ',' << it->second.mask_pgm;
    else
      out << ',';
    out << '\n';
  }
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

inline RunManifest read_manifest_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
  RunManifest m;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    while (cols.size() < 9) cols.emplace_back();
    StepRecord r;
    r.k = detail::parse_long("step", cols[0]);
    r.t = detail::parse_double("time_s", cols[1]);
    r.cardinality = static_cast<std::size_t>(detail::parse_long("cardinality", cols[2]));
    r.cp = detail::parse_double("cp", cols[3]);
    r.wall_ms = detail::parse_double("wall_ms", cols[4]);
    r.cardinality_mask1 = static_cast<std::size_t>(detail::parse_long("cardinality_mask1", cols[5]));
    r.cardinality_mask2 = static_cast<std::size_t>(detail::parse_long("cardinality_mask2", cols[6]));
    if (!cols[7].empty()) m.snapshots[r.k] = {cols[7], cols[8]};
    m.records.push_back(r);
  }
  for (const StepRecord &r : m.records) {
    m.max_cp = std::max(m.max_cp, r.cp);
    m.min_cp = std::min(m.min_cp, r.cp);
  }
  return m;
}

inline std::string config_echo(const SimulationConfig &s, const FilterBank &bank) {
  std::ostringstream o;
  o << "domain_length_um=" << format_double(s.domain_length_um) << " jmin=" << s.j_min << " jmax=" << s.j_max
    << " order=" << s.order << " zeta=" << format_double(s.zeta)
    << " dt_factor=" << format_double(s.resolved_dt_factor(bank)) << " steps=" << s.steps << " boundary="
    << (s.boundary.kind == BoundaryKind::pml ? "pml" : s.boundary.kind == BoundaryKind::pec ? "pec" : "none")
    << " pml_width_frac=" << format_double(s.boundary.width_frac)
    << " sigma_um=" << format_double(s.initial.sigma_um);
  return o.str();
}

/// Observer hook called after every step with the fresh record.
using StepObserver = std::function<void(const Simulation &, const FieldState &, const StepRecord &)>;

/// Runs the adaptive solver for config.sim.steps steps. Writes snapshots and
/// manifest.csv when out_dir is non-empty.
inline RunManifest run(const RunConfig &config, const StepObserver &observer = {}) {
  namespace fs = std::filesystem;
  const Simulation sim(config.sim);
  FieldState state = sim.initialize();
  RunManifest manifest;
  const bool write = !config.output.out_dir.empty();
  const auto snap = [&](const FieldState &s) {
    if (!write) return;
    const bool periodic = config.output.snapshot_every > 0 && s.k % config.output.snapshot_every == 0;
    if (s.k == 0 || periodic) manifest.snapshots[s.k] = emit_snapshot(sim, s, config.output.out_dir);
  };

  manifest.records.push_back(make_record(state, 0.0));
  snap(state);
  for (long step = 0; step < config.sim.steps; ++step) {
    const auto t0 = std::chrono::steady_clock::now();
    sim.step(state);
    const auto t1 = std::chrono::steady_clock::now();
    const StepRecord rec = make_record(state, std::chrono::duration<double, std::milli>(t1 - t0).count());
    manifest.records.push_back(rec);
    snap(state);
    if (observer) observer(sim, state, rec);
  }
  for (const StepRecord &r : manifest.records) {
    manifest.max_cp = std::max(manifest.max_cp, r.cp);
    manifest.min_cp = std::min(manifest.min_cp, r.cp);
  }
  if (write) write_manifest_csv((fs::path(config.output.out_dir) / "manifest.csv").string(), manifest);
  return manifest;
}

// ---------------------------------------------------------------------------
// Adaptive vs full-grid comparison
// ---------------------------------------------------------------------------

struct ErrorRecord {
  long k = 0;
  double t = 0.0;
  double relative_error = 0.0; ///< max_Omega |Ey_adaptive - Ey_full| / max_Omega |Ey_full|
  double full_peak = 0.0;      ///< max_Omega |Ey_full|
};

struct ComparisonResult {
  std::vector<ErrorRecord> errors; ///< only steps where the error is defined
  RunManifest manifest;            ///< adaptive run metrics
};

/// Runs the adaptive and the full-grid integrators in lockstep from the same
/// initial data. Error records stop once the full-grid field inside Omega
/// falls below 1e-6 of its initial peak. `observer` sees the adaptive state.
inline ComparisonResult compare_adaptive_vs_oracle(const RunConfig &config, const StepObserver &observer = {}) {
  namespace fs = std::filesystem;
  const Simulation sim(config.sim);
  FieldState adaptive = sim.initialize();
  FieldState full = adaptive;
  ComparisonResult result;
  const bool write = !config.output.out_dir.empty();
  const int n = sim.size();

  auto omega_peak = [&](const FieldArray &a) {
    double m = 0.0;
    for (int iz = 0; iz < n; ++iz)
      for (int ix = 0; ix < n; ++ix)
        if (sim.in_omega(ix, iz)) m = std::max(m, std::abs(a(ix, iz)));
    return m;
  };
  const double initial_peak = omega_peak(full.ey);
  bool defined = initial_peak > 0.0;
  const auto snap = [&](const FieldState &s) {
    if (!write) return;
    const bool periodic = config.output.snapshot_every > 0 && s.k % config.output.snapshot_every == 0;
    if (s.k == 0 || periodic) result.manifest.snapshots[s.k] = emit_snapshot(sim, s, config.output.out_dir);
  };

  result.manifest.records.push_back(make_record(adaptive, 0.0));
  snap(adaptive);
  for (long step = 0; step < config.sim.steps; ++step) {
    const auto t0 = std::chrono::steady_clock::now();
    sim.step(adaptive);
    const auto t1 = std::chrono::steady_clock::now();
    sim.full_grid_step(full);
    const StepRecord rec = make_record(adaptive, std::chrono::duration<double, std::milli>(t1 - t0).count());
    result.manifest.records.push_back(rec);
    snap(adaptive);
    if (observer) observer(sim, adaptive, rec);

    if (!defined) continue;
    const double peak = omega_peak(full.ey);
    if (peak < 1e-6 * initial_peak) {
      defined = false;
      continue;
    }
    const FieldArray ey = reconstruct_full(adaptive.ey, adaptive.mask0, sim.bank());
    double diff = 0.0;
    for (int iz = 0; iz < n; ++iz)
      for (int ix = 0; ix < n; ++ix)
        if (sim.in_omega(ix, iz)) diff = std::max(diff, std::abs(ey(ix, iz) - full.ey(ix, iz)));
    result.errors.push_back({adaptive.k, adaptive.t, diff / peak, peak});
  }
  for (const StepRecord &r : result.manifest.records) {
    result.manifest.max_cp = std::max(result.manifest.max_cp, r.cp);
    result.manifest.min_cp = std::min(result.manifest.min_cp, r.cp);
  }
  if (!result.errors.empty()) result.manifest.final_oracle_error = result.errors.back().relative_error;

  if (write) {
    fs::create_directories(config.output.out_dir);
    write_manifest_csv((fs::path(config.output.out_dir) / "manifest.csv").string(), result.manifest);
    std::ofstream out(fs::path(config.output.out_dir) / "error_series.csv");
    out << "step,time_s,relative_error,full_peak\n";
    for (const ErrorRecord &e : result.errors)
      out << e.k << ',' << format_double(e.t) << ',' << format_double(e.relative_error) << ','
          << format_double(e.full_peak) << '\n';
  }
  return result;
}

// ---------------------------------------------------------------------------
// Cost proportionality
// ---------------------------------------------------------------------------

struct ProportionalityReport {
  std::size_t samples = 0;
  std::optional<double> correlation; ///< empty when either series has zero variance
};

inline std::optional<double> pearson(const std::vector<double> &a, const std::vector<double> &b) {
  const std::size_t n = a.size();
  if (n == 0 || n != b.size()) return std::nullopt;
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  return sab / std::sqrt(saa * sbb);
}

/// Pearson correlation between per-step wall time and Mask0 cardinality over
/// the stepped records (k >= 1). Optionally writes the paired series.
inline ProportionalityReport proportionality_report(const RunManifest &manifest,
                                                    const std::string &timing_csv = {}) {
  std::vector<double> wall, card;
  for (const StepRecord &r : manifest.records) {
    if (r.k < 1) continue;
    wall.push_back(r.wall_ms);
    card.push_back(static_cast<double>(r.cardinality));
  }
  if (wall.size() < 50)
    throw std::invalid_argument("proportionality_report: need at least 50 step records, got " +
                                std::to_string(wall.size()));
  if (!timing_csv.empty()) {
    std::ofstream out(timing_csv);
    if (!out) throw std::runtime_error("cannot write '" + timing_csv + "'");
    out << "step,wall_ms,cardinality\n";
    std::size_t i = 0;
    for (const StepRecord &r : manifest.records)
      if (r.k >= 1) {
        out << r.k << ',' << format_double(wall[i]) << ',' << r.cardinality << '\n';
        ++i;
      }
  }
  return {wall.size(), pearson(wall, card)};
}

} // namespace awctd
