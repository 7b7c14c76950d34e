// awctd command line: run / compare / report.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "awctd/harness.hpp"

namespace {

// Options whose names mirror configuration keys; given flags override the file.
const char *const kMirroredKeys[] = {"domain_length_um", "jmin",     "jmax",           "order",
                                     "zeta",             "dt_factor", "steps",         "boundary",
                                     "pml_width_frac",   "sigma_um",  "center_x_um",   "center_z_um",
                                     "eps_r",            "initial",   "initial_file"};

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  long snapshot_every = -1;
  std::map<std::string, std::string> overrides;
};

void add_common(CLI::App *cmd, CommonOptions &opt) {
  cmd->add_option("--config", opt.config_path, "configuration file (key = value)");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--snapshot-every", opt.snapshot_every, "snapshot cadence in steps (0: initial only)");
  for (const char *key : kMirroredKeys) cmd->add_option("--" + std::string(key), opt.overrides[key]);
}

awctd::RunConfig resolve(CommonOptions opt) {
  std::string text = opt.config_path.empty() ? std::string() : awctd::read_text_file(opt.config_path);
  std::erase_if(opt.overrides, [](const auto &kv) { return kv.second.empty(); });
  if (!opt.out_dir.empty()) opt.overrides["out_dir"] = opt.out_dir;
  if (opt.snapshot_every >= 0) opt.overrides["snapshot_every"] = std::to_string(opt.snapshot_every);
  if (!opt.overrides.empty()) text = awctd::override_config_text(text, opt.overrides);
  return awctd::parse_config(text);
}

void print_summary(const awctd::RunConfig &cfg, const awctd::RunManifest &m) {
  const awctd::FilterBank bank = awctd::build_filter_bank(cfg.sim.order);
  std::printf("config: %s\n", awctd::config_echo(cfg.sim, bank).c_str());
  std::printf("steps: %zu  cp min %.4f%%  cp max %.4f%%\n", m.records.empty() ? 0 : m.records.size() - 1,
              100.0 * m.min_cp, 100.0 * m.max_cp);
  if (m.final_oracle_error) std::printf("last defined oracle error: %.6e\n", *m.final_oracle_error);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Adaptive wavelet collocation time-domain Maxwell solver"};
  app.require_subcommand(1);

  CommonOptions run_opt, cmp_opt;
  auto *run_cmd = app.add_subcommand("run", "adaptive run with snapshots and manifest");
  add_common(run_cmd, run_opt);
  auto *cmp_cmd = app.add_subcommand("compare", "adaptive and full-grid runs in lockstep");
  add_common(cmp_cmd, cmp_opt);

  std::string manifest_path, timing_path;
  auto *rep_cmd = app.add_subcommand("report", "wall time vs cardinality correlation of a manifest");
  rep_cmd->add_option("manifest", manifest_path, "manifest.csv")->required();
  rep_cmd->add_option("--timing", timing_path, "paired series output (default: timing.csv next to the manifest)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      const awctd::RunConfig cfg = resolve(run_opt);
      print_summary(cfg, awctd::run(cfg));
    } else if (*cmp_cmd) {
      const awctd::RunConfig cfg = resolve(cmp_opt);
      const awctd::ComparisonResult res = awctd::compare_adaptive_vs_oracle(cfg);
      print_summary(cfg, res.manifest);
      double worst = 0.0;
      for (const auto &e : res.errors) worst = std::max(worst, e.relative_error);
      std::printf("oracle error: %zu defined steps, max %.6e\n", res.errors.size(), worst);
    } else if (*rep_cmd) {
      const awctd::RunManifest m = awctd::read_manifest_csv(manifest_path);
      if (timing_path.empty())
        timing_path = (std::filesystem::path(manifest_path).parent_path() / "timing.csv").string();
      const awctd::ProportionalityReport rep = awctd::proportionality_report(m, timing_path);
      if (rep.correlation)
        std::printf("samples %zu  pearson(wall_ms, cardinality) = %.6f\n", rep.samples, *rep.correlation);
      else
        std::printf("samples %zu  pearson(wall_ms, cardinality) undefined (zero variance)\n", rep.samples);
    }
  } catch (const awctd::ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const awctd::InstabilityError &e) {
    std::cerr << "numerical instability at step " << e.step() << ": " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
