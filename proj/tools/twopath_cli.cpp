// twopath: reduce two-path interference set-ups (Gaussian double slits,
// neutral-meson oscillation, Mott scattering) to their unified duality
// description and emit profiles, reports and oracle verifications.
//
// Exit codes: 0 success, 1 configuration/validation error, 2 oracle failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "twopath/commands.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string preset;
  std::string grid;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  auto* config = sub->add_option("--config", args.config_path,
                                 "JSON configuration file")
                     ->envname("TWOPATH_CONFIG");
  auto* preset =
      sub->add_option("--preset", args.preset, "named preset (see README)")
          ->envname("TWOPATH_PRESET");
  sub->add_option("--grid", args.grid, "sampling grid as min:max:points")
      ->envname("TWOPATH_GRID");
  config->excludes(preset);
  preset->excludes(config);
}

twopath::SetupConfig load_config(const CommonArgs& args) {
  twopath::SetupConfig cfg;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path, std::ios::binary);
    if (!in)
      throw twopath::ConfigError("config: cannot open \"" + args.config_path +
                                 "\"");
    std::ostringstream text;
    text << in.rdbuf();
    cfg = twopath::parse_config(text.str());
  } else if (!args.preset.empty()) {
    cfg = twopath::preset_config(args.preset);
  } else {
    throw twopath::ConfigError("config: one of --config or --preset is required");
  }
  if (!args.grid.empty()) cfg.grid = twopath::parse_grid_spec(args.grid);
  return cfg;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw twopath::ConfigError("output: cannot open \"" + path +
                               "\" for writing");
  out << content;
  if (!out)
    throw twopath::ConfigError("output: failed writing \"" + path + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-path interferometry duality toolkit: unified visibility/"
      "predictability models for Gaussian double slits, neutral-meson "
      "oscillations and Mott scattering"};
  app.require_subcommand(1);

  CommonArgs profile_args, report_args, verify_args;
  std::string out_csv, out_svg;
  double tolerance = 0.0;

  CLI::App* profile = app.add_subcommand(
      "profile", "sample the duality columns; CSV to --out-csv or stdout");
  add_common(profile, profile_args);
  profile->add_option("--out-csv", out_csv, "CSV output path (default stdout)")
      ->envname("TWOPATH_OUT_CSV");
  profile->add_option("--out-svg", out_svg, "SVG plot output path")
      ->envname("TWOPATH_OUT_SVG");

  CLI::App* report = app.add_subcommand(
      "report", "print the reduced-model duality report as JSON");
  add_common(report, report_args);

  CLI::App* verify = app.add_subcommand(
      "verify",
      "check the closed forms against the kind's independent oracle");
  add_common(verify, verify_args);
  CLI::Option* tol_opt =
      verify
          ->add_option("--tolerance", tolerance,
                       "maximum relative error (defaults: 1e-6 optics, "
                       "1e-12 meson/mott)")
          ->envname("TWOPATH_TOLERANCE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (profile->parsed()) {
      const auto cfg = load_config(profile_args);
      const twopath::ProfileResult r = twopath::cmd_profile(cfg);
      if (out_csv.empty())
        std::cout << r.csv;
      else
        write_file(out_csv, r.csv);
      if (!out_svg.empty()) write_file(out_svg, r.svg);
      return 0;
    }
    if (report->parsed()) {
      const auto cfg = load_config(report_args);
      std::cout << twopath::cmd_report(cfg);
      return 0;
    }
    // verify
    const auto cfg = load_config(verify_args);
    std::optional<double> tol;
    if (tol_opt->count() > 0) {
      if (!(tolerance > 0.0))
        throw twopath::ConfigError("tolerance: must be > 0");
      tol = tolerance;
    }
    const twopath::VerifyResult r = twopath::cmd_verify(cfg, tol);
    std::cout << r.json;
    return r.oracle.passed ? 0 : 2;
  } catch (const twopath::OracleError& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return 2;
  } catch (const twopath::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
