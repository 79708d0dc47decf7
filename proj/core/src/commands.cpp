#include "twopath/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace twopath {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no inf; unbounded quantities are emitted as null.
void put_number(ordered_json& j, const char* key, double v) {
  if (std::isfinite(v))
    j[key] = v;
  else
    j[key] = nullptr;
}

std::size_t index_nearest_zero(std::span<const double> grid) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (std::abs(grid[i]) < std::abs(grid[best])) best = i;
  return best;
}

OracleResult verify_bartell(const BartellSetup& s, const GridSpec& grid,
                            double tol) {
  const std::vector<double> y = grid.samples();
  const std::vector<double> quadrature = fresnel_intensity_oracle(s, y);
  const IntensityProfile closed =
      sample_intensity(s, y, Normalization::unit_envelope);
  return compare_curves_normalized(y, quadrature, closed.intensity,
                                   index_nearest_zero(y), tol);
}

OracleResult verify_beamsplitter(const BeamSplitterSetup& s,
                                 const GridSpec& grid, double tol) {
  const std::vector<double> y = grid.samples();
  const std::vector<double> superposed = beamsplitter_oracle(s, y);
  const IntensityProfile closed =
      sample_intensity(s, y, Normalization::unit_envelope);
  return compare_curves_normalized(y, superposed, closed.intensity,
                                   index_nearest_zero(y), tol);
}

OracleResult verify_meson(const MesonParams& p, const GridSpec& grid,
                          double tol) {
  const std::vector<double> t = grid.samples();
  // every (initial, outcome) combination, amplitude route vs closed form
  std::vector<double> abscissa, amplitude_route, closed_route;
  abscissa.reserve(4 * t.size());
  amplitude_route.reserve(4 * t.size());
  closed_route.reserve(4 * t.size());
  for (const Flavor initial : {Flavor::particle, Flavor::antiparticle}) {
    for (const Flavor outcome : {Flavor::particle, Flavor::antiparticle}) {
      for (const double ti : t) {
        const MesonState state = evolve(p, initial, ti);
        const auto amp = (outcome == Flavor::particle) ? state.particle_amp
                                                       : state.antiparticle_amp;
        abscissa.push_back(ti);
        amplitude_route.push_back(std::norm(amp));
        closed_route.push_back(
            strangeness_probability(p, initial, outcome, ti));
      }
    }
  }
  return compare_curves(abscissa, amplitude_route, closed_route, tol);
}

OracleResult verify_mott(const MottParams& p, const GridSpec& grid,
                         double tol) {
  const std::vector<double> theta = grid.samples();
  const MottReduced reduced = mott_model(p);
  std::vector<double> abscissa, direct_route, reduced_route;
  abscissa.reserve(2 * theta.size());
  direct_route.reserve(2 * theta.size());
  reduced_route.reserve(2 * theta.size());
  for (const double th : theta) {
    // cross-section bracket over the Rutherford sum vs the unified factor
    const double s2 = std::sin(0.5 * th) * std::sin(0.5 * th);
    const double c2 = std::cos(0.5 * th) * std::cos(0.5 * th);
    const double rutherford = 1.0 / (s2 * s2) + 1.0 / (c2 * c2);
    const double x = log_tan_transform(th);
    abscissa.push_back(th);
    direct_route.push_back(mott_cross_section(p, th) / rutherford);
    reduced_route.push_back(1.0 + reduced.spin_interference *
                                      std::cos(reduced.eta * x) /
                                      std::cosh(x));
  }
  // the angular predictability against its log-tan form
  for (const double th : theta) {
    const double c = std::cos(th);
    abscissa.push_back(th);
    direct_route.push_back(2.0 * std::abs(c) / (1.0 + c * c));
    reduced_route.push_back(std::abs(std::tanh(log_tan_transform(th))));
  }
  return compare_curves(abscissa, direct_route, reduced_route, tol);
}

}  // namespace

ProfileResult cmd_profile(const SetupConfig& c) {
  ProfileResult r{make_series(c), {}, {}};
  r.csv = to_csv(r.series);
  r.svg = to_svg(r.series);
  return r;
}

std::string cmd_report(const SetupConfig& c) {
  const PatternSeries s = make_series(c);
  double max_residual = 0.0;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const double v = s.visibility[i];
    const double p = s.predictability[i];
    max_residual = std::max(
        max_residual, std::abs(p * p + v * v - 1.0 - s.duality_residual[i]));
  }
  ordered_json j;
  j["kind"] = s.kind;
  put_number(j, "A", s.envelope_rate);
  put_number(j, "B", s.phase_rate);
  put_number(j, "K", s.mixedness);
  put_number(j, "R", s.ratio);
  put_number(j, "nu", s.nu);
  put_number(j, "r_rounded", s.r_rounded);
  if (s.r_rounded > 0.0) put_number(j, "nu_rounded", s.nu_rounded);
  j["is_pure"] = s.is_pure;
  j["unbounded"] = s.unbounded;
  put_number(j, "e_fold_y", s.e_fold_y);
  put_number(j, "max_residual", max_residual);
  return j.dump(2) + "\n";
}

VerifyResult cmd_verify(const SetupConfig& c, std::optional<double> tolerance) {
  const GridSpec grid = effective_grid(c);
  OracleResult result;
  double tol = 0.0;
  switch (c.kind) {
    case SetupKind::bartell:
      tol = tolerance.value_or(1e-6);
      result = verify_bartell(std::get<BartellSetup>(c.parameters), grid, tol);
      break;
    case SetupKind::beamsplitter:
      tol = tolerance.value_or(1e-6);
      result = verify_beamsplitter(std::get<BeamSplitterSetup>(c.parameters),
                                   grid, tol);
      break;
    case SetupKind::meson:
      tol = tolerance.value_or(1e-12);
      result = verify_meson(std::get<MesonParams>(c.parameters), grid, tol);
      break;
    case SetupKind::mott:
      tol = tolerance.value_or(1e-12);
      result = verify_mott(std::get<MottParams>(c.parameters), grid, tol);
      break;
  }
  ordered_json j;
  j["kind"] = std::string(to_string(c.kind));
  j["max_rel_error"] = result.max_rel_error;
  j["n_samples"] = result.n_samples;
  j["grid_min"] = result.grid_min;
  j["grid_max"] = result.grid_max;
  j["tolerance"] = result.tolerance;
  j["passed"] = result.passed;
  return VerifyResult{result, j.dump(2) + "\n"};
}

}  // namespace twopath
