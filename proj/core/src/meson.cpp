#include "twopath/meson.hpp"

#include <cmath>
#include <stdexcept>

namespace twopath {

namespace {

void require_time(double t) {
  if (!(std::isfinite(t) && t >= 0.0))
    throw std::invalid_argument("meson: time must be finite and >= 0");
}

}  // namespace

void MesonParams::validate() const {
  if (!(std::isfinite(mass_splitting) && mass_splitting > 0.0))
    throw std::invalid_argument("MesonParams.delta_m: must be > 0");
  if (!(std::isfinite(width_short) && std::isfinite(width_long) &&
        width_long > 0.0 && width_short > width_long))
    throw std::invalid_argument(
        "MesonParams: widths must satisfy Gamma_S > Gamma_L > 0");
}

MesonParams kaon_params() {
  const double gamma_s = 1.0;
  const double gamma_l = 1.0 / 579.0;
  // |dGamma| / (2 delta_m) = 1.05
  const double delta_m = (gamma_s - gamma_l) / 2.10;
  return MesonParams{delta_m, gamma_s, gamma_l};
}

MesonState evolve(const MesonParams& p, Flavor initial, double t) {
  p.validate();
  require_time(t);
  // Amplitudes (1 +- e^{-dG t/2} e^{-i dm t}) / sqrt(2 (1 + e^{-dG t})),
  // rescaled by e^{dG t/2} (dG < 0) so nothing grows with t:
  //   (e^{w} +- e^{-i phi}) / sqrt(2 (e^{2w} + 1)),  w = dG t / 2 <= 0.
  const double w = 0.5 * p.width_difference() * t;
  const double ew = std::exp(w);
  const double phi = p.mass_splitting * t;
  const std::complex<double> osc(std::cos(phi), -std::sin(phi));
  const double inv_norm = 1.0 / std::sqrt(2.0 * (ew * ew + 1.0));
  const std::complex<double> same = (ew + osc) * inv_norm;
  const std::complex<double> flip = (ew - osc) * inv_norm;
  if (initial == Flavor::particle) return MesonState{same, flip};
  return MesonState{flip, same};
}

double strangeness_probability(const MesonParams& p, Flavor initial,
                               Flavor outcome, double t) {
  p.validate();
  require_time(t);
  const double half_contrast = 0.5 * std::cos(p.mass_splitting * t) /
                               std::cosh(0.5 * p.width_difference() * t);
  const double p_same = 0.5 + half_contrast;
  return (outcome == initial) ? p_same : 1.0 - p_same;
}

UnifiedModel meson_model(const MesonParams& p) {
  p.validate();
  // the constructor canonicalizes the negative dGamma/2 to |dGamma|/2
  return UnifiedModel(0.5 * p.width_difference(), p.mass_splitting);
}

double meson_predictability(const MesonParams& p, double t) {
  p.validate();
  require_time(t);
  return std::abs(std::tanh(0.5 * p.width_difference() * t));
}

double meson_predictability_from_weights(const MesonParams& p, double t) {
  p.validate();
  require_time(t);
  const double x = p.width_difference() * t;
  const double w_short = 1.0 / (1.0 + std::exp(-x));
  const double w_long = 1.0 / (1.0 + std::exp(x));
  return std::abs(w_long - w_short);
}

}  // namespace twopath
