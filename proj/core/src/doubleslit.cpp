#include "twopath/doubleslit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twopath {

namespace {

void require_positive_finite(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0))
    throw std::invalid_argument(std::string(what) +
                                ": must be finite and > 0");
}

struct RawCoefficients {
  double sigma_squared;
  double envelope_rate;  // A, may be 0 and may carry sign (l > f)
  double phase_rate;     // B, 0 only in the single-slit degenerate case
  double ratio;          // closed-form R
};

RawCoefficients bartell_coefficients(const BartellSetup& s) {
  s.validate();
  const double focus = 1.0 - s.screen_distance / s.focal_length;
  const double x0sq = s.slit_width * s.slit_width;
  const double sig2 =
      x0sq * focus * focus +
      s.screen_distance * s.screen_distance / (s.wavenumber * s.wavenumber * x0sq);
  const double a = s.slit_separation / sig2 * focus;
  const double b =
      s.slit_separation / sig2 * s.screen_distance / (s.wavenumber * x0sq);
  const double r =
      std::abs(s.wavenumber * x0sq / s.screen_distance * focus);
  return RawCoefficients{sig2, a, b, r};
}

RawCoefficients beamsplitter_coefficients(const BeamSplitterSetup& s) {
  s.validate();
  const double sig2 = s.beam_width * s.beam_width;
  const double sin_theta = std::sin(s.half_angle);
  const double a = 2.0 * s.displacement * sin_theta / sig2;
  const double b = 2.0 * s.wavenumber * sin_theta;
  const double r = s.displacement / (s.wavenumber * sig2);
  return RawCoefficients{sig2, a, b, r};
}

double intensity_from(const RawCoefficients& c, double y, Normalization norm) {
  const double prefactor =
      (norm == Normalization::central_intensity) ? 0.5 : 1.0;
  return prefactor * std::exp(-y * y / c.sigma_squared) *
         (std::cosh(c.envelope_rate * y) + std::cos(c.phase_rate * y));
}

IntensityProfile sample_from(const RawCoefficients& c,
                             std::span<const double> y, Normalization norm) {
  IntensityProfile p;
  p.y.assign(y.begin(), y.end());
  p.intensity.reserve(y.size());
  p.envelope.reserve(y.size());
  p.oscillatory_factor.reserve(y.size());
  const double prefactor =
      (norm == Normalization::central_intensity) ? 0.5 : 1.0;
  for (double yi : y) {
    const double env = prefactor * std::exp(-yi * yi / c.sigma_squared) *
                       std::cosh(c.envelope_rate * yi);
    const double fac =
        1.0 + std::cos(c.phase_rate * yi) / std::cosh(c.envelope_rate * yi);
    p.envelope.push_back(env);
    p.oscillatory_factor.push_back(fac);
    p.intensity.push_back(env * fac);
  }
  return p;
}

}  // namespace

void BartellSetup::validate() const {
  require_positive_finite(wavenumber, "BartellSetup.wavenumber");
  require_positive_finite(slit_width, "BartellSetup.slit_width");
  if (!(std::isfinite(slit_separation) && slit_separation >= 0.0))
    throw std::invalid_argument(
        "BartellSetup.slit_separation: must be finite and >= 0");
  require_positive_finite(screen_distance, "BartellSetup.screen_distance");
  // +inf focal length means the lens is absent
  if (std::isnan(focal_length) || !(focal_length > 0.0))
    throw std::invalid_argument("BartellSetup.focal_length: must be > 0");
  if (screen_distance == focal_length)
    throw std::invalid_argument(
        "BartellSetup: screen at the focal plane (l == f) is excluded; "
        "the visibility is y-independent there");
}

void BeamSplitterSetup::validate() const {
  require_positive_finite(wavenumber, "BeamSplitterSetup.wavenumber");
  require_positive_finite(beam_width, "BeamSplitterSetup.beam_width");
  if (!(std::isfinite(half_angle) && half_angle > 0.0 &&
        half_angle < 1.5707963267948966))
    throw std::invalid_argument(
        "BeamSplitterSetup.half_angle: must lie in (0, pi/2)");
  if (!(std::isfinite(displacement) && displacement >= 0.0))
    throw std::invalid_argument(
        "BeamSplitterSetup.displacement: must be finite and >= 0");
}

double bartell_sigma_squared(const BartellSetup& s) {
  return bartell_coefficients(s).sigma_squared;
}

DoubleSlitModel bartell_model(const BartellSetup& s) {
  const RawCoefficients c = bartell_coefficients(s);
  if (s.slit_separation == 0.0)
    throw std::invalid_argument(
        "bartell_model: a single slit (d == 0) has no two-path reduction");
  return DoubleSlitModel{UnifiedModel(c.envelope_rate, c.phase_rate),
                         c.sigma_squared, c.ratio};
}

DoubleSlitModel beamsplitter_model(const BeamSplitterSetup& s) {
  const RawCoefficients c = beamsplitter_coefficients(s);
  return DoubleSlitModel{UnifiedModel(c.envelope_rate, c.phase_rate),
                         c.sigma_squared, c.ratio};
}

double intensity(const BartellSetup& s, double y, Normalization norm) {
  return intensity_from(bartell_coefficients(s), y, norm);
}

double intensity(const BeamSplitterSetup& s, double y, Normalization norm) {
  return intensity_from(beamsplitter_coefficients(s), y, norm);
}

IntensityProfile sample_intensity(const BartellSetup& s,
                                  std::span<const double> y,
                                  Normalization norm) {
  return sample_from(bartell_coefficients(s), y, norm);
}

IntensityProfile sample_intensity(const BeamSplitterSetup& s,
                                  std::span<const double> y,
                                  Normalization norm) {
  return sample_from(beamsplitter_coefficients(s), y, norm);
}

}  // namespace twopath
