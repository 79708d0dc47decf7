#pragma once

#include <string>
#include <vector>

#include "twopath/config.hpp"

namespace twopath {

/// Sampled duality columns over the set-up's natural abscissa (screen
/// position in meters, time in lifetimes, or scattering angle in radians)
/// plus the reduced-model metadata block.
///
/// For Mott set-ups the columns are evaluated at x(theta) = ln tan^2(th/2)
/// while the y column keeps theta itself; signed_amplitude carries the
/// spin factor C_S so the intensity factor keeps its fermion sign.
struct PatternSeries {
  std::string kind;
  double envelope_rate = 0.0;    ///< A
  double phase_rate = 0.0;       ///< B
  double mixedness = 0.0;        ///< K
  double signed_amplitude = 0.0; ///< K, or C_S for Mott
  double ratio = 0.0;            ///< R = |A/B|
  double nu = 0.0;               ///< +inf when unbounded
  double r_rounded = 0.0;        ///< R at one-decimal display precision
  double nu_rounded = 0.0;       ///< 0.264 / r_rounded; +inf when r_rounded == 0
  bool is_pure = true;
  bool unbounded = false;
  double e_fold_y = 0.0;

  std::vector<double> y;
  std::vector<double> intensity_factor;  ///< 1 + C cos(B u)/cosh(A u)
  std::vector<double> visibility;
  std::vector<double> predictability;
  std::vector<double> phase;
  std::vector<double> duality_residual;

  std::size_t rows() const { return y.size(); }
};

/// Resolve the configured set-up to its unified model and sample every
/// column over the configured (or default) grid. Deterministic: identical
/// configs produce identical series.
PatternSeries make_series(const SetupConfig& c);

/// CSV document: `# key: value` metadata lines, a header row, then one row
/// per sample in ascending y. Scientific notation, 17 significant digits.
std::string to_csv(const PatternSeries& s);

/// Single-curve SVG (800x500): the intensity factor against accumulated
/// phase in units of 2 pi, with guide lines at 1 -+ 1/e and a vertical
/// marker at the fringe index nu. Self-contained, no external assets.
std::string to_svg(const PatternSeries& s);

}  // namespace twopath
