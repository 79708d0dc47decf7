#pragma once

#include <span>
#include <vector>

#include "twopath/unified.hpp"

namespace twopath {

/// Double slit with Gaussian amplitude-transmission filters in contact with
/// a thin converging lens; the screen sits a distance l from the assembly.
/// The Fraunhofer plane l == f is excluded (there the visibility is
/// uniformly 1 and the y-dependence degenerates).
struct BartellSetup {
  double wavenumber = 0.0;       ///< k [1/m]
  double slit_width = 0.0;       ///< x0 [m], Gaussian width of each filter
  double slit_separation = 0.0;  ///< d [m], center to center; 0 = single slit
  double screen_distance = 0.0;  ///< l [m]
  double focal_length = 0.0;     ///< f [m]; +inf means no lens

  void validate() const;
};

/// Symmetric beam splitter: a Gaussian beam split at half-angle theta and
/// recombined on a screen displaced by L from the full-overlap position.
struct BeamSplitterSetup {
  double wavenumber = 0.0;    ///< k [1/m]
  double beam_width = 0.0;    ///< x0 [m]
  double half_angle = 0.0;    ///< theta, in (0, pi/2)
  double displacement = 0.0;  ///< L [m], >= 0 (0 = full overlap)

  void validate() const;
};

/// sigma^2 = x0^2 (1 - l/f)^2 + l^2 / (k^2 x0^2): geometric spot size plus
/// the diffraction-spreading term. Strictly positive for valid set-ups.
double bartell_sigma_squared(const BartellSetup& s);

/// Reduced model plus the quantities that do not survive the (A, B, K)
/// reduction. ratio_closed_form is computed without going through A and B,
/// so it cross-checks model.ratio().
struct DoubleSlitModel {
  UnifiedModel model;
  double sigma_squared = 0.0;
  double ratio_closed_form = 0.0;
};

/// A = d/sigma^2 (1 - l/f), B = d/sigma^2 * l/(k x0^2), K = 1;
/// closed-form R = (k x0^2 / l)(1 - l/f). Rejects d == 0 (a single slit
/// has no two-path reduction; sigma^2 and intensity still apply there).
DoubleSlitModel bartell_model(const BartellSetup& s);

/// A = 2 L sin(theta)/x0^2, B = 2 k sin(theta), K = 1; closed-form
/// R = L/(k x0^2), independent of theta.
DoubleSlitModel beamsplitter_model(const BeamSplitterSetup& s);

enum class Normalization {
  central_intensity,  ///< I(0) = 1
  unit_envelope,      ///< prefactor N = 1
};

/// Screen intensity N exp(-y^2/sigma^2) [cosh(A y) + cos(B y)].
double intensity(const BartellSetup& s, double y,
                 Normalization norm = Normalization::central_intensity);
double intensity(const BeamSplitterSetup& s, double y,
                 Normalization norm = Normalization::central_intensity);

/// Sampled intensity split into envelope and oscillatory factor.
struct IntensityProfile {
  std::vector<double> y;
  std::vector<double> intensity;
  std::vector<double> envelope;            ///< N exp(-y^2/sigma^2) cosh(A y)
  std::vector<double> oscillatory_factor;  ///< 1 + cos(B y)/cosh(A y)
};

IntensityProfile sample_intensity(
    const BartellSetup& s, std::span<const double> y,
    Normalization norm = Normalization::central_intensity);
IntensityProfile sample_intensity(
    const BeamSplitterSetup& s, std::span<const double> y,
    Normalization norm = Normalization::central_intensity);

}  // namespace twopath
