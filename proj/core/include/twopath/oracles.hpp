#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "twopath/doubleslit.hpp"
#include "twopath/unified.hpp"

namespace twopath {

/// Raised when an oracle cannot vouch for its own output (e.g. the
/// quadrature fails its node-doubling convergence check).
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of one closed-form-vs-oracle comparison.
struct OracleResult {
  double max_rel_error = 0.0;
  std::size_t n_samples = 0;
  double grid_min = 0.0;
  double grid_max = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct FresnelOptions {
  /// Node budget of the base pass; values below 4096 are raised to 4096.
  std::size_t nodes = 4096;
  /// Aperture truncation beyond each slit center, in units of x0. The
  /// default 8 puts the discarded Gaussian tail at e^{-32}.
  double window_slit_widths = 8.0;
  /// Maximum peak-relative change allowed when the node count doubles.
  double convergence_tol = 1e-8;
};

/// Kirchhoff-Fresnel quadrature of the slits-plus-lens set-up,
///
///   U(y) = integral dx [T(x - d/2) + T(x + d/2)]
///            * exp(-i k x^2 / 2f) * exp(+i k (y - x)^2 / 2l),
///
/// with amplitude transmission T(x) = exp(-x^2 / 2 x0^2). Returns |U|^2 on
/// the grid (unnormalized; comparisons rescale at y = 0). Composite
/// Gauss-Legendre panels; the whole grid is evaluated at n and 2n nodes and
/// OracleError is thrown if the two passes disagree beyond convergence_tol
/// relative to the curve peak.
std::vector<double> fresnel_intensity_oracle(const BartellSetup& s,
                                             std::span<const double> y_grid,
                                             const FresnelOptions& opt = {});

/// Two-Gaussian-beam complex superposition |U+ + U-|^2 for the
/// beam-splitter set-up, with U±(y) = exp(-(y ∓ L sin t)^2 / 2 x0^2)
/// * exp(±i k y sin t). Algebraic; no quadrature involved.
std::vector<double> beamsplitter_oracle(const BeamSplitterSetup& s,
                                        std::span<const double> y_grid);

struct FringeCount {
  std::size_t maxima = 0;   ///< local maxima on (0, arccosh(e)/A]
  double nu = 0.0;
  bool unbounded = false;   ///< A == 0: nothing to count
  bool within_one = false;  ///< |maxima - nu| <= 1
};

/// Counts local maxima of the oscillatory factor on (0, arccosh(e)/A] by
/// bracketed bisection on the sign changes of its derivative, and checks
/// the count against the fringe index nu.
FringeCount count_fringes(const UnifiedModel& m);

struct DualityScan {
  DualityReport report;
  double max_abs_residual = 0.0;       ///< max |P^2 + V^2 - 1|
  double max_positive_residual = 0.0;  ///< max(P^2 + V^2 - 1, 0)
  /// max |(P^2 + V^2 - 1) - 2K(1-K)(|tanh(Ay)| - 1)| — distance between the
  /// pointwise sweep and the closed-form residual.
  double max_closed_form_deviation = 0.0;
  std::size_t n_samples = 0;
};

/// Pointwise P^2 + V^2 sweep against the closed-form residual. For pure
/// models the violation measure is max |P^2+V^2-1|; for mixed models it is
/// the positive part only (the relation is an inequality there).
DualityScan duality_scan(const UnifiedModel& m, std::span<const double> y_grid);

/// max |test - reference| / max |reference| over the grid.
OracleResult compare_curves(std::span<const double> y_grid,
                            std::span<const double> test_curve,
                            std::span<const double> reference,
                            double tolerance);

/// Same, after rescaling both curves to unit value at anchor_index
/// (typically the y = 0 sample).
OracleResult compare_curves_normalized(std::span<const double> y_grid,
                                       std::span<const double> test_curve,
                                       std::span<const double> reference,
                                       std::size_t anchor_index,
                                       double tolerance);

}  // namespace twopath
