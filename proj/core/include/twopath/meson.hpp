#pragma once

#include <complex>

#include "twopath/unified.hpp"

namespace twopath {

/// Neutral-meson mixing parameters (hbar = 1). Any consistent inverse-time
/// unit works; observables depend only on the products delta_m * t and
/// dGamma * t. The bundled kaon preset uses units of the short lifetime.
struct MesonParams {
  double mass_splitting = 0.0;  ///< delta m = m_L - m_S, > 0
  double width_short = 0.0;     ///< Gamma_S
  double width_long = 0.0;      ///< Gamma_L, with 0 < Gamma_L < Gamma_S

  double width_difference() const { return width_long - width_short; }  ///< < 0
  void validate() const;
};

/// Kaon defaults in tau_S = 1/Gamma_S units: Gamma_S = 1, Gamma_L = 1/579,
/// and delta m fixed so that |dGamma| / (2 delta m) = 1.05.
MesonParams kaon_params();

/// Flavor basis labels (K0 / K0bar for kaons).
enum class Flavor { particle, antiparticle };

/// Flavor-basis amplitudes, normalized to the undecayed population at t.
struct MesonState {
  std::complex<double> particle_amp;
  std::complex<double> antiparticle_amp;
};

/// Free evolution of an initially pure flavor state through the short/long
/// eigenbasis and back, for t >= 0 (CP violation neglected).
MesonState evolve(const MesonParams& p, Flavor initial, double t);

/// Flavor-measurement probability (1 +- cos(dm t)/cosh(dGamma t/2)) / 2,
/// with + when outcome == initial. The two outcomes sum to exactly 1.
double strangeness_probability(const MesonParams& p, Flavor initial,
                               Flavor outcome, double t);

/// A = |dGamma|/2, B = delta m, K = 1.
UnifiedModel meson_model(const MesonParams& p);

/// |tanh(dGamma t / 2)|: the bias toward the longer-lived component among
/// states that survived to t.
double meson_predictability(const MesonParams& p, double t);

/// The same quantity from the survival weights,
/// |1/(1 + e^{-dGamma t}) - 1/(1 + e^{+dGamma t})|. Kept as an independent
/// algebraic route; agrees with meson_predictability to roundoff.
double meson_predictability_from_weights(const MesonParams& p, double t);

}  // namespace twopath
