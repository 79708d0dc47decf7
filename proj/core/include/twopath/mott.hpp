#pragma once

#include <string_view>

#include "twopath/unified.hpp"

namespace twopath {

/// Fine-structure constant (CODATA).
inline constexpr double fine_structure_constant = 1.0 / 137.035999;

/// Elastic Coulomb scattering of two identical nuclei below the barrier.
struct MottParams {
  int charge = 0;            ///< Z
  double mass_energy = 0.0;  ///< nuclear rest energy Mc^2 [MeV]
  double energy = 0.0;       ///< center-of-mass energy E [MeV]
  int spin_twice = 0;        ///< 2S
  bool polarized = false;    ///< beams polarized in the same direction

  void validate() const;
};

/// Nuclear rest energy Mc^2 [MeV] of the bundled nuclides
/// ("He-4", "C-12", "C-13", "O-16"); throws for unknown names.
double nuclear_mass_energy(std::string_view nuclide);
/// Proton number of a bundled nuclide.
int nuclear_charge(std::string_view nuclide);

/// Sommerfeld parameter eta = Z^2 alpha sqrt(Mc^2 / 2E).
double sommerfeld_eta(const MottParams& p);

/// Spin interference factor C_S: +1 for spinless or identically polarized
/// beams, (-1)^{2S} / (2S + 1) for unpolarized spin-S beams (negative for
/// half-integer spin).
double spin_factor(const MottParams& p);

/// The angular bracket of the Mott cross section, in units of (Z^2 e^2/4E)^2:
///
///   1/sin^4(th/2) + 1/cos^4(th/2)
///     + C_S * 2/(sin^2(th/2) cos^2(th/2)) * cos(eta ln tan^2(th/2)).
///
/// Strictly positive and symmetric under th <-> pi - th. The Rutherford
/// endpoints th = 0, pi are rejected.
double mott_cross_section(const MottParams& p, double theta);

/// x = ln tan^2(theta/2); a bijection from (0, pi) onto the real line,
/// odd about theta = pi/2.
double log_tan_transform(double theta);
/// theta = 2 atan(e^{x/2}), the inverse map.
double inverse_log_tan_transform(double x);

/// Reduction of the cross section to the unified family in the x variable:
/// I(x) ~ 1 + C_S cos(eta x)/cosh(x), i.e. A = 1, B = eta, K = |C_S| with
/// the sign of C_S carried on the cosine term.
struct MottReduced {
  double eta = 0.0;
  double spin_interference = 0.0;  ///< signed C_S
  double mixedness = 0.0;          ///< K = |C_S|
  UnifiedModel model;
};

MottReduced mott_model(const MottParams& p);

/// Which-path knowledge at scattering angle theta: 2|cos th|/(1 + cos^2 th)
/// for pure beams (equal to |tanh x(th)|), and (2S + |tanh x|)/(2S + 1) for
/// unpolarized spin-S beams.
double mott_predictability(const MottParams& p, double theta);

}  // namespace twopath
