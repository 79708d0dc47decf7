#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "twopath/mott.hpp"

using twopath::MottParams;
using twopath::MottReduced;

namespace {

MottParams alpha_at(double energy_mev) {
  return MottParams{2, twopath::nuclear_mass_energy("He-4"), energy_mev, 0,
                    false};
}

MottParams carbon13_75kev() {
  return MottParams{6, twopath::nuclear_mass_energy("C-13"), 0.075, 1, false};
}

}  // namespace

TEST_SUITE_BEGIN("mott");

TEST_CASE("sommerfeld parameter: alpha-alpha and carbon beams") {
  // eta = Z^2 alpha sqrt(Mc^2/2E) evaluated with the bundled masses
  const double eta_alpha = sommerfeld_eta(alpha_at(0.150));
  CHECK(eta_alpha == doctest::Approx(3.2536174595521137).epsilon(1e-12));
  CHECK(1.0 / eta_alpha == doctest::Approx(0.31).epsilon(0.02));

  const MottParams c12{6, twopath::nuclear_mass_energy("C-12"), 5.0, 0, false};
  const double eta_c12 = sommerfeld_eta(c12);
  CHECK(eta_c12 == doctest::Approx(8.7819091292907671).epsilon(1e-12));
  CHECK(1.0 / eta_c12 == doctest::Approx(0.11).epsilon(0.04));

  // quadrupling the energy halves eta
  CHECK(sommerfeld_eta(alpha_at(0.600)) ==
        doctest::Approx(0.5 * eta_alpha).epsilon(1e-14));
}

TEST_CASE("spin factor covers bosons, fermions and polarized beams") {
  CHECK(spin_factor(MottParams{2, 3727.38, 0.15, 0, false}) == 1.0);
  CHECK(spin_factor(carbon13_75kev()) == -0.5);
  CHECK(spin_factor(MottParams{3, 6000.0, 1.0, 2, false}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(spin_factor(MottParams{3, 6000.0, 1.0, 4, false}) ==
        doctest::Approx(0.2).epsilon(1e-15));
  // polarization restores full interference whatever the spin
  CHECK(spin_factor(MottParams{3, 6000.0, 1.0, 3, true}) == 1.0);
}

TEST_CASE("cross section bracket: right angle, exchange symmetry, positivity") {
  const MottParams spinless = alpha_at(0.150);
  // sin(pi/4) = cos(pi/4) = 2^{-1/2}: 4 + 4 + 8 cos(0)
  CHECK(mott_cross_section(spinless, 0.5 * std::numbers::pi) ==
        doctest::Approx(16.0).epsilon(1e-12));

  std::mt19937 rng(77);
  std::uniform_real_distribution<double> th(0.02 * std::numbers::pi,
                                            0.5 * std::numbers::pi);
  const MottParams fermions = carbon13_75kev();
  for (int i = 0; i < 300; ++i) {
    const double theta = th(rng);
    for (const MottParams& p : {spinless, fermions}) {
      const double here = mott_cross_section(p, theta);
      const double there = mott_cross_section(p, std::numbers::pi - theta);
      CHECK(here == doctest::Approx(there).epsilon(1e-10));
      CHECK(here > 0.0);
    }
  }
}

TEST_CASE("cross section over Rutherford sum follows the angular factor") {
  const MottParams p = alpha_at(0.150);
  const double eta = sommerfeld_eta(p);
  std::mt19937 rng(88);
  std::uniform_real_distribution<double> th(0.02 * std::numbers::pi,
                                            0.98 * std::numbers::pi);
  for (int i = 0; i < 300; ++i) {
    const double theta = th(rng);
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double rutherford = 1.0 / (s2 * s2) + 1.0 / (c2 * c2);
    const double cos_term =
        std::cos(eta * std::log((1.0 - std::cos(theta)) / (1.0 + std::cos(theta))));
    const double factor = 1.0 + (1.0 - std::cos(theta) * std::cos(theta)) /
                                    (1.0 + std::cos(theta) * std::cos(theta)) *
                                    cos_term;
    CHECK(mott_cross_section(p, theta) / rutherford ==
          doctest::Approx(factor).epsilon(1e-12));
  }
}

TEST_CASE("log-tan change of variable: fixed point, round trip, oddness") {
  CHECK(std::abs(twopath::log_tan_transform(0.5 * std::numbers::pi)) < 1e-15);
  for (int i = 1; i < 50; ++i) {
    const double theta = std::numbers::pi * i / 50.0;
    const double x = twopath::log_tan_transform(theta);
    CHECK(twopath::inverse_log_tan_transform(x) ==
          doctest::Approx(theta).epsilon(1e-12));
    const double x_mirror =
        twopath::log_tan_transform(std::numbers::pi - theta);
    CHECK(x_mirror == doctest::Approx(-x).epsilon(1e-10));
  }
  CHECK_THROWS_AS(twopath::log_tan_transform(0.0), std::invalid_argument);
  CHECK_THROWS_AS(twopath::log_tan_transform(std::numbers::pi),
                  std::invalid_argument);
  CHECK_THROWS_AS(twopath::log_tan_transform(-0.3), std::invalid_argument);
}

TEST_CASE("reduced model: spinless is pure, unpolarized spin mixes") {
  const MottReduced pure = mott_model(alpha_at(0.150));
  CHECK(pure.model.is_pure());
  CHECK(pure.model.envelope_rate() == 1.0);
  CHECK(pure.model.phase_rate() == pure.eta);
  CHECK(pure.spin_interference == 1.0);

  const MottReduced mixed = mott_model(carbon13_75kev());
  CHECK(mixed.mixedness == 0.5);
  CHECK(mixed.spin_interference == -0.5);
  CHECK(!mixed.model.is_pure());
  CHECK(mixed.model.ratio() ==
        doctest::Approx(1.0 / 74.642296071946748).epsilon(1e-12));

  // on the x axis the pure quantities are tanh and sech
  for (const double x : {-3.0, -0.5, 0.0, 0.2, 1.0, 4.0}) {
    CHECK(pure.model.predictability(x) ==
          doctest::Approx(std::abs(std::tanh(x))).epsilon(1e-14));
    CHECK(pure.model.visibility(x) ==
          doctest::Approx(1.0 / std::cosh(x)).epsilon(1e-14));
  }
}

TEST_CASE("predictability: right angle, mixed floor, log-tan identity") {
  const MottParams spinless = alpha_at(0.150);
  CHECK(mott_predictability(spinless, 0.5 * std::numbers::pi) ==
        doctest::Approx(0.0).epsilon(1e-15));

  const MottParams fermions = carbon13_75kev();
  // equal spin components contribute no path knowledge at theta = pi/2
  CHECK(mott_predictability(fermions, 0.5 * std::numbers::pi) ==
        doctest::Approx(0.5).epsilon(1e-12));

  for (int i = 1; i < 60; ++i) {
    const double theta = 0.02 * std::numbers::pi +
                         0.96 * std::numbers::pi * i / 60.0;
    const double x = twopath::log_tan_transform(theta);
    CHECK(mott_predictability(spinless, theta) ==
          doctest::Approx(std::abs(std::tanh(x))).epsilon(1e-12));
    CHECK(mott_predictability(fermions, theta) ==
          doctest::Approx((1.0 + std::abs(std::tanh(x))) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("change-of-variable identities hold pointwise") {
  for (int i = 1; i < 200; ++i) {
    const double theta = std::numbers::pi * i / 200.0;
    const double x = twopath::log_tan_transform(theta);
    const double c = std::cos(theta);
    CHECK(std::abs((1.0 - c * c) / (1.0 + c * c) - 1.0 / std::cosh(x)) < 1e-12);
    CHECK(std::abs(2.0 * std::abs(c) / (1.0 + c * c) - std::abs(std::tanh(x))) <
          1e-12);
  }
}

TEST_CASE("nuclide table and validation") {
  CHECK(twopath::nuclear_mass_energy("He-4") ==
        doctest::Approx(3727.379).epsilon(1e-6));
  CHECK(twopath::nuclear_charge("O-16") == 8);
  CHECK_THROWS_AS(twopath::nuclear_mass_energy("Fe-56"),
                  std::invalid_argument);

  MottParams bad = alpha_at(0.150);
  bad.energy = 0.0;
  CHECK_THROWS_AS(sommerfeld_eta(bad), std::invalid_argument);
  bad = alpha_at(0.150);
  bad.charge = 0;
  CHECK_THROWS_AS(sommerfeld_eta(bad), std::invalid_argument);
  bad = alpha_at(0.150);
  bad.spin_twice = -1;
  CHECK_THROWS_AS(spin_factor(bad), std::invalid_argument);
  CHECK_THROWS_AS(mott_cross_section(alpha_at(0.150), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(mott_cross_section(alpha_at(0.150), std::numbers::pi),
                  std::invalid_argument);
}

TEST_SUITE_END();
