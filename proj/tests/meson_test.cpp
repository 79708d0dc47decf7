#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "twopath/meson.hpp"

using twopath::Flavor;
using twopath::MesonParams;
using twopath::MesonState;

TEST_SUITE_BEGIN("meson");

TEST_CASE("kaon preset pins the measured ratios only") {
  const MesonParams p = twopath::kaon_params();
  CHECK(p.width_short == 1.0);
  CHECK(p.width_long == doctest::Approx(1.0 / 579.0).epsilon(1e-15));
  CHECK(std::abs(p.width_difference()) / (2.0 * p.mass_splitting) ==
        doctest::Approx(1.05).epsilon(1e-14));
}

TEST_CASE("evolution starts pure and stays normalized") {
  const MesonParams p = twopath::kaon_params();
  const MesonState initial = evolve(p, Flavor::particle, 0.0);
  CHECK(initial.particle_amp == std::complex<double>(1.0, 0.0));
  CHECK(initial.antiparticle_amp == std::complex<double>(0.0, 0.0));

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ts(0.0, 12.0);
  for (int i = 0; i < 400; ++i) {
    const double t = ts(rng);
    const MesonState st = evolve(p, Flavor::particle, t);
    const double total =
        std::norm(st.particle_amp) + std::norm(st.antiparticle_amp);
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("antiparticle start swaps the two amplitudes") {
  const MesonParams p = twopath::kaon_params();
  for (const double t : {0.0, 0.3, 1.7, 6.0, 11.5}) {
    const MesonState a = evolve(p, Flavor::particle, t);
    const MesonState b = evolve(p, Flavor::antiparticle, t);
    CHECK(a.particle_amp == b.antiparticle_amp);
    CHECK(a.antiparticle_amp == b.particle_amp);
  }
}

TEST_CASE("strangeness probability: limits and exact completeness") {
  const MesonParams p = twopath::kaon_params();
  CHECK(strangeness_probability(p, Flavor::particle, Flavor::particle, 0.0) ==
        1.0);
  CHECK(strangeness_probability(p, Flavor::particle, Flavor::antiparticle,
                                0.0) == 0.0);
  // visibility is long gone by t = 300 tau_S
  CHECK(strangeness_probability(p, Flavor::particle, Flavor::particle, 300.0) ==
        doctest::Approx(0.5).epsilon(1e-12));

  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> ts(0.0, 12.0);
  for (int i = 0; i < 500; ++i) {
    const double t = ts(rng);
    const double same =
        strangeness_probability(p, Flavor::particle, Flavor::particle, t);
    const double flip =
        strangeness_probability(p, Flavor::particle, Flavor::antiparticle, t);
    CHECK(same + flip == 1.0);  // exact, not approximate
    CHECK(same >= 0.0);
    CHECK(same <= 1.0);
  }
}

TEST_CASE("closed form equals the amplitude route") {
  const MesonParams p = twopath::kaon_params();
  for (int i = 0; i <= 2000; ++i) {
    const double t = 12.0 * i / 2000.0;
    const MesonState st = evolve(p, Flavor::particle, t);
    const double via_amp = std::norm(st.particle_amp);
    const double closed =
        strangeness_probability(p, Flavor::particle, Flavor::particle, t);
    CHECK(std::abs(via_amp - closed) < 1e-12);
  }
}

TEST_CASE("oscillatory identity 2 P(same) - 1 = cos/cosh") {
  const MesonParams p = twopath::kaon_params();
  for (int i = 0; i <= 500; ++i) {
    const double t = 12.0 * i / 500.0;
    const double same =
        strangeness_probability(p, Flavor::particle, Flavor::particle, t);
    const double expected = std::cos(p.mass_splitting * t) /
                            std::cosh(0.5 * p.width_difference() * t);
    CHECK(2.0 * same - 1.0 == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("model: kaon ratio 1.05, B-meson regime") {
  const twopath::UnifiedModel kaon = meson_model(twopath::kaon_params());
  const twopath::DualityReport rep = kaon.fringe_index();
  CHECK(rep.ratio == doctest::Approx(1.05).epsilon(1e-12));
  CHECK(rep.nu == doctest::Approx(0.2512305422172776).epsilon(1e-9));
  CHECK(rep.is_pure);

  // nearly equal widths: R << 1, nu >> 1
  const MesonParams b_meson{0.7, 1.0, 0.999};
  const twopath::DualityReport b_rep = meson_model(b_meson).fringe_index();
  CHECK(b_rep.ratio < 1e-3);
  CHECK(b_rep.nu > 100.0);
}

TEST_CASE("predictability: both algebraic routes, limits, duality") {
  const MesonParams p = twopath::kaon_params();
  CHECK(meson_predictability(p, 0.0) == 0.0);
  CHECK(meson_predictability(p, 1e4) == doctest::Approx(1.0).epsilon(1e-12));

  const twopath::UnifiedModel model = meson_model(p);
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = 12.0 * i / 1000.0;
    const double direct = meson_predictability(p, t);
    const double weights = meson_predictability_from_weights(p, t);
    CHECK(std::abs(direct - weights) < 1e-12);

    const double v = model.visibility(t);
    CHECK(std::abs(direct * direct + v * v - 1.0) < 1e-12);

    CHECK(direct > prev);  // strictly increasing
    prev = direct;
  }
}

TEST_CASE("negative time and invalid parameters are rejected") {
  const MesonParams p = twopath::kaon_params();
  CHECK_THROWS_AS(evolve(p, Flavor::particle, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(
      strangeness_probability(p, Flavor::particle, Flavor::particle, -1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(meson_predictability(p, -2.0), std::invalid_argument);

  MesonParams bad = p;
  bad.width_long = 2.0;  // would make Gamma_L > Gamma_S
  CHECK_THROWS_AS(meson_model(bad), std::invalid_argument);
  bad = p;
  bad.mass_splitting = 0.0;
  CHECK_THROWS_AS(meson_model(bad), std::invalid_argument);
}

TEST_SUITE_END();
