#include "twopath/mott.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twopath {

namespace {

struct Nuclide {
  std::string_view name;
  int charge;
  double mass_energy;  // MeV
};

// Nuclear Mc^2 = AME2020 atomic mass minus Z electron rest masses
// (u = 931.49410242 MeV, m_e = 0.51099895 MeV).
constexpr std::array<Nuclide, 4> kNuclides{{
    {"He-4", 2, 3727.3793275281013},
    {"C-12", 6, 11174.86323534},
    {"C-13", 6, 12109.482346777092},
    {"O-16", 8, 14895.080645641435},
}};

const Nuclide& find_nuclide(std::string_view name) {
  for (const auto& n : kNuclides)
    if (n.name == name) return n;
  throw std::invalid_argument("unknown nuclide \"" + std::string(name) +
                              "\" (known: He-4, C-12, C-13, O-16)");
}

void require_angle(double theta) {
  if (!(std::isfinite(theta) && theta > 0.0 && theta < std::numbers::pi))
    throw std::invalid_argument(
        "mott: scattering angle must lie strictly inside (0, pi)");
}

}  // namespace

void MottParams::validate() const {
  if (charge < 1) throw std::invalid_argument("MottParams.Z: must be >= 1");
  if (!(std::isfinite(mass_energy) && mass_energy > 0.0))
    throw std::invalid_argument("MottParams.mass_energy: must be > 0");
  if (!(std::isfinite(energy) && energy > 0.0))
    throw std::invalid_argument("MottParams.E: must be > 0");
  if (spin_twice < 0)
    throw std::invalid_argument("MottParams.spin2: must be >= 0");
}

double nuclear_mass_energy(std::string_view nuclide) {
  return find_nuclide(nuclide).mass_energy;
}

int nuclear_charge(std::string_view nuclide) {
  return find_nuclide(nuclide).charge;
}

double sommerfeld_eta(const MottParams& p) {
  p.validate();
  const double z = static_cast<double>(p.charge);
  return z * z * fine_structure_constant *
         std::sqrt(p.mass_energy / (2.0 * p.energy));
}

double spin_factor(const MottParams& p) {
  p.validate();
  if (p.polarized || p.spin_twice == 0) return 1.0;
  const double sign = (p.spin_twice % 2 == 0) ? 1.0 : -1.0;
  return sign / static_cast<double>(p.spin_twice + 1);
}

double mott_cross_section(const MottParams& p, double theta) {
  require_angle(theta);
  const double c_s = spin_factor(p);
  const double eta = sommerfeld_eta(p);
  const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
  const double direct = 1.0 / (s2 * s2);
  const double exchange = 1.0 / (c2 * c2);
  const double interference =
      c_s * 2.0 / (s2 * c2) * std::cos(eta * log_tan_transform(theta));
  return direct + exchange + interference;
}

double log_tan_transform(double theta) {
  require_angle(theta);
  return 2.0 * std::log(std::tan(0.5 * theta));
}

double inverse_log_tan_transform(double x) {
  if (std::isnan(x))
    throw std::invalid_argument("inverse_log_tan_transform: x must not be NaN");
  return 2.0 * std::atan(std::exp(0.5 * x));
}

MottReduced mott_model(const MottParams& p) {
  const double eta = sommerfeld_eta(p);
  const double c_s = spin_factor(p);
  const double k = std::abs(c_s);
  return MottReduced{eta, c_s, k, UnifiedModel(1.0, eta, k)};
}

double mott_predictability(const MottParams& p, double theta) {
  require_angle(theta);
  p.validate();
  if (p.polarized || p.spin_twice == 0) {
    const double c = std::cos(theta);
    return 2.0 * std::abs(c) / (1.0 + c * c);
  }
  const double two_s = static_cast<double>(p.spin_twice);
  return (two_s + std::abs(std::tanh(log_tan_transform(theta)))) /
         (two_s + 1.0);
}

}  // namespace twopath
