#include "twopath/series.hpp"

#include <cmath>
#include <limits>

namespace twopath {

namespace {

struct ResolvedModel {
  UnifiedModel model;
  double signed_amplitude;
  bool abscissa_is_angle;  // mott: evaluate at x(theta)
};

ResolvedModel resolve(const SetupConfig& c) {
  switch (c.kind) {
    case SetupKind::bartell: {
      const auto m = bartell_model(std::get<BartellSetup>(c.parameters));
      return ResolvedModel{m.model, m.model.mixedness(), false};
    }
    case SetupKind::beamsplitter: {
      const auto m =
          beamsplitter_model(std::get<BeamSplitterSetup>(c.parameters));
      return ResolvedModel{m.model, m.model.mixedness(), false};
    }
    case SetupKind::meson: {
      const auto m = meson_model(std::get<MesonParams>(c.parameters));
      return ResolvedModel{m, m.mixedness(), false};
    }
    case SetupKind::mott: {
      const auto m = mott_model(std::get<MottParams>(c.parameters));
      return ResolvedModel{m.model, m.spin_interference, true};
    }
  }
  throw std::logic_error("resolve: unreachable");
}

}  // namespace

PatternSeries make_series(const SetupConfig& c) {
  const ResolvedModel r = resolve(c);
  const GridSpec grid = effective_grid(c);
  grid.validate();

  PatternSeries s;
  s.kind = std::string(to_string(c.kind));
  s.envelope_rate = r.model.envelope_rate();
  s.phase_rate = r.model.phase_rate();
  s.mixedness = r.model.mixedness();
  s.signed_amplitude = r.signed_amplitude;
  const DualityReport rep = r.model.fringe_index();
  s.ratio = rep.ratio;
  s.nu = rep.nu;
  s.is_pure = rep.is_pure;
  s.unbounded = rep.unbounded;
  s.e_fold_y = rep.e_fold_y;
  s.r_rounded = std::round(rep.ratio * 10.0) / 10.0;
  s.nu_rounded = (s.r_rounded > 0.0)
                     ? std::round(fringe_constant() * 1000.0) / 1000.0 /
                           s.r_rounded
                     : std::numeric_limits<double>::infinity();

  s.y.reserve(grid.points);
  s.intensity_factor.reserve(grid.points);
  s.visibility.reserve(grid.points);
  s.predictability.reserve(grid.points);
  s.phase.reserve(grid.points);
  s.duality_residual.reserve(grid.points);

  for (std::size_t i = 0; i < grid.points; ++i) {
    const double yi = grid.at(i);
    const double u = r.abscissa_is_angle ? log_tan_transform(yi) : yi;
    const double envelope = 1.0 / std::cosh(s.envelope_rate * u);
    const double phase = r.model.phase(u);
    s.y.push_back(yi);
    s.intensity_factor.push_back(
        1.0 + r.signed_amplitude * envelope * std::cos(phase));
    s.visibility.push_back(r.model.visibility(u));
    s.predictability.push_back(r.model.predictability(u));
    s.phase.push_back(phase);
    s.duality_residual.push_back(r.model.duality_residual(u));
  }
  return s;
}

}  // namespace twopath
