#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twopath/doubleslit.hpp"
#include "twopath/meson.hpp"
#include "twopath/mott.hpp"

namespace twopath {

/// Configuration rejection; the message names the offending field
/// ("parameters.x0: ...").
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform sampling grid over the set-up's abscissa.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 0;

  void validate() const;  // finite, min < max, points >= 2
  /// The i-th of `points` uniform samples on [min, max].
  double at(std::size_t i) const;
  std::vector<double> samples() const;
};

enum class SetupKind { bartell, beamsplitter, meson, mott };

std::string_view to_string(SetupKind k);

/// A fully resolved run configuration: one set-up kind, its parameters
/// (given directly or through a named preset), and an optional grid.
struct SetupConfig {
  SetupKind kind = SetupKind::bartell;
  std::optional<std::string> preset;
  std::variant<BartellSetup, BeamSplitterSetup, MesonParams, MottParams>
      parameters;
  std::optional<GridSpec> grid;
};

/// Parse and validate a JSON configuration document (see README for the
/// schema). `preset` and `parameters` are mutually exclusive.
SetupConfig parse_config(const std::string& json_text);

/// Look up one of the bundled named set-ups.
SetupConfig preset_config(std::string_view name);
const std::vector<std::string>& preset_names();

/// The kind-specific sampling grid used when none is configured:
/// [-5 sigma, 5 sigma] for the optical set-ups, [0, 12/Gamma_S] for mesons,
/// [0.02 pi, 0.98 pi] for Mott scattering; 2001 points each.
GridSpec default_grid(const SetupConfig& c);

/// The configured grid, or the default when absent.
GridSpec effective_grid(const SetupConfig& c);

/// Parse a "min:max:points" grid override (CLI form).
GridSpec parse_grid_spec(const std::string& text);

}  // namespace twopath
