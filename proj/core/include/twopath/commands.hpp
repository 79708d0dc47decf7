#pragma once

#include <optional>
#include <string>

#include "twopath/oracles.hpp"
#include "twopath/series.hpp"

namespace twopath {

struct ProfileResult {
  PatternSeries series;
  std::string csv;
  std::string svg;
};

/// `profile`: sample the configured set-up and render the CSV/SVG
/// documents. Byte-identical output for identical configs.
ProfileResult cmd_profile(const SetupConfig& c);

/// `report`: reduced-model summary {kind, A, B, K, R, nu, r_rounded,
/// nu_rounded, is_pure, unbounded, e_fold_y, max_residual} as a JSON
/// document. max_residual is the worst deviation of the pointwise
/// P^2 + V^2 - 1 sweep from the closed-form residual over the grid.
std::string cmd_report(const SetupConfig& c);

struct VerifyResult {
  OracleResult oracle;
  std::string json;
};

/// `verify`: run the kind's independent oracle against the closed form.
/// Kind defaults when no tolerance is given: 1e-6 for the quadrature-backed
/// optical set-ups, 1e-12 for the algebraic meson and Mott identities.
/// Quadrature non-convergence propagates as OracleError.
VerifyResult cmd_verify(const SetupConfig& c,
                        std::optional<double> tolerance = std::nullopt);

}  // namespace twopath
