#include "twopath/oracles.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace twopath {

namespace {

struct QuadratureRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Composite Gauss-Legendre: `panels` equal subintervals of [a, b], a fixed
// `order`-point rule on each.
QuadratureRule composite_gauss_legendre(double a, double b,
                                        std::size_t panels,
                                        std::size_t order) {
  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(order);
  QuadratureRule rule;
  rule.x.reserve(panels * order);
  rule.w.reserve(panels * order);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double pa = a + h * static_cast<double>(p);
    const double pb = pa + h;
    for (std::size_t i = 0; i < order; ++i) {
      double xi = 0.0, wi = 0.0;
      gsl_integration_glfixed_point(pa, pb, i, &xi, &wi, table);
      rule.x.push_back(xi);
      rule.w.push_back(wi);
    }
  }
  gsl_integration_glfixed_table_free(table);
  return rule;
}

std::vector<double> fresnel_pass(const BartellSetup& s,
                                 std::span<const double> y_grid,
                                 std::size_t panels, std::size_t order,
                                 double window_slit_widths) {
  const double half_sep = 0.5 * s.slit_separation;
  const double a = -half_sep - window_slit_widths * s.slit_width;
  const double b = +half_sep + window_slit_widths * s.slit_width;
  const QuadratureRule rule = composite_gauss_legendre(a, b, panels, order);

  // The y^2 piece of the propagation phase is common to all x and drops out
  // of |U|^2, so the integrand factorizes as psi(x) * exp(-i (k/l) x y) with
  //   psi(x) = w(x) [T(x - d/2) + T(x + d/2)] exp(i (k/2)(1/l - 1/f) x^2).
  const double inv_two_x0sq = 0.5 / (s.slit_width * s.slit_width);
  const double chirp =
      0.5 * s.wavenumber * (1.0 / s.screen_distance - 1.0 / s.focal_length);
  const std::size_t n = rule.x.size();
  std::vector<std::complex<double>> psi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rule.x[i];
    const double um = x - half_sep;
    const double up = x + half_sep;
    const double apert = std::exp(-um * um * inv_two_x0sq) +
                         std::exp(-up * up * inv_two_x0sq);
    psi[i] = rule.w[i] * apert * std::polar(1.0, chirp * x * x);
  }

  const double k_over_l = s.wavenumber / s.screen_distance;
  std::vector<double> out;
  out.reserve(y_grid.size());
  for (double y : y_grid) {
    std::complex<double> u{0.0, 0.0};
    const double freq = -k_over_l * y;
    for (std::size_t i = 0; i < n; ++i)
      u += psi[i] * std::polar(1.0, freq * rule.x[i]);
    out.push_back(std::norm(u));
  }
  return out;
}

}  // namespace

std::vector<double> fresnel_intensity_oracle(const BartellSetup& s,
                                             std::span<const double> y_grid,
                                             const FresnelOptions& opt) {
  s.validate();
  if (y_grid.empty())
    throw std::invalid_argument("fresnel_intensity_oracle: empty grid");
  const std::size_t order = 32;
  const std::size_t nodes = std::max<std::size_t>(opt.nodes, 4096);
  const std::size_t panels = (nodes + order - 1) / order;
  // at least 8 x0 around each slit center (Gaussian tail below e^-32)
  const double window = std::max(opt.window_slit_widths, 8.0);

  const std::vector<double> coarse =
      fresnel_pass(s, y_grid, panels, order, window);
  std::vector<double> fine = fresnel_pass(s, y_grid, 2 * panels, order, window);

  const double peak = *std::max_element(fine.begin(), fine.end());
  double max_change = 0.0;
  for (std::size_t i = 0; i < fine.size(); ++i)
    max_change = std::max(max_change, std::abs(fine[i] - coarse[i]));
  if (!(peak > 0.0) || !(max_change / peak <= opt.convergence_tol)) {
    std::ostringstream msg;
    msg << "fresnel_intensity_oracle: node doubling (" << panels * order
        << " -> " << 2 * panels * order << ") changed the intensity by "
        << max_change / peak << " of peak, above the convergence tolerance "
        << opt.convergence_tol;
    throw OracleError(msg.str());
  }
  return fine;
}

std::vector<double> beamsplitter_oracle(const BeamSplitterSetup& s,
                                        std::span<const double> y_grid) {
  s.validate();
  const double sin_theta = std::sin(s.half_angle);
  const double center = s.displacement * sin_theta;
  const double inv_two_x0sq = 0.5 / (s.beam_width * s.beam_width);
  const double tilt = s.wavenumber * sin_theta;
  std::vector<double> out;
  out.reserve(y_grid.size());
  for (double y : y_grid) {
    const double ym = y - center;
    const double yp = y + center;
    const std::complex<double> u_plus =
        std::exp(-ym * ym * inv_two_x0sq) * std::polar(1.0, tilt * y);
    const std::complex<double> u_minus =
        std::exp(-yp * yp * inv_two_x0sq) * std::polar(1.0, -tilt * y);
    out.push_back(std::norm(u_plus + u_minus));
  }
  return out;
}

FringeCount count_fringes(const UnifiedModel& m) {
  FringeCount fc;
  fc.unbounded = (m.envelope_rate() == 0.0);
  fc.nu = m.fringe_index().nu;
  if (fc.unbounded) {
    fc.within_one = true;
    return fc;
  }
  const double a = m.envelope_rate();
  const double b = std::abs(m.phase_rate());
  const double y_end = m.e_fold_position();

  // The factor 1 + V0 cos(By) has derivative -K sech(Ay) h(y) with
  //   h(y) = A tanh(Ay) cos(By) + B sin(By);
  // a maximum is a -/+ sign change of h. Sample finely enough to isolate
  // every oscillation of sin(By), then bisect each bracket.
  const auto h = [a, b](double y) {
    return a * std::tanh(a * y) * std::cos(b * y) + b * std::sin(b * y);
  };
  const double oscillations = b * y_end / std::numbers::pi;
  if (oscillations > 1e7)
    throw std::invalid_argument(
        "count_fringes: too many fringes to enumerate; use fringe_index()");
  const std::size_t samples =
      std::max<std::size_t>(4096, 32 * (1 + static_cast<std::size_t>(oscillations)));
  const double step = y_end / static_cast<double>(samples);

  std::size_t maxima = 0;
  double y_prev = step;  // the interval is open at 0
  double h_prev = h(y_prev);
  for (std::size_t i = 2; i <= samples; ++i) {
    const double y_cur = step * static_cast<double>(i);
    const double h_cur = h(y_cur);
    if (h_prev < 0.0 && h_cur >= 0.0) {
      double lo = y_prev, hi = y_cur;
      for (int it = 0; it < 64 && (hi - lo) > 1e-15 * y_end; ++it) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
      }
      ++maxima;
    }
    y_prev = y_cur;
    h_prev = h_cur;
  }
  fc.maxima = maxima;
  fc.within_one =
      std::abs(static_cast<double>(maxima) - fc.nu) <= 1.0 + 1e-12;
  return fc;
}

DualityScan duality_scan(const UnifiedModel& m,
                         std::span<const double> y_grid) {
  if (y_grid.empty())
    throw std::invalid_argument("duality_scan: empty grid");
  DualityScan scan;
  scan.n_samples = y_grid.size();
  for (double y : y_grid) {
    const double v = m.visibility(y);
    const double p = m.predictability(y);
    const double residual = p * p + v * v - 1.0;
    const double closed = m.duality_residual(y);
    scan.max_abs_residual = std::max(scan.max_abs_residual, std::abs(residual));
    scan.max_positive_residual =
        std::max(scan.max_positive_residual, residual);
    scan.max_closed_form_deviation =
        std::max(scan.max_closed_form_deviation, std::abs(residual - closed));
  }
  scan.max_positive_residual = std::max(scan.max_positive_residual, 0.0);
  scan.report = m.fringe_index();
  scan.report.max_abs_residual_violation =
      m.is_pure() ? scan.max_abs_residual : scan.max_positive_residual;
  return scan;
}

namespace {

OracleResult compare_impl(std::span<const double> y_grid,
                          std::span<const double> test_curve,
                          std::span<const double> reference, double scale_test,
                          double scale_ref, double tolerance) {
  OracleResult r;
  r.n_samples = y_grid.size();
  r.grid_min = *std::min_element(y_grid.begin(), y_grid.end());
  r.grid_max = *std::max_element(y_grid.begin(), y_grid.end());
  r.tolerance = tolerance;
  double max_diff = 0.0;
  double max_ref = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double t = test_curve[i] * scale_test;
    const double q = reference[i] * scale_ref;
    max_diff = std::max(max_diff, std::abs(t - q));
    max_ref = std::max(max_ref, std::abs(q));
  }
  if (!(max_ref > 0.0))
    throw std::invalid_argument("compare_curves: reference curve is zero");
  r.max_rel_error = max_diff / max_ref;
  r.passed = (r.max_rel_error <= tolerance);
  return r;
}

void check_sizes(std::span<const double> y_grid,
                 std::span<const double> test_curve,
                 std::span<const double> reference) {
  if (y_grid.empty() || test_curve.size() != y_grid.size() ||
      reference.size() != y_grid.size())
    throw std::invalid_argument("compare_curves: size mismatch or empty grid");
}

}  // namespace

OracleResult compare_curves(std::span<const double> y_grid,
                            std::span<const double> test_curve,
                            std::span<const double> reference,
                            double tolerance) {
  check_sizes(y_grid, test_curve, reference);
  return compare_impl(y_grid, test_curve, reference, 1.0, 1.0, tolerance);
}

OracleResult compare_curves_normalized(std::span<const double> y_grid,
                                       std::span<const double> test_curve,
                                       std::span<const double> reference,
                                       std::size_t anchor_index,
                                       double tolerance) {
  check_sizes(y_grid, test_curve, reference);
  if (anchor_index >= y_grid.size())
    throw std::invalid_argument("compare_curves: anchor index out of range");
  const double t0 = test_curve[anchor_index];
  const double r0 = reference[anchor_index];
  if (!(t0 != 0.0) || !(r0 != 0.0))
    throw std::invalid_argument(
        "compare_curves: zero anchor value, cannot normalize");
  return compare_impl(y_grid, test_curve, reference, 1.0 / t0, 1.0 / r0,
                      tolerance);
}

}  // namespace twopath
