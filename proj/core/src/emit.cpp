#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "twopath/series.hpp"

namespace twopath {

namespace {

// 17 significant digits: enough to round-trip a double exactly.
std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_csv(const PatternSeries& s) {
  std::string out;
  out.reserve(64 * (s.rows() + 12));
  out += "# kind: " + s.kind + "\n";
  out += "# A: " + sci(s.envelope_rate) + "\n";
  out += "# B: " + sci(s.phase_rate) + "\n";
  out += "# K: " + sci(s.mixedness) + "\n";
  out += "# R: " + sci(s.ratio) + "\n";
  out += "# nu: " + sci(s.nu) + "\n";
  out += "# r_rounded: " + sci(s.r_rounded) + "\n";
  if (s.r_rounded > 0.0)
    out += "# nu_rounded: " + sci(s.nu_rounded) + "\n";
  out += std::string("# is_pure: ") + bool_name(s.is_pure) + "\n";
  out += std::string("# unbounded: ") + bool_name(s.unbounded) + "\n";
  out += "# e_fold_y: " + sci(s.e_fold_y) + "\n";
  out += "y,intensity_factor,visibility,predictability,phase,duality_residual\n";
  for (std::size_t i = 0; i < s.rows(); ++i) {
    out += sci(s.y[i]);
    out += ',';
    out += sci(s.intensity_factor[i]);
    out += ',';
    out += sci(s.visibility[i]);
    out += ',';
    out += sci(s.predictability[i]);
    out += ',';
    out += sci(s.phase[i]);
    out += ',';
    out += sci(s.duality_residual[i]);
    out += '\n';
  }
  return out;
}

std::string to_svg(const PatternSeries& s) {
  // 800 x 500 viewbox, fixed margins
  constexpr double left = 60.0, right = 780.0, top = 20.0, bottom = 460.0;
  const double two_pi = 2.0 * std::numbers::pi;

  // abscissa in fringe counts (phase / 2 pi)
  std::vector<double> u(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) u[i] = s.phase[i] / two_pi;

  const auto [u_min_it, u_max_it] = std::minmax_element(u.begin(), u.end());
  const auto [f_min_it, f_max_it] =
      std::minmax_element(s.intensity_factor.begin(), s.intensity_factor.end());
  double u_min = *u_min_it, u_max = *u_max_it;
  double f_min = *f_min_it, f_max = *f_max_it;
  if (u_max == u_min) u_max = u_min + 1.0;
  const double f_pad = (f_max > f_min) ? 0.05 * (f_max - f_min) : 0.5;
  f_min -= f_pad;
  f_max += f_pad;

  const auto px = [&](double uv) {
    return left + (right - left) * (uv - u_min) / (u_max - u_min);
  };
  const auto py = [&](double fv) {
    return bottom - (bottom - top) * (fv - f_min) / (f_max - f_min);
  };

  std::string svg;
  svg.reserve(32 * s.rows() + 2048);
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
      "width=\"800\" height=\"500\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

  // frame
  svg += "<rect x=\"" + fixed3(left) + "\" y=\"" + fixed3(top) + "\" width=\"" +
         fixed3(right - left) + "\" height=\"" + fixed3(bottom - top) +
         "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

  // guide lines at 1 -/+ 1/e: inside them |cos|/cosh exceeds 1/e
  const double inv_e = 1.0 / std::numbers::e;
  for (const double level : {1.0 - inv_e, 1.0 + inv_e}) {
    if (level < f_min || level > f_max) continue;
    svg += "<line x1=\"" + fixed3(left) + "\" y1=\"" + fixed3(py(level)) +
           "\" x2=\"" + fixed3(right) + "\" y2=\"" + fixed3(py(level)) +
           "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  }

  // vertical marker at the fringe index
  if (!s.unbounded && s.nu >= u_min && s.nu <= u_max) {
    svg += "<line x1=\"" + fixed3(px(s.nu)) + "\" y1=\"" + fixed3(top) +
           "\" x2=\"" + fixed3(px(s.nu)) + "\" y2=\"" + fixed3(bottom) +
           "\" stroke=\"#c03030\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + fixed3(px(s.nu) + 4.0) + "\" y=\"" +
           fixed3(top + 14.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#c03030\">nu</text>\n";
  }

  svg += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (i) svg += ' ';
    svg += fixed3(px(u[i])) + "," + fixed3(py(s.intensity_factor[i]));
  }
  svg += "\"/>\n";

  svg += "<text x=\"" + fixed3(0.5 * (left + right)) + "\" y=\"490\" "
         "font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
         "phase / 2pi (fringe counts)</text>\n";
  svg += "<text x=\"16\" y=\"" + fixed3(0.5 * (top + bottom)) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 16 " + fixed3(0.5 * (top + bottom)) + ")\">"
         "intensity factor</text>\n";
  svg += "<text x=\"" + fixed3(left) + "\" y=\"16\" font-family=\"sans-serif\" "
         "font-size=\"12\">" + s.kind + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace twopath
