#include "twopath/unified.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace twopath {

double fringe_constant() {
  static const double c =
      std::acosh(std::numbers::e) / (2.0 * std::numbers::pi);
  return c;
}

double e_fold_position(double envelope_rate) {
  if (envelope_rate == 0.0) return std::numeric_limits<double>::infinity();
  return std::acosh(std::numbers::e) / envelope_rate;
}

UnifiedModel::UnifiedModel(double envelope_rate, double phase_rate)
    : UnifiedModel(envelope_rate, phase_rate, 1.0) {}

UnifiedModel::UnifiedModel(double envelope_rate, double phase_rate,
                           double mixedness)
    : envelope_rate_(std::abs(envelope_rate)),
      phase_rate_(phase_rate),
      mixedness_(mixedness),
      pure_(mixedness == 1.0) {
  if (!std::isfinite(envelope_rate_) || !std::isfinite(phase_rate_) ||
      !std::isfinite(mixedness_))
    throw std::invalid_argument("UnifiedModel: parameters must be finite");
  if (phase_rate_ == 0.0)
    throw std::invalid_argument("UnifiedModel: phase rate B must be nonzero");
  if (!(mixedness_ > 0.0 && mixedness_ <= 1.0))
    throw std::invalid_argument("UnifiedModel: mixedness K must be in (0, 1]");
}

double UnifiedModel::visibility(double y) const {
  return mixedness_ / std::cosh(envelope_rate_ * y);
}

double UnifiedModel::predictability(double y) const {
  return 1.0 - mixedness_ +
         mixedness_ * std::abs(std::tanh(envelope_rate_ * y));
}

double UnifiedModel::phase(double y) const { return phase_rate_ * y; }

double UnifiedModel::oscillatory_factor(double y) const {
  return 1.0 + visibility(y) * std::cos(phase(y));
}

double UnifiedModel::duality_residual(double y) const {
  // + 0.0 turns the pure-state -0.0 into plain 0.0
  return 2.0 * mixedness_ * (1.0 - mixedness_) *
             (std::abs(std::tanh(envelope_rate_ * y)) - 1.0) +
         0.0;
}

double UnifiedModel::e_fold_position() const {
  return twopath::e_fold_position(envelope_rate_);
}

double UnifiedModel::ratio() const {
  return envelope_rate_ / std::abs(phase_rate_);
}

DualityReport UnifiedModel::fringe_index() const {
  DualityReport rep;
  rep.ratio = ratio();
  rep.is_pure = pure_;
  rep.unbounded = (envelope_rate_ == 0.0);
  rep.e_fold_y = e_fold_position();
  rep.nu = rep.unbounded ? std::numeric_limits<double>::infinity()
                         : fringe_constant() / rep.ratio;
  return rep;
}

DualityPoint evaluate(const UnifiedModel& m, double y) {
  return DualityPoint{y, m.visibility(y), m.predictability(y), m.phase(y),
                      m.duality_residual(y)};
}

}  // namespace twopath
