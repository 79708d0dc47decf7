#pragma once

namespace twopath {

/// Fringe-survival constant arccosh(e)/(2*pi) ~= 0.2638.
///
/// A 1/cosh(A y) envelope falls to 1/e at y* = arccosh(e)/A; the phase B*y*
/// accumulated by then spans fringe_constant() * |B/A| full fringes. The
/// familiar three-digit display value is 0.264.
double fringe_constant();

/// Abscissa where a 1/cosh(A y) envelope has decayed by a factor e,
/// i.e. arccosh(e)/A. Returns +inf when envelope_rate is zero.
double e_fold_position(double envelope_rate);

/// One evaluated abscissa of the visibility/predictability trade-off.
struct DualityPoint {
  double y = 0.0;
  double visibility = 0.0;        ///< in (0, K]
  double predictability = 0.0;    ///< in [1-K, 1)
  double phase = 0.0;             ///< radians
  double duality_residual = 0.0;  ///< P^2 + V^2 - 1, always <= 0
};

/// Fringe-budget summary of a model.
struct DualityReport {
  double ratio = 0.0;      ///< R = |A / B|
  double nu = 0.0;         ///< fringe_constant() / R; +inf when unbounded
  bool is_pure = true;     ///< K == 1
  bool unbounded = false;  ///< A == 0: the visibility never decays
  double e_fold_y = 0.0;   ///< arccosh(e)/A; +inf when unbounded
  /// Worst observed violation of P^2 + V^2 <= 1 (filled by duality_scan;
  /// zero until a scan ran).
  double max_abs_residual_violation = 0.0;
};

/// The two-rate-plus-mixedness family
///
///   V0(y) = K / cosh(A y),   P(y) = 1 - K + K |tanh(A y)|,   phi(y) = B y,
///
/// every supported two-path set-up reduces to. A is canonicalized
/// non-negative at construction (all formulas are even in A), B must be
/// nonzero, and K lies in (0, 1] with K == 1 marking a pure state. The
/// pure flag is fixed at construction, never re-derived from comparisons.
///
/// All member functions are pure; instances are safe to share across
/// threads.
class UnifiedModel {
 public:
  /// Pure-state model (K = 1).
  UnifiedModel(double envelope_rate, double phase_rate);
  UnifiedModel(double envelope_rate, double phase_rate, double mixedness);

  double envelope_rate() const { return envelope_rate_; }  ///< A >= 0
  double phase_rate() const { return phase_rate_; }        ///< B != 0
  double mixedness() const { return mixedness_; }          ///< K in (0, 1]
  bool is_pure() const { return pure_; }

  /// K / cosh(A y), in (0, K].
  double visibility(double y) const;
  /// 1 - K + K |tanh(A y)|, in [1-K, 1); even in y.
  double predictability(double y) const;
  /// B y.
  double phase(double y) const;
  /// 1 + V0(y) cos(B y), in [1-K, 1+K].
  double oscillatory_factor(double y) const;
  /// P^2 + V^2 - 1 in the reduced form 2K(1-K)(|tanh(A y)| - 1);
  /// nonpositive by construction and exactly zero for pure states.
  double duality_residual(double y) const;

  double e_fold_position() const;  ///< arccosh(e)/A, +inf when A == 0
  double ratio() const;            ///< R = A / |B|
  /// R, nu, pure flag and e-fold position; A == 0 yields the distinguished
  /// unbounded outcome (nu = +inf) rather than an error.
  DualityReport fringe_index() const;

 private:
  double envelope_rate_;
  double phase_rate_;
  double mixedness_;
  bool pure_;
};

/// Every duality quantity at one abscissa.
DualityPoint evaluate(const UnifiedModel& m, double y);

}  // namespace twopath
