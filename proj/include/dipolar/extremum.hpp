#pragma once

#include <optional>

namespace dipolar {

struct ExtremumResult {
  double x_m = 0.0;  ///< reduced inverse temperature at the maximum
  double t_m = 0.0;  ///< k_B T_m / D = 1 / x_m
  double q_m = 0.0;  ///< discord at the maximum, bits
  /// Stationarity residual: |stationarity equation| at x_m for the zero-field
  /// solve, |dQ/dx| (centered difference) for the in-field search.
  double residual = 0.0;
  /// Zero-field solve only: |x_m - x_direct| where x_direct maximizes the
  /// closed-form Q(x) directly.
  std::optional<double> cross_check_gap;
};

/// Agreement expected between the root and the direct maximization.
inline constexpr double kCrossCheckTolerance = 1e-9;

/// Left side minus right side of the zero-field stationarity condition
///   x (e^{Delta x} + cosh x + Delta sinh x) = (sinh x + Delta cosh x) ln cosh x.
double zero_field_stationarity(double delta, double x);

/// Zero-field discord maximum from the stationarity root (bracket on a
/// geometric grid over x in [1e-3, 50], bisection to width 1e-13, secant
/// polish), cross-checked against direct maximization of Q(x).
/// Requires delta < -1; throws NoBracket if no sign change is found.
ExtremumResult solve_zero_field_max(double delta);

/// Maximum over x of the X-state discord at fixed field. Even in eta.
ExtremumResult locate_max_in_field(double delta, double eta);

}  // namespace dipolar
