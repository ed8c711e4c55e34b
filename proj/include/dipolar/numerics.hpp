#pragma once

// One-dimensional root bracketing, bisection and maximization helpers.

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace dipolar::numerics {

/// ln cosh x without overflow or cancellation.
inline double log_cosh(double x) {
  x = std::abs(x);
  if (x < 1.0) {
    const double half_sinh = std::sinh(0.5 * x);
    return std::log1p(2.0 * half_sinh * half_sinh);
  }
  return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

/// n points spaced geometrically on [lo, hi], endpoints included.
inline std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double ratio = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

/// First adjacent pair of grid points across which f changes sign.
template <class F>
std::optional<std::pair<double, double>> find_sign_change(F&& f, const std::vector<double>& grid) {
  if (grid.size() < 2) return std::nullopt;
  double prev = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = f(grid[i]);
    if (prev == 0.0) return std::pair{grid[i - 1], grid[i - 1]};
    if ((prev < 0.0) != (cur < 0.0)) return std::pair{grid[i - 1], grid[i]};
    prev = cur;
  }
  return std::nullopt;
}

/// Bisection on a sign-changing bracket until hi - lo <= width. Returns the
/// final bracket.
template <class F>
std::pair<double, double> bisect(F&& f, double lo, double hi, double width, int max_iter = 200) {
  double f_lo = f(lo);
  for (int i = 0; i < max_iter && hi - lo > width; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, mid};
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol, int max_iter = 300) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

/// Centered difference f'(x) with step h.
template <class F>
double centered_derivative(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Golden-section maximization refined by bisection on the centered-difference
/// derivative. Comparing function values alone resolves a smooth maximum only
/// to about sqrt(eps); the derivative polish gets close to eps / f''.
template <class F>
double maximize(F&& f, double lo, double hi) {
  const double x_golden = golden_section_max(f, lo, hi, 1e-10 * (1.0 + std::abs(hi)));
  const double h = 1e-5 * x_golden;
  auto slope = [&](double x) { return centered_derivative(f, x, h); };
  const double w = 1e-6 * x_golden;
  const double a = x_golden - w;
  const double b = x_golden + w;
  const double sa = slope(a);
  const double sb = slope(b);
  if (!(sa > 0.0 && sb < 0.0)) return x_golden;
  const auto [rlo, rhi] = bisect(slope, a, b, 1e-15 * x_golden);
  return 0.5 * (rlo + rhi);
}

}  // namespace dipolar::numerics
