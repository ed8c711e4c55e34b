#include "dipolar/extremum.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>

#include "dipolar/core_model.hpp"
#include "dipolar/correlations.hpp"
#include "dipolar/errors.hpp"
#include "dipolar/numerics.hpp"

namespace dipolar {

namespace {

constexpr double kScanLo = 1e-3;
constexpr double kScanHi = 50.0;
constexpr int kScanPoints = 400;
constexpr double kRootWidth = 1e-13;

// Maximum of q over the scan grid, refined inside the neighbouring cells.
template <class F>
double maximize_on_scan(F&& q) {
  const std::vector<double> grid = numerics::geometric_grid(kScanLo, kScanHi, kScanPoints);
  std::size_t best = 0;
  double best_value = q(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double value = q(grid[i]);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  return numerics::maximize(q, lo, hi);
}

}  // namespace

double zero_field_stationarity(double delta, double x) {
  const double ch = std::cosh(x);
  const double sh = std::sinh(x);
  return x * (std::exp(delta * x) + ch + delta * sh) - (sh + delta * ch) * numerics::log_cosh(x);
}

ExtremumResult solve_zero_field_max(double delta) {
  if (!(delta < -1.0)) {
    throw InvalidArgument("the zero-field discord maximum requires delta < -1");
  }
  auto f = [delta](double x) { return zero_field_stationarity(delta, x); };

  const auto bracket = numerics::find_sign_change(f, numerics::geometric_grid(kScanLo, kScanHi, kScanPoints));
  if (!bracket) {
    std::ostringstream msg;
    msg << "no sign change of the stationarity condition for delta = " << delta
        << " on x in (" << kScanLo << ", " << kScanHi << ")";
    throw NoBracket(msg.str());
  }

  auto [lo, hi] = numerics::bisect(f, bracket->first, bracket->second, kRootWidth);

  // Secant polish inside the final bracket; keep whichever point has the
  // smallest residual.
  double x_m = std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (hi > lo && f_hi != f_lo) {
    const double secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    if (secant >= lo && secant <= hi && std::abs(f(secant)) < std::abs(f(x_m))) x_m = secant;
  }

  ExtremumResult r;
  r.x_m = x_m;
  r.t_m = 1.0 / x_m;
  r.q_m = discord_thermal_zero_field(delta, x_m);
  r.residual = std::abs(f(x_m));

  const double x_direct =
      maximize_on_scan([delta](double x) { return discord_thermal_zero_field(delta, x); });
  r.cross_check_gap = std::abs(x_direct - x_m);
  return r;
}

ExtremumResult locate_max_in_field(double delta, double eta) {
  DimerParams params;
  params.delta = delta;
  params.eta = std::abs(eta);
  params.validate();

  auto q = [params](double x) { return discord(gibbs_xstate(params, ThermalPoint::from_x(x))); };
  const double x_m = maximize_on_scan(q);

  ExtremumResult r;
  r.x_m = x_m;
  r.t_m = 1.0 / x_m;
  r.q_m = q(x_m);
  r.residual = std::abs(numerics::centered_derivative(q, x_m, 1e-5 * x_m));
  return r;
}

}  // namespace dipolar
