#include "dipolar/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace dipolar::asymptotics {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

SeriesCorrelators high_t_correlators(double delta, double eta, double x) {
  const double x2 = x * x;
  const double x3 = x2 * x;
  SeriesCorrelators s;
  s.m = 0.5 * eta * x - 0.25 * delta * eta * x2;
  s.g_par = -0.5 * delta * x - 0.25 * (1.0 - eta * eta) * x2;
  s.g_perp = -0.5 * x - 0.25 * delta * x2 + 0.125 * (1.0 / 3.0 + eta * eta) * x3;
  return s;
}

SeriesBranches high_t_discord_branches(double delta, double x) {
  const double x2 = x * x;
  return {x2 / (4.0 * kLn2) + delta * x2 * x / (8.0 * kLn2),
          (1.0 + delta * delta) * x2 / (8.0 * kLn2)};
}

double high_t_discord(double x) { return x * x / (4.0 * kLn2); }

double high_t_classical(double delta, double x) { return delta * delta * x * x / (8.0 * kLn2); }

LowTCorrelators low_t_correlators(double eta, double x) {
  // The printed exponent is -x in both cases; the field only changes the
  // statistical weights.
  const double e = std::exp(-x);
  if (eta == 0.0) return {1.0 - e, -0.5 * e};
  return {1.0 - 2.0 * e, -e};
}

double low_t_discord(double x) { return 0.5 * std::exp(-x); }

}  // namespace dipolar::asymptotics
