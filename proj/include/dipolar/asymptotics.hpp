#pragma once

// Truncated high-temperature series (small x) and leading low-temperature
// forms (large x) of the thermal correlators and correlations. These are
// reference curves; the library does not police their validity range
// (roughly x <= 0.1 and x >= 10 respectively).

namespace dipolar::asymptotics {

struct SeriesCorrelators {
  double m = 0.0;
  double g_par = 0.0;
  double g_perp = 0.0;
};

struct SeriesBranches {
  double q1 = 0.0;
  double q2 = 0.0;
};

struct LowTCorrelators {
  double g_par = 0.0;
  double g_perp = 0.0;
};

/// m through x^2, G|| through x^2, G_perp through x^3.
SeriesCorrelators high_t_correlators(double delta, double eta, double x);

/// Q1 through x^3, Q2 through x^2.
SeriesBranches high_t_discord_branches(double delta, double x);

/// x^2 / (4 ln 2); independent of field and anisotropy.
double high_t_discord(double x);

/// Delta^2 x^2 / (8 ln 2).
double high_t_classical(double delta, double x);

/// Dipolar dimer (Delta = -2) as T -> 0: weights 1 and 1/2 at zero field,
/// 2 and 1 in a field, both multiplying e^{-x}.
LowTCorrelators low_t_correlators(double eta, double x);

/// e^{-x} / 2 for the dipolar dimer at zero field.
double low_t_discord(double x);

}  // namespace dipolar::asymptotics
