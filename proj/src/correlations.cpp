#include "dipolar/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dipolar/errors.hpp"
#include "dipolar/numerics.hpp"

namespace dipolar {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double clamp_nonnegative(double p, const char* what) {
  if (std::isnan(p) || p < -kLogClampTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": logarithm argument " << p << " is negative";
    throw DomainError(msg.str());
  }
  return p > 0.0 ? p : 0.0;
}

// -p log2(p / q); zero when p = 0.
double relative_term(double p, double q) {
  p = clamp_nonnegative(p, "relative entropy term");
  if (p == 0.0) return 0.0;
  return -p * std::log2(p / q);
}

// (1 + y) log2(1 + y) style terms of the zero-field formulas.
double xlog2x(double y, const char* what) {
  y = clamp_nonnegative(y, what);
  return y == 0.0 ? 0.0 : y * std::log2(y);
}

}  // namespace

double entropy_term(double p) {
  p = clamp_nonnegative(p, "entropy term");
  return p == 0.0 ? 0.0 : -p * std::log2(p);
}

double binary_entropy(double p) { return entropy_term(p) + entropy_term(1.0 - p); }

double entropy_sub(const XState& s) { return entropy_term(s.a + s.b) + entropy_term(s.b + s.d); }

double entropy_joint(const XState& s) {
  return entropy_term(s.a) + entropy_term(s.d) + entropy_term(s.b + s.v) + entropy_term(s.b - s.v);
}

double mutual_information(const XState& s) {
  return std::max(0.0, 2.0 * entropy_sub(s) - entropy_joint(s));
}

DiscordBranches discord_branches(const XState& s) {
  const double base = entropy_sub(s) - entropy_joint(s);

  // Conditional entropy after measuring sigma^z on B.
  const double up = s.a + s.b;
  const double down = s.b + s.d;
  const double cond_z = relative_term(s.a, up) + relative_term(s.b, up) +
                        relative_term(s.b, down) + relative_term(s.d, down);

  // Conditional entropy after measuring sigma^x on B: both outcomes leave A
  // with Bloch radius sqrt((a - d)^2 + 4 v^2).
  const double radius = std::sqrt((s.a - s.d) * (s.a - s.d) + 4.0 * s.v * s.v);
  const double cond_x = entropy_term(0.5 * (1.0 + radius)) + entropy_term(0.5 * (1.0 - radius));

  return {base + cond_z, base + cond_x};
}

double discord(const XState& s) { return std::max(0.0, discord_branches(s).min()); }

double classical_correlation(const XState& s) {
  return std::max(0.0, mutual_information(s) - discord(s));
}

double zero_field_classical(double g_par) {
  return 0.5 * (xlog2x(1.0 + g_par, "zero_field_classical") +
                xlog2x(1.0 - g_par, "zero_field_classical"));
}

double zero_field_discord(double g_par, double g_perp) {
  const char* what = "zero_field_discord";
  const double q = 0.25 * (xlog2x(1.0 + 2.0 * g_perp - g_par, what) -
                           2.0 * xlog2x(1.0 - g_par, what) +
                           xlog2x(1.0 - 2.0 * g_perp - g_par, what));
  return std::max(0.0, q);
}

double discord_thermal_zero_field(double delta, double x) {
  if (!(x >= 0.0)) throw InvalidArgument("x must be >= 0");
  if (x == 0.0 || std::isinf(x)) return 0.0;

  // Numerator and denominator are divided by e^x:
  //   x sinh x - cosh x ln cosh x  ->  x s - c L
  //   cosh x + e^{-Delta x}        ->  c + e^{k},  k = -(Delta + 1) x
  // with s = (1 - e^{-2x})/2, c = (1 + e^{-2x})/2.
  const double e2 = std::exp(-2.0 * x);
  const double s = 0.5 * -std::expm1(-2.0 * x);
  const double c = 0.5 * (1.0 + e2);
  const double numerator = x * s - c * numerics::log_cosh(x);

  const double k = -(delta + 1.0) * x;
  double q;
  if (k > 0.0) {
    const double ek = std::exp(-k);
    q = numerator * ek / ((c * ek + 1.0) * kLn2);
  } else {
    q = numerator / ((c + std::exp(k)) * kLn2);
  }
  return std::max(0.0, q);
}

double concurrence(const XState& s) {
  // sqrt(a) sqrt(d) rather than sqrt(a d): the product underflows at low T.
  const double root_ad = std::sqrt(clamp_nonnegative(s.a, "concurrence")) *
                         std::sqrt(clamp_nonnegative(s.d, "concurrence"));
  const double c = 2.0 * (std::abs(s.v) - root_ad);
  // Entries normalized to 1 carry an absolute error of a few ulp; anything
  // below that is not a resolvable concurrence (and is where a or d
  // underflows to zero while v has not).
  return c > kConcurrenceResolution ? c : 0.0;
}

double entanglement(double c) {
  if (std::isnan(c) || c < -kLogClampTolerance || c > 1.0 + kLogClampTolerance) {
    throw DomainError("concurrence must lie in [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  if (c == 0.0) return 0.0;
  const double p = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return binary_entropy(p);
}

double geometric_discord_zero_field(double g_perp) { return g_perp * g_perp; }

double geometric_discord_zero_field(double g_perp, double eta) {
  if (eta != 0.0) {
    throw UndefinedAtField("geometric discord is only defined at zero field");
  }
  return geometric_discord_zero_field(g_perp);
}

CorrelationSet correlation_set(const XState& s, double eta) {
  CorrelationSet out;
  out.s_a = entropy_sub(s);
  out.s_ab = entropy_joint(s);
  out.mutual = std::max(0.0, 2.0 * out.s_a - out.s_ab);
  const DiscordBranches br = discord_branches(s);
  out.q1 = br.q1;
  out.q2 = br.q2;
  out.discord = std::max(0.0, br.min());
  out.classical = std::max(0.0, out.mutual - out.discord);
  out.concurrence = concurrence(s);
  out.entanglement = entanglement(out.concurrence);
  if (eta == 0.0) out.geometric = geometric_discord_zero_field(2.0 * s.v);
  return out;
}

CorrelationSet correlation_set(const DimerParams& params, ThermalPoint t) {
  return correlation_set(gibbs_xstate(params, t), params.eta);
}

}  // namespace dipolar
