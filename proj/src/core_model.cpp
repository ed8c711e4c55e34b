#include "dipolar/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

// Boltzmann weights of the four eigenstates, shifted so that the ground
// level has weight 1. Index order: |00>, symmetric-block upper (E = -Delta/2 + 1),
// symmetric-block lower (E = -Delta/2 - 1), |11>.
struct ShiftedWeights {
  double w00 = 0.0;
  double upper = 0.0;
  double lower = 0.0;
  double w11 = 0.0;
  double ground = 0.0;

  double sum() const noexcept { return w00 + upper + lower + w11; }
};

ShiftedWeights shifted_weights(const DimerParams& p, ThermalPoint t) {
  const double e00 = p.delta / 2.0 - p.eta;
  const double e11 = p.delta / 2.0 + p.eta;
  const double e_upper = -p.delta / 2.0 + 1.0;
  const double e_lower = -p.delta / 2.0 - 1.0;
  const double ground = std::min({e00, e11, e_upper, e_lower});

  ShiftedWeights w;
  w.ground = ground;
  if (t.is_zero_temperature()) {
    // Exact T = 0 branch. The corner levels are selected by sign(eta) rather
    // than by comparing rounded energies, so a tiny field still polarizes.
    const double corner = p.delta / 2.0 - std::abs(p.eta);
    const double lowest = std::min(corner, e_lower);
    if (corner == lowest) {
      if (p.eta >= 0.0) w.w00 = 1.0;
      if (p.eta <= 0.0) w.w11 = 1.0;
    }
    if (e_lower == lowest) w.lower = 1.0;
    w.ground = lowest;
    return w;
  }
  const double x = t.x();
  w.w00 = std::exp(-x * (e00 - ground));
  w.w11 = std::exp(-x * (e11 - ground));
  w.upper = std::exp(-x * (e_upper - ground));
  w.lower = std::exp(-x * (e_lower - ground));
  return w;
}

void require_longitudinal(const DimerParams& p) {
  p.validate();
  if (p.theta != 0.0) {
    throw InvalidArgument("the X-state thermal model requires theta = 0");
  }
}

}  // namespace

void DimerParams::validate() const {
  if (!std::isfinite(delta)) throw InvalidArgument("delta must be finite");
  if (!std::isfinite(eta)) throw InvalidArgument("eta must be finite");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw InvalidArgument("theta must lie in [0, pi]");
  }
}

ThermalPoint ThermalPoint::from_x(double x) {
  if (!(x >= 0.0)) throw InvalidArgument("reduced inverse temperature x must be >= 0");
  return ThermalPoint(x);
}

ThermalPoint ThermalPoint::from_reduced_temperature(double t) {
  if (!(t >= 0.0)) throw InvalidArgument("reduced temperature must be >= 0");
  if (t == 0.0) return zero_temperature();
  return ThermalPoint(1.0 / t);
}

double ThermalPoint::reduced_temperature() const noexcept {
  if (is_zero_temperature()) return 0.0;
  return 1.0 / x_;
}

bool ThermalPoint::is_zero_temperature() const noexcept { return std::isinf(x_); }

void XState::validate(double tol) const {
  const bool finite = std::isfinite(a) && std::isfinite(b) && std::isfinite(d) && std::isfinite(v);
  const double trace_error = std::abs(a + d + 2.0 * b - 1.0);
  if (!finite || a < -tol || d < -tol || b + v < -tol || b - v < -tol || trace_error > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "invalid X state (a=" << a << ", b=" << b << ", d=" << d << ", v=" << v
        << ", |tr-1|=" << trace_error << ")";
    throw InvalidState(msg.str());
  }
}

Eigen::Matrix4d hamiltonian_matrix(const DimerParams& params) {
  params.validate();
  const double delta = params.delta;
  const double eta = params.eta;
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();

  if (params.theta == 0.0) {
    h(0, 0) = delta / 2.0 - eta;
    h(1, 1) = -delta / 2.0;
    h(2, 2) = -delta / 2.0;
    h(3, 3) = delta / 2.0 + eta;
    h(1, 2) = 1.0;
    h(2, 1) = 1.0;
    return h;
  }

  // H = 1/2 [s1.s2 + (Delta - 1)(n.s1)(n.s2)] - eta/2 (s1z + s2z) with
  // n = (sin theta, 0, cos theta); Delta = -2 is the dipolar tensor.
  const double k = delta - 1.0;
  const double s = std::sin(params.theta);
  const double c = std::cos(params.theta);
  const double diag = 0.5 * (1.0 + k * c * c);
  const double mixed = 0.5 * k * s * c;

  h(0, 0) = diag - eta;
  h(1, 1) = -diag;
  h(2, 2) = -diag;
  h(3, 3) = diag + eta;
  h(1, 2) = h(2, 1) = 0.5 * (2.0 + k * s * s);
  h(0, 3) = h(3, 0) = 0.5 * k * s * s;
  h(0, 1) = h(1, 0) = mixed;
  h(0, 2) = h(2, 0) = mixed;
  h(1, 3) = h(3, 1) = -mixed;
  h(2, 3) = h(3, 2) = -mixed;
  return h;
}

Spectrum spectrum(const DimerParams& params) {
  require_longitudinal(params);
  Spectrum sp;
  sp.e1 = -params.delta / 2.0 + 1.0;
  sp.e2 = -params.delta / 2.0 - 1.0;
  sp.e3 = params.delta / 2.0 + params.eta;
  sp.e4 = params.delta / 2.0 - params.eta;
  sp.ground = std::min({sp.e1, sp.e2, sp.e3, sp.e4});
  return sp;
}

double log_partition_function(const DimerParams& params, ThermalPoint t) {
  require_longitudinal(params);
  if (t.is_zero_temperature()) {
    throw InvalidArgument("partition function is undefined at T = 0; use gibbs_xstate");
  }
  const ShiftedWeights w = shifted_weights(params, t);
  return std::log(w.sum()) - t.x() * w.ground;
}

double partition_function(const DimerParams& params, ThermalPoint t) {
  return std::exp(log_partition_function(params, t));
}

XState gibbs_xstate(const DimerParams& params, ThermalPoint t) {
  require_longitudinal(params);
  const ShiftedWeights w = shifted_weights(params, t);
  const double z = w.sum();
  XState s;
  s.a = w.w00 / z;
  s.d = w.w11 / z;
  s.b = 0.5 * (w.upper + w.lower) / z;
  s.v = 0.5 * (w.upper - w.lower) / z;
  return s;
}

Correlators correlators(const DimerParams& params, ThermalPoint t) {
  require_longitudinal(params);
  const ShiftedWeights w = shifted_weights(params, t);
  const double z = w.sum();
  Correlators c;
  c.m = (w.w00 - w.w11) / z;
  c.g_par = (w.w00 + w.w11 - w.upper - w.lower) / z;
  c.g_perp = (w.upper - w.lower) / z;
  return c;
}

XState xstate_from_correlators(const Correlators& c) {
  XState s;
  s.a = 0.25 * (1.0 + 2.0 * c.m + c.g_par);
  s.b = 0.25 * (1.0 - c.g_par);
  s.v = 0.5 * c.g_perp;
  s.d = 0.25 * (1.0 - 2.0 * c.m + c.g_par);
  s.validate();
  return s;
}

Correlators correlators_of(const XState& s) noexcept {
  return {s.a - s.d, 1.0 - 4.0 * s.b, 2.0 * s.v};
}

}  // namespace dipolar
