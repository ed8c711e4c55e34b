#pragma once

// Thermal dipolar spin-1/2 dimer: Hamiltonian, spectrum, Gibbs X state and
// statistical correlators. Energies are measured in units of the dipolar
// coupling constant D, fields as eta = h/D and temperatures as x = D/(k_B T).

#include <array>
#include <limits>

#include <Eigen/Core>

namespace dipolar {

inline constexpr double kDipolarAnisotropy = -2.0;
inline constexpr double kStateTolerance = 1e-12;

struct DimerParams {
  double delta = kDipolarAnisotropy;  ///< zz anisotropy
  double eta = 0.0;                   ///< reduced field h/D
  double theta = 0.0;                 ///< polar angle between dimer axis and field

  /// Throws InvalidArgument unless delta, eta are finite and theta is in [0, pi].
  void validate() const;
};

/// Reduced inverse temperature x = D/(k_B T). x = +inf is T = 0.
class ThermalPoint {
 public:
  /// Throws InvalidArgument for negative or NaN x.
  static ThermalPoint from_x(double x);
  /// From the reduced temperature t = k_B T/D; t = 0 maps to T = 0.
  static ThermalPoint from_reduced_temperature(double t);
  static ThermalPoint zero_temperature() { return ThermalPoint(std::numeric_limits<double>::infinity()); }

  double x() const noexcept { return x_; }
  double reduced_temperature() const noexcept;
  bool is_zero_temperature() const noexcept;

 private:
  explicit ThermalPoint(double x) : x_(x) {}
  double x_;
};

/// Independent elements of the thermal density matrix
///
///     | a          |
///     |    b  v    |
///     |    v  b    |
///     |          d |
///
/// in the basis |00>, |01>, |10>, |11>.
struct XState {
  double a = 0.25;
  double b = 0.25;
  double d = 0.25;
  double v = 0.0;

  /// Eigenvalues a, d, b + v, b - v.
  std::array<double, 4> eigenvalues() const noexcept { return {a, d, b + v, b - v}; }

  /// Throws InvalidState if normalization or positivity fails beyond tol.
  void validate(double tol = kStateTolerance) const;
};

struct Correlators {
  double m = 0.0;       ///< <sigma_1^z>
  double g_par = 0.0;   ///< <sigma_1^z sigma_2^z>
  double g_perp = 0.0;  ///< <sigma_1^x sigma_2^x>
};

struct Spectrum {
  double e1 = 0.0;  ///< -Delta/2 + 1, upper level of the |01>,|10> block
  double e2 = 0.0;  ///< -Delta/2 - 1, lower level of the |01>,|10> block
  double e3 = 0.0;  ///< Delta/2 + eta, the |11> level
  double e4 = 0.0;  ///< Delta/2 - eta, the |00> level
  double ground = 0.0;

  std::array<double, 4> levels() const noexcept { return {e1, e2, e3, e4}; }
};

/// Hamiltonian in units of D. Real symmetric for every theta because the
/// dimer axis lies in the xz plane.
Eigen::Matrix4d hamiltonian_matrix(const DimerParams& params);

/// Longitudinal spectrum (theta = 0). `ground` is the minimum level.
Spectrum spectrum(const DimerParams& params);

/// Z = 2(cosh x + e^{-x Delta} cosh(x eta)) e^{x Delta/2}. Overflows to +inf
/// only when Z itself leaves the double range; see log_partition_function.
double partition_function(const DimerParams& params, ThermalPoint t);
double log_partition_function(const DimerParams& params, ThermalPoint t);

/// Gibbs state for theta = 0. T = 0 is evaluated exactly: equal weights on
/// the degenerate ground manifold.
XState gibbs_xstate(const DimerParams& params, ThermalPoint t);

Correlators correlators(const DimerParams& params, ThermalPoint t);

/// Inverse map a = (1 + 2m + G||)/4, b = (1 - G||)/4, v = G_perp/2,
/// d = (1 - 2m + G||)/4. Throws InvalidState for an unphysical result.
XState xstate_from_correlators(const Correlators& c);

/// m, G||, G_perp read off an X state.
Correlators correlators_of(const XState& s) noexcept;

}  // namespace dipolar
