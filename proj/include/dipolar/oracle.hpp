#pragma once

// Brute-force reference machinery for two-qubit states. Nothing in here uses
// the X-state closed forms: states are general complex 4x4 matrices, local
// measurements are projector pairs along a Bloch direction, and the
// classical correlation is maximized numerically over that direction.

#include <optional>
#include <utility>

#include <Eigen/Core>

#include "dipolar/core_model.hpp"

namespace dipolar::oracle {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

enum class Subsystem { A, B };

/// Validated two-qubit density matrix in the basis |00>, |01>, |10>, |11>
/// (first label is subsystem A).
class DensityMatrix4 {
 public:
  static constexpr double kHermiticityTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kEigenvalueTolerance = 1e-10;

  /// Throws InvalidState if the matrix is not Hermitian, unit-trace and PSD.
  explicit DensityMatrix4(const Matrix4c& m);

  static DensityMatrix4 from_xstate(const XState& s);
  static DensityMatrix4 maximally_mixed();

  const Matrix4c& matrix() const noexcept { return m_; }
  std::complex<double> operator()(int i, int j) const { return m_(i, j); }

  /// True when every entry outside the diagonal and anti-diagonal is below tol.
  bool is_x_form(double tol = 1e-12) const;

 private:
  Matrix4c m_;
};

struct MeasurementDirection {
  double polar = 0.0;    ///< [0, pi]
  double azimuth = 0.0;  ///< [0, 2 pi)

  /// Wraps the angles into range; throws InvalidArgument for non-finite input.
  static MeasurementDirection normalized(double polar, double azimuth);
};

struct ConditionalOutcome {
  double probability = 0.0;
  std::optional<Matrix2c> state;  ///< absent when probability < kMinOutcomeProbability
};

inline constexpr double kMinOutcomeProbability = 1e-14;

struct ConditionedStates {
  ConditionalOutcome plus;   ///< projector onto the direction
  ConditionalOutcome minus;  ///< projector onto its antipode
};

struct OracleOptions {
  int grid_n = 64;
  int refine_iters = 40;
};

struct MeasurementOptimum {
  double value = 0.0;  ///< bits
  MeasurementDirection direction;
};

/// Thermal state exp(-x H)/Z of the general-theta Hamiltonian via spectral
/// decomposition. Requires finite x.
DensityMatrix4 gibbs_general(const DimerParams& params, ThermalPoint t);

Matrix2c partial_trace(const DensityMatrix4& rho, Subsystem keep);

/// von Neumann entropy in bits from eigenvalues.
double von_neumann_entropy(const Matrix2c& rho);
double von_neumann_entropy(const Matrix4c& rho);

/// S(rho_A) + S(rho_B) - S(rho).
double mutual_information_numeric(const DensityMatrix4& rho);

/// Post-measurement states of A after a projective measurement on B.
ConditionedStates conditioned_state(const DensityMatrix4& rho, MeasurementDirection direction);

/// sum_i p_i S(rho_A^i) for one measurement direction.
double conditional_entropy(const DensityMatrix4& rho, MeasurementDirection direction);

/// Maximum over measurement directions of S(rho_A) - sum_i p_i S(rho_A^i).
MeasurementOptimum optimize_classical_correlation(const DensityMatrix4& rho,
                                                  const OracleOptions& options = {});

double classical_correlation_numeric(const DensityMatrix4& rho, int grid_n = 64,
                                     int refine_iters = 40);

double discord_numeric(const DensityMatrix4& rho, int grid_n = 64, int refine_iters = 40);

/// Hill-Wootters concurrence via the spin-flipped state.
double concurrence_general(const DensityMatrix4& rho);

}  // namespace dipolar::oracle
