#include "dipolar/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dipolar/errors.hpp"

namespace dipolar::oracle {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Matrix2c trace_out(const Matrix4c& m, Subsystem keep) {
  Matrix2c r = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        if (keep == Subsystem::A) {
          r(i, j) += m(2 * i + k, 2 * j + k);
        } else {
          r(i, j) += m(2 * k + i, 2 * k + j);
        }
      }
    }
  }
  return r;
}

double entropy_of(double lambda) {
  if (lambda <= 0.0) return 0.0;
  return -lambda * std::log2(lambda);
}

// Projector |psi><psi| with psi = (cos(polar/2), e^{i azimuth} sin(polar/2)).
Matrix2c bloch_projector(MeasurementDirection dir) {
  const cd up(std::cos(0.5 * dir.polar), 0.0);
  const cd down = std::polar(std::sin(0.5 * dir.polar), dir.azimuth);
  Matrix2c p;
  p << up * std::conj(up), up * std::conj(down), down * std::conj(up), down * std::conj(down);
  return p;
}

Matrix4c identity_kron(const Matrix2c& b) {
  Matrix4c out = Matrix4c::Zero();
  out.block<2, 2>(0, 0) = b;
  out.block<2, 2>(2, 2) = b;
  return out;
}

ConditionalOutcome project(const Matrix4c& rho, const Matrix2c& projector) {
  const Matrix4c lift = identity_kron(projector);
  const Matrix4c post = lift * rho * lift;
  ConditionalOutcome out;
  out.probability = post.trace().real();
  if (out.probability >= kMinOutcomeProbability) {
    out.state = trace_out(post, Subsystem::A) / out.probability;
  }
  return out;
}

}  // namespace

DensityMatrix4::DensityMatrix4(const Matrix4c& m) : m_(m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  const cd tr = m.trace();
  if (!m.allFinite() || herm > kHermiticityTolerance) {
    throw InvalidState("density matrix is not Hermitian");
  }
  if (std::abs(tr - cd(1.0, 0.0)) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace " << tr.real() << " differs from 1";
    throw InvalidState(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c> eig(m, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kEigenvalueTolerance) {
    throw InvalidState("density matrix has a negative eigenvalue");
  }
}

DensityMatrix4 DensityMatrix4::from_xstate(const XState& s) {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = s.a;
  m(1, 1) = s.b;
  m(2, 2) = s.b;
  m(3, 3) = s.d;
  m(1, 2) = s.v;
  m(2, 1) = s.v;
  return DensityMatrix4(m);
}

DensityMatrix4 DensityMatrix4::maximally_mixed() {
  return DensityMatrix4(Matrix4c::Identity() * 0.25);
}

bool DensityMatrix4::is_x_form(double tol) const {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(m_(i, j)) > tol) return false;
    }
  }
  return true;
}

MeasurementDirection MeasurementDirection::normalized(double polar, double azimuth) {
  if (!std::isfinite(polar) || !std::isfinite(azimuth)) {
    throw InvalidArgument("measurement angles must be finite");
  }
  polar = std::fmod(polar, 2.0 * kPi);
  if (polar < 0.0) polar += 2.0 * kPi;
  if (polar > kPi) {
    // (2 pi - polar, azimuth + pi) is the same Bloch direction.
    polar = 2.0 * kPi - polar;
    azimuth += kPi;
  }
  azimuth = std::fmod(azimuth, 2.0 * kPi);
  if (azimuth < 0.0) azimuth += 2.0 * kPi;
  if (azimuth >= 2.0 * kPi) azimuth = 0.0;
  return {polar, azimuth};
}

DensityMatrix4 gibbs_general(const DimerParams& params, ThermalPoint t) {
  if (t.is_zero_temperature()) {
    throw InvalidArgument("gibbs_general requires a finite inverse temperature");
  }
  const Eigen::Matrix4d h = hamiltonian_matrix(params);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(h);
  const Eigen::Vector4d energies = eig.eigenvalues();
  const double ground = energies.minCoeff();
  Eigen::Vector4d weights;
  for (int i = 0; i < 4; ++i) weights(i) = std::exp(-t.x() * (energies(i) - ground));
  weights /= weights.sum();
  const Eigen::Matrix4d& vecs = eig.eigenvectors();
  Eigen::Matrix4d rho = vecs * weights.asDiagonal() * vecs.transpose();
  rho = 0.5 * (rho + rho.transpose()).eval();
  return DensityMatrix4(rho.cast<cd>());
}

Matrix2c partial_trace(const DensityMatrix4& rho, Subsystem keep) {
  return trace_out(rho.matrix(), keep);
}

double von_neumann_entropy(const Matrix2c& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix2c> eig(rho, Eigen::EigenvaluesOnly);
  return entropy_of(eig.eigenvalues()(0)) + entropy_of(eig.eigenvalues()(1));
}

double von_neumann_entropy(const Matrix4c& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> eig(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += entropy_of(eig.eigenvalues()(i));
  return s;
}

double mutual_information_numeric(const DensityMatrix4& rho) {
  const double i = von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
                   von_neumann_entropy(partial_trace(rho, Subsystem::B)) -
                   von_neumann_entropy(rho.matrix());
  return std::max(0.0, i);
}

ConditionedStates conditioned_state(const DensityMatrix4& rho, MeasurementDirection direction) {
  const Matrix2c plus = bloch_projector(direction);
  const Matrix2c minus = Matrix2c::Identity() - plus;
  return {project(rho.matrix(), plus), project(rho.matrix(), minus)};
}

double conditional_entropy(const DensityMatrix4& rho, MeasurementDirection direction) {
  const ConditionedStates cs = conditioned_state(rho, direction);
  double s = 0.0;
  for (const ConditionalOutcome* o : {&cs.plus, &cs.minus}) {
    if (o->state) s += o->probability * von_neumann_entropy(*o->state);
  }
  return s;
}

MeasurementOptimum optimize_classical_correlation(const DensityMatrix4& rho,
                                                  const OracleOptions& options) {
  if (options.grid_n < 16) throw InvalidArgument("grid_n must be at least 16");
  if (options.refine_iters < 0) throw InvalidArgument("refine_iters must be non-negative");

  const int n = options.grid_n;
  const double polar_step = kPi / (n - 1);
  const double azimuth_step = 2.0 * kPi / n;

  MeasurementDirection best{0.0, 0.0};
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const MeasurementDirection dir{i * polar_step, j * azimuth_step};
      const double value = conditional_entropy(rho, dir);
      if (value < best_value) {
        best_value = value;
        best = dir;
      }
    }
  }

  // Compass search: move to the best improving neighbour, otherwise halve
  // the step. refine_iters bounds the number of halvings.
  double dp = polar_step;
  double da = azimuth_step;
  int halvings = 0;
  const int max_moves = 64 * (options.refine_iters + 1);
  for (int moves = 0; halvings < options.refine_iters && moves < max_moves; ++moves) {
    MeasurementDirection candidate = best;
    double candidate_value = best_value;
    for (int sp = -1; sp <= 1; ++sp) {
      for (int sa = -1; sa <= 1; ++sa) {
        if (sp == 0 && sa == 0) continue;
        const MeasurementDirection dir =
            MeasurementDirection::normalized(best.polar + sp * dp, best.azimuth + sa * da);
        const double value = conditional_entropy(rho, dir);
        if (value < candidate_value) {
          candidate_value = value;
          candidate = dir;
        }
      }
    }
    if (candidate_value < best_value) {
      best = candidate;
      best_value = candidate_value;
    } else {
      dp *= 0.5;
      da *= 0.5;
      ++halvings;
    }
  }

  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  return {std::max(0.0, s_a - best_value), best};
}

double classical_correlation_numeric(const DensityMatrix4& rho, int grid_n, int refine_iters) {
  return optimize_classical_correlation(rho, {grid_n, refine_iters}).value;
}

double discord_numeric(const DensityMatrix4& rho, int grid_n, int refine_iters) {
  const double i = mutual_information_numeric(rho);
  const double c = classical_correlation_numeric(rho, grid_n, refine_iters);
  return std::max(0.0, i - c);
}

double concurrence_general(const DensityMatrix4& rho) {
  const Matrix4c& m = rho.matrix();
  Matrix4c yy = Matrix4c::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix4c flipped = yy * m.conjugate() * yy;

  // sqrt(rho) flipped sqrt(rho) is Hermitian and shares its spectrum with
  // rho * flipped.
  Eigen::SelfAdjointEigenSolver<Matrix4c> eig(m);
  Eigen::Vector4d root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4c sqrt_rho = eig.eigenvectors() * root.cast<cd>().asDiagonal() *
                            eig.eigenvectors().adjoint();
  Matrix4c r = sqrt_rho * flipped * sqrt_rho;
  r = 0.5 * (r + r.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix4c> reig(r, Eigen::EigenvaluesOnly);

  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(0.0, reig.eigenvalues()(i)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace dipolar::oracle
