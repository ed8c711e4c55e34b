#pragma once

// Information-theoretic correlations of the dimer X state. All entropies are
// in bits. Terms of the form p log p with p = 0 contribute zero; arguments
// that are negative by no more than kLogClampTolerance are treated as zero.

#include <optional>

#include "dipolar/core_model.hpp"

namespace dipolar {

inline constexpr double kLogClampTolerance = 1e-12;
inline constexpr double kConcurrenceResolution = 1e-15;

/// -p log2 p, with 0 log 0 = 0. Throws DomainError for p < -kLogClampTolerance.
double entropy_term(double p);

/// Binary entropy h2(p) in bits.
double binary_entropy(double p);

struct DiscordBranches {
  double q1 = 0.0;  ///< sigma^z measurement on B
  double q2 = 0.0;  ///< sigma^x measurement on B

  double min() const noexcept { return q2 < q1 ? q2 : q1; }
  /// 1 or 2; ties report 1.
  int active() const noexcept { return q2 < q1 ? 2 : 1; }
};

struct CorrelationSet {
  double s_a = 0.0;
  double s_ab = 0.0;
  double mutual = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double discord = 0.0;
  double classical = 0.0;
  double concurrence = 0.0;
  double entanglement = 0.0;
  std::optional<double> geometric;  ///< only at eta = 0
};

double entropy_sub(const XState& s);
double entropy_joint(const XState& s);
double mutual_information(const XState& s);

DiscordBranches discord_branches(const XState& s);
double discord(const XState& s);
double classical_correlation(const XState& s);

/// Zero-field classical correlation from G|| alone.
double zero_field_classical(double g_par);

/// Zero-field discord from (G||, G_perp). Valid while G|| >= |G_perp|.
double zero_field_discord(double g_par, double g_perp);

/// Closed-form zero-field thermal discord Q(x) for anisotropy delta.
/// Returns 0 at x = 0 and x = inf.
double discord_thermal_zero_field(double delta, double x);

/// 2 max(|v| - sqrt(a d), 0).
double concurrence(const XState& s);

/// Entanglement of formation from the concurrence.
double entanglement(double concurrence);

/// Q_g = G_perp^2.
double geometric_discord_zero_field(double g_perp);

/// Same, but rejects a nonzero field with UndefinedAtField.
double geometric_discord_zero_field(double g_perp, double eta);

/// Every correlation at one thermal point (theta = 0).
CorrelationSet correlation_set(const DimerParams& params, ThermalPoint t);

/// Every correlation of a given X state. `eta` only decides whether the
/// geometric discord is reported.
CorrelationSet correlation_set(const XState& s, double eta);

}  // namespace dipolar
