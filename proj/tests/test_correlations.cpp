#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "dipolar/core_model.hpp"
#include "dipolar/correlations.hpp"
#include "dipolar/errors.hpp"
#include "reference.hpp"

using namespace dipolar;

namespace {

DimerParams params(double delta, double eta) {
  DimerParams p;
  p.delta = delta;
  p.eta = eta;
  return p;
}

XState state(double delta, double eta, double x) {
  return gibbs_xstate(params(delta, eta), ThermalPoint::from_x(x));
}

}  // namespace

TEST_CASE("entropy helpers") {
  CHECK(entropy_term(0.0) == 0.0);
  CHECK(entropy_term(1.0) == 0.0);
  CHECK(entropy_term(0.5) == doctest::Approx(0.5));
  CHECK(entropy_term(-1e-13) == 0.0);
  CHECK_THROWS_AS(entropy_term(-1e-9), DomainError);
  CHECK_THROWS_AS(entropy_term(std::nan("")), DomainError);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(0.11) == doctest::Approx(0.499915958164528).epsilon(1e-13));
}

TEST_CASE("frozen values at x = 1, eta = 0") {
  const XState s = state(-2.0, 0.0, 1.0);
  CHECK(entropy_sub(s) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(entropy_joint(s) == doctest::Approx(1.582268458818332).epsilon(1e-13));
  CHECK(mutual_information(s) == doctest::Approx(0.41773154118166803).epsilon(1e-13));
  const DiscordBranches br = discord_branches(s);
  CHECK(br.q1 == doctest::Approx(0.081702322253291792).epsilon(1e-12));
  CHECK(br.q2 == doctest::Approx(0.4052082585684956).epsilon(1e-12));
  CHECK(br.active() == 1);
  CHECK(discord(s) == doctest::Approx(0.081702322253291792).epsilon(1e-12));
  CHECK(classical_correlation(s) == doctest::Approx(0.33602921892837624).epsilon(1e-12));
  CHECK(concurrence(s) == 0.0);

  const CorrelationSet cs = correlation_set(params(-2.0, 0.0), ThermalPoint::from_x(1.0));
  REQUIRE(cs.geometric.has_value());
  CHECK(*cs.geometric == doctest::Approx(0.017310663827212871).epsilon(1e-12));
  CHECK(cs.entanglement == 0.0);
}

TEST_CASE("frozen values in a field") {
  const XState s1 = state(-2.0, 0.1, 1.0);
  CHECK(mutual_information(s1) == doctest::Approx(0.41511381072829426).epsilon(1e-12));
  CHECK(discord(s1) == doctest::Approx(0.081365496131921101).epsilon(1e-12));
  CHECK(classical_correlation(s1) == doctest::Approx(0.33374831459637316).epsilon(1e-12));

  const XState s2 = state(-2.0, 0.5, 2.0);
  CHECK(s2.a == doctest::Approx(0.84314598322338688).epsilon(1e-13));
  CHECK(mutual_information(s2) == doctest::Approx(0.37972154693311568).epsilon(1e-12));
  CHECK(discord(s2) == doctest::Approx(0.037190442142607194).epsilon(1e-12));
  CHECK(classical_correlation(s2) == doctest::Approx(0.34253110479050848).epsilon(1e-12));

  const CorrelationSet cs = correlation_set(params(-2.0, 0.1), ThermalPoint::from_x(1.0));
  CHECK_FALSE(cs.geometric.has_value());
}

TEST_CASE("three zero-field discord paths agree") {
  for (double delta : {-3.0, -2.0, -1.5}) {
    for (double x : {1e-3, 0.02, 0.3, 1.0, 1.1346907466313114, 3.0, 10.0, 40.0}) {
      CAPTURE(delta);
      CAPTURE(x);
      const XState s = state(delta, 0.0, x);
      const Correlators c = correlators_of(s);
      const double branch = discord(s);
      const double from_g = zero_field_discord(c.g_par, c.g_perp);
      const double thermal = discord_thermal_zero_field(delta, x);
      const double scale = std::max(branch, 1e-300);
      CHECK(std::abs(branch - from_g) <= 1e-12 * std::max(1.0, scale) + 1e-9 * scale);
      CHECK(std::abs(branch - thermal) <= 1e-12 * std::max(1.0, scale) + 1e-9 * scale);
      CHECK(zero_field_classical(c.g_par) == doctest::Approx(classical_correlation(s)).epsilon(1e-10));
    }
  }
}

TEST_CASE("closed-form thermal discord at its extremes") {
  CHECK(discord_thermal_zero_field(-2.0, 0.0) == 0.0);
  CHECK(discord_thermal_zero_field(-2.0, std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(discord_thermal_zero_field(-2.0, -1.0), InvalidArgument);
  for (double x : {300.0, 700.0, 5000.0}) {
    const double q = discord_thermal_zero_field(-2.0, x);
    CHECK(std::isfinite(q));
    CHECK(q >= 0.0);
  }
  CHECK(discord_thermal_zero_field(-2.0, 1.0) == doctest::Approx(0.081702322253291792).epsilon(1e-12));
}

TEST_CASE("zero-field formulas reject impossible correlators") {
  CHECK_THROWS_AS(zero_field_classical(1.5), DomainError);
  CHECK_THROWS_AS(zero_field_discord(0.5, -0.9), DomainError);
  CHECK(zero_field_classical(1.0) == doctest::Approx(1.0));
  CHECK(zero_field_classical(0.0) == 0.0);
  CHECK(zero_field_discord(0.0, 0.0) == 0.0);
}

TEST_CASE("concurrence and entanglement of formation") {
  CHECK(entanglement(0.0) == 0.0);
  CHECK(entanglement(1.0) == doctest::Approx(1.0));
  CHECK(entanglement(0.5) == doctest::Approx(0.35457890266526988).epsilon(1e-12));
  CHECK_THROWS_AS(entanglement(1.1), DomainError);
  CHECK_THROWS_AS(entanglement(-0.1), DomainError);

  // Bell-like X state: a = d = 0, b = |v| = 1/2.
  XState bell{0.0, 0.5, 0.0, 0.5};
  CHECK(concurrence(bell) == 1.0);
  // Werner-like mixture below threshold.
  XState weak{0.2, 0.3, 0.2, 0.15};
  CHECK(concurrence(weak) == 0.0);
  XState strong{0.1, 0.4, 0.1, 0.35};
  CHECK(concurrence(strong) == doctest::Approx(0.5));

  // Antiferromagnetic anisotropy is entangled at low temperature.
  const XState af = state(2.0, 0.0, 5.0);
  CHECK(concurrence(af) > 0.9);
}

TEST_CASE("geometric discord") {
  CHECK(geometric_discord_zero_field(-0.5) == 0.25);
  CHECK(geometric_discord_zero_field(-0.5, 0.0) == 0.25);
  CHECK_THROWS_AS(geometric_discord_zero_field(-0.5, 0.1), UndefinedAtField);
  CHECK_THROWS_AS(geometric_discord_zero_field(-0.5, -1e-12), UndefinedAtField);
}

TEST_CASE("entropies match dense eigenvalue evaluation") {
  for (double x : {0.1, 1.0, 4.0}) {
    for (double eta : {0.0, 0.3, -2.0}) {
      const XState s = state(-2.0, eta, x);
      const reference::M4 rho = reference::thermal_state(-2.0, eta, 0.0, x);
      CHECK(entropy_joint(s) == doctest::Approx(reference::entropy_bits(rho)).epsilon(1e-9));
      CHECK(entropy_sub(s) == doctest::Approx(reference::entropy_bits(reference::reduce_to_a(rho))).epsilon(1e-9));
    }
  }
}

TEST_CASE("zero temperature limits") {
  const CorrelationSet zero = correlation_set(params(-2.0, 0.0), ThermalPoint::zero_temperature());
  CHECK(zero.classical == doctest::Approx(1.0));
  CHECK(zero.mutual == doctest::Approx(1.0));
  CHECK(zero.discord == 0.0);
  const CorrelationSet field = correlation_set(params(-2.0, 0.4), ThermalPoint::zero_temperature());
  CHECK(field.classical == 0.0);
  CHECK(field.mutual == 0.0);
  CHECK(field.discord == 0.0);
}

TEST_CASE("correlation set is self-consistent") {
  for (double x : {0.01, 0.5, 1.0, 3.0, 30.0, 200.0}) {
    for (double eta : {-3.0, -0.2, 0.0, 0.2, 3.0}) {
      const CorrelationSet cs = correlation_set(params(-2.0, eta), ThermalPoint::from_x(x));
      CHECK(std::abs(cs.mutual - cs.classical - cs.discord) <= 1e-12);
      CHECK(cs.discord == doctest::Approx(std::min(cs.q1, cs.q2)));
      CHECK(cs.discord <= cs.s_a + 1e-12);
      CHECK(cs.geometric.has_value() == (eta == 0.0));
    }
  }
}
