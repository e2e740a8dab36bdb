#include <doctest.h>

#include <cmath>

#include "fite/lcu_engine.hpp"
#include "fite/fpaa_engine.hpp"
#include "fite/planner.hpp"
#include "test_support.hpp"

using namespace fite;
using fite::testing::TestRng;

TEST_CASE("identity envelope on the bundled instances") {
  for (double beta : {0.0, 0.4, 1.2, 2.0}) {
    CHECK(envelope(3.0 / 16.0, 5.0, -3.0, beta) ==
          doctest::Approx(3.0 / 16.0 * std::exp(-4.0 * beta)).epsilon(1e-14));
    CHECK(envelope(1.0 / 32.0, 11.4, -6.6, beta) ==
          doctest::Approx(1.0 / 32.0 * std::exp(-9.6 * beta)).epsilon(1e-14));
  }
  CHECK(envelope(0.25, 3.0, -1.0, 0.0) == doctest::Approx(0.25));
}

TEST_CASE("gap bound behavior") {
  CHECK(gap_bound_f(0.0, 2.0, 1.0) == 0.0);
  CHECK(gap_bound_f(0.4, 2.0, 0.0) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(gap_bound_f(3.0 / 16.0, 2.0, 0.92) >= 0.9);
  // Conservative against the true fidelity, pointwise on a beta grid.
  TestRng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(2, 8);
    PauliHamiltonian h = testing::random_hamiltonian(rng, n, 10);
    Spectrum spec = compute_spectrum(h);
    if (spec.delta == 0.0) continue;
    QuantumState psi0 = testing::random_product_state(rng, n);
    const double gamma0 = ground_overlap(psi0, spec);
    for (double beta = 0.0; beta <= 3.0 + 1e-9; beta += 0.2) {
      const double bound = gap_bound_f(gamma0, spec.delta, beta);
      const double truth = analytic_outcome(h, spec, psi0, beta).f_ground;
      CHECK(truth >= bound - 1e-11);
    }
  }
}

TEST_CASE("beta threshold on the MaxCut constants") {
  const double gamma0 = 3.0 / 16.0;
  const BetaStar half = beta_star(gamma0, 2.0, 0.5);
  const BetaStar nine = beta_star(gamma0, 2.0, 0.9);
  const BetaStar high = beta_star(gamma0, 2.0, 0.98);
  CHECK(half.reachable);
  CHECK(half.value == doctest::Approx(0.37).epsilon(0.03));
  CHECK(nine.value == doctest::Approx(0.92).epsilon(0.011));
  CHECK(high.value == doctest::Approx(1.34).epsilon(0.008));
  // Closed form written out: (1/4) ln(13 F / (3 (1 - F))).
  CHECK(nine.value == doctest::Approx(0.25 * std::log(13.0 * 0.9 / (3.0 * 0.1))).epsilon(1e-14));
}

TEST_CASE("beta threshold edge cases") {
  CHECK(beta_star(0.5, 1.0, 0.4).value == 0.0);  // target below the overlap
  CHECK(beta_star(1.0, 1.0, 0.99).value == 0.0);
  CHECK_FALSE(beta_star(0.0, 1.0, 0.9).reachable);
  CHECK_THROWS_AS(beta_star(0.5, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(beta_star(0.5, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(beta_star(0.5, 0.0, 0.9), ValidationError);
  // Cubic-instance value under the uniform start: (1/2.4) ln(279).
  CHECK(beta_star(1.0 / 32.0, 1.2, 0.9).value ==
        doctest::Approx(std::log(279.0) / 2.4).epsilon(1e-14));
  CHECK(beta_star(1.0 / 32.0, 1.2, 0.9).value == doctest::Approx(2.3463).epsilon(1e-4));
}

TEST_CASE("beta threshold monotonicity") {
  TestRng rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const double gamma0 = rng.uniform(0.01, 0.95);
    const double gap = rng.uniform(0.1, 4.0);
    const double target = rng.uniform(gamma0 + 0.01, 0.99);
    const double value = beta_star(gamma0, gap, target).value;
    CHECK(beta_star(gamma0, gap, std::min(0.999, target + 0.005)).value >= value - 1e-12);
    CHECK(beta_star(std::min(1.0, gamma0 + 0.01), gap, target).value <= value + 1e-12);
    CHECK(beta_star(gamma0, gap + 0.1, target).value <= value + 1e-12);
  }
}

TEST_CASE("threshold sufficiency and sandwich against the spectral oracle") {
  TestRng rng(71);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.uniform_int(2, 8);
    PauliHamiltonian h = testing::random_hamiltonian(rng, n, 10);
    Spectrum spec = compute_spectrum(h);
    if (spec.delta == 0.0) continue;
    QuantumState psi0 = testing::random_product_state(rng, n);
    const double gamma0 = ground_overlap(psi0, spec);
    if (gamma0 >= 1.0 - 1e-9) continue;
    const double target = rng.uniform(0.2, 0.98);
    const BetaStar threshold = beta_star(gamma0, spec.delta, target);
    REQUIRE(threshold.reachable);
    const LcuOutcome at_threshold = analytic_outcome(h, spec, psi0, threshold.value);
    CHECK(at_threshold.f_ground >= target - 1e-10);
    const PSandwich sandwich =
        p_sandwich(gamma0, h.l1_norm(), spec.e0, threshold.value, target);
    CHECK(at_threshold.p_success >= sandwich.lower - 1e-12);
    if (at_threshold.f_ground >= target) {
      CHECK(at_threshold.p_success <= sandwich.upper + 1e-12);
    }
    CHECK(sandwich.upper == doctest::Approx(sandwich.lower / target).epsilon(1e-13));
    ++checked;
  }
  CHECK(checked >= 80);
}

TEST_CASE("success probability sits inside the sandwich on the bundled instances") {
  for (bool hubo : {false, true}) {
    PauliHamiltonian h = hubo ? testing::hubo8() : testing::maxcut5();
    Spectrum spec = compute_spectrum(h);
    QuantumState psi0 = uniform_state(h.num_qubits());
    const double gamma0 = ground_overlap(psi0, spec);
    for (double target : {0.5, 0.9, 0.98}) {
      const BetaStar threshold = beta_star(gamma0, spec.delta, target);
      const PSandwich sandwich =
          p_sandwich(gamma0, h.l1_norm(), spec.e0, threshold.value, target);
      const double p = analytic_outcome(h, spec, psi0, threshold.value).p_success;
      CHECK(p >= sandwich.lower * (1.0 - 1e-12));
      CHECK(p <= sandwich.upper * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("query planning inverts the response exactly") {
  const double delta = 0.1;
  // Already above the single-pass target.
  CHECK(plan_queries(1.0 - delta * delta, delta).exact_depth == 1);
  CHECK(plan_queries(1.0, delta).exact_depth == 1);

  TestRng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const double lambda = std::pow(10.0, rng.uniform(-6.0, -0.1));
    const QueryPlan plan = plan_queries(lambda, delta);
    CHECK(plan.exact_depth % 2 == 1);
    CHECK(analytic_pl(lambda, static_cast<int>(plan.exact_depth), delta) >=
          1.0 - delta * delta);
    if (plan.exact_depth >= 3) {
      CHECK(analytic_pl(lambda, static_cast<int>(plan.exact_depth) - 2, delta) <
            1.0 - delta * delta);
    }
    // Doubling the bound never deepens the plan.
    CHECK(plan_queries(std::min(1.0, 2.0 * lambda), delta).exact_depth <= plan.exact_depth);
  }
  CHECK_THROWS_AS(plan_queries(0.0, delta), ValidationError);
}

TEST_CASE("state-error threshold") {
  // Cutoff where beta = 0 already meets the target.
  const double gamma0 = 3.0 / 16.0;
  const double cutoff = std::sqrt(2.0 - 2.0 * std::sqrt(gamma0));
  CHECK(state_error_beta(gamma0, 2.0, cutoff + 1e-6) == 0.0);
  CHECK(state_error_beta(gamma0, 2.0, 1.5) == 0.0);
  CHECK(state_error_beta(1.0, 2.0, 0.3) == 0.0);
  CHECK(state_error_beta(gamma0, 2.0, cutoff - 1e-3) > 0.0);

  // MaxCut, eps = 0.1: frozen from the closed form, then verified against
  // the directly computed distance to the projected initial state.
  const double beta_eps = state_error_beta(gamma0, 2.0, 0.1);
  CHECK(beta_eps == doctest::Approx(1.5160).epsilon(1e-3));

  PauliHamiltonian h = testing::maxcut5();
  Spectrum spec = compute_spectrum(h);
  QuantumState psi0 = uniform_state(5);
  const LcuOutcome outcome = analytic_outcome(h, spec, psi0, beta_eps);
  double distance_sq = 0.0;
  for (Bits x = 0; x < 32; ++x) {
    const Amplitude projected =
        spec.is_ground(x) ? psi0.amplitude(x) / std::sqrt(gamma0) : Amplitude{0.0, 0.0};
    distance_sq += std::norm(outcome.post_state.amplitude(x) - projected);
  }
  CHECK(std::sqrt(distance_sq) <= 0.1 + 1e-12);
}

TEST_CASE("gate-cost estimate") {
  const CostReport idle = cnot_estimate(5, 5, {2, 2, 2, 2, 2}, 0);
  CHECK(idle.lcu_pass == 10);
  CHECK(idle.total == 10);  // a single pass, no amplification
  CHECK(idle.qubits_total == 11);

  const CostReport plan = cnot_estimate(5, 5, {2, 2, 2, 2, 2}, 9);
  CHECK(plan.oracle == 25);
  CHECK(plan.reflection == 102);
  CHECK(plan.total == 9 * (10 + 25 + 100) + 10);
  CHECK(plan.qubits_total == 11);
}

TEST_CASE("full plan assembly") {
  PauliHamiltonian h = testing::maxcut5();
  Spectrum spec = compute_spectrum(h);
  PlanInputs inputs;
  inputs.gamma0 = 3.0 / 16.0;
  inputs.delta_gap = spec.delta;
  inputs.w_norm = h.l1_norm();
  inputs.e0 = spec.e0;
  inputs.target_f = 0.9;
  inputs.fpaa_delta = 0.1;
  inputs.state_eps = 0.1;
  const Plan plan = make_plan(inputs, h.num_qubits(), h.localities());
  CHECK(plan.threshold.reachable);
  CHECK(plan.threshold.value == doctest::Approx(0.92).epsilon(0.011));
  CHECK(plan.lambda_star == doctest::Approx(plan.sandwich.lower).epsilon(1e-14));
  CHECK(plan.sandwich.lower ==
        doctest::Approx(3.0 / 16.0 * std::exp(-4.0 * plan.threshold.value)).epsilon(1e-12));
  CHECK(plan.queries.exact_depth % 2 == 1);
  CHECK(plan.cost.qubits_total == 11);
  CHECK(plan.error_beta.has_value());

  PlanInputs dead = inputs;
  dead.gamma0 = 0.0;
  CHECK_FALSE(make_plan(dead, h.num_qubits(), h.localities()).threshold.reachable);
}
