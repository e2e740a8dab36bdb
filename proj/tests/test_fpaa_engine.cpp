#include <doctest.h>

#include <cmath>

#include "fite/fpaa_engine.hpp"
#include "test_support.hpp"

using namespace fite;

namespace {

// Independent Chebyshev oracle: three-term recurrence, valid for all real x.
double cheb_recurrence(int order, double x) {
  double prev = 1.0;
  double cur = x;
  if (order == 0) return prev;
  for (int k = 1; k < order; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Solves T_L(y) = target for y >= 1 by bisection on the recurrence; the
// solution is T_{1/L}(target).
double inverse_cheb(int order, double target) {
  double lo = 1.0, hi = 2.0;
  while (cheb_recurrence(order, hi) < target) hi *= 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (cheb_recurrence(order, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double pl_oracle(double lambda, int order, double delta) {
  const double inv_gamma = inverse_cheb(order, 1.0 / delta);
  const double response = cheb_recurrence(order, std::sqrt(1.0 - lambda) * inv_gamma);
  return 1.0 - delta * delta * response * response;
}

}  // namespace

TEST_CASE("chebyshev evaluation") {
  for (double x : {0.3, 1.0, 2.0}) {
    CHECK(chebyshev_t(1.0, x) == doctest::Approx(x).epsilon(1e-14));
  }
  for (double order : {1.0, 3.0, 0.25, 7.5}) {
    CHECK(chebyshev_t(order, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Fractional order against the integer-order inverse.
  CHECK(chebyshev_t(1.0 / 3.0, 10.0) == doctest::Approx(inverse_cheb(3, 10.0)).epsilon(1e-12));
  CHECK(chebyshev_t(1.0 / 9.0, 10.0) == doctest::Approx(inverse_cheb(9, 10.0)).epsilon(1e-12));
  // Integer orders against the recurrence on both branches.
  for (double x : {-1.5, -0.7, 0.2, 0.99, 1.3, 4.0}) {
    CHECK(chebyshev_t(5.0, x) == doctest::Approx(cheb_recurrence(5, x)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(chebyshev_t(0.5, 0.3), ValidationError);
  CHECK_THROWS_AS(chebyshev_t(-1.0, 2.0), ValidationError);
}

TEST_CASE("phase schedule structure") {
  const FpaaSchedule trivial = phase_schedule(1, 0.2);
  CHECK(trivial.iterations() == 0);
  CHECK(trivial.alphas.empty());
  CHECK(trivial.betas.empty());
  CHECK(trivial.gamma_cheb == doctest::Approx(0.2).epsilon(1e-12));

  const FpaaSchedule nine = phase_schedule(9, 0.1);
  CHECK(nine.iterations() == 4);
  for (int j = 1; j <= 4; ++j) {
    CHECK(nine.betas[4 - j] == doctest::Approx(-nine.alphas[j - 1]).epsilon(1e-15));
  }
  CHECK(nine.gamma_cheb == doctest::Approx(1.0 / inverse_cheb(9, 10.0)).epsilon(1e-12));
  for (double alpha : nine.alphas) {
    CHECK(alpha > 0.0);
    CHECK(alpha < 2.0 * std::acos(-1.0));
  }

  const FpaaSchedule three = phase_schedule(3, 0.1);
  const double gamma = 1.0 / inverse_cheb(3, 10.0);
  const double expected_alpha =
      2.0 * (std::acos(-1.0) / 2.0 -
             std::atan(std::tan(2.0 * std::acos(-1.0) / 3.0) * std::sqrt(1.0 - gamma * gamma)));
  CHECK(three.alphas[0] == doctest::Approx(expected_alpha).epsilon(1e-12));

  CHECK_THROWS_AS(phase_schedule(4, 0.1), ValidationError);
  CHECK_THROWS_AS(phase_schedule(0, 0.1), ValidationError);
  CHECK_THROWS_AS(phase_schedule(5, 1.2), ValidationError);
}

TEST_CASE("closed-form response") {
  // Depth 1 is the bare pass.
  for (double lambda : {0.0, 0.2, 0.9, 1.0}) {
    CHECK(analytic_pl(lambda, 1, 0.1) == doctest::Approx(lambda).epsilon(1e-12));
  }
  // At the admissible edge the response hits exactly 1 - delta^2.
  for (int depth : {3, 9, 15}) {
    const double gamma = phase_schedule(depth, 0.1).gamma_cheb;
    CHECK(analytic_pl(1.0 - gamma * gamma, depth, 0.1) ==
          doctest::Approx(1.0 - 0.01).epsilon(1e-10));
  }
  // Reference point from the independent recurrence oracle.
  const double lambda = 3.0 / 16.0 * std::exp(-2.0);
  CHECK(analytic_pl(lambda, 9, 0.1) == doctest::Approx(pl_oracle(lambda, 9, 0.1)).epsilon(1e-10));
  for (double probe : {0.001, 0.05, 0.3, 0.7, 0.999}) {
    for (int depth : {3, 5, 15}) {
      CHECK(analytic_pl(probe, depth, 0.1) ==
            doctest::Approx(pl_oracle(probe, depth, 0.1)).epsilon(1e-9));
    }
  }
}

TEST_CASE("phased reflections preserve the joint norm") {
  PauliHamiltonian h = testing::maxcut5();
  const UnitaryProgram program = build_lcu_program(h, 0.7);
  JointState axis(uniform_state(5), program.num_ancillas);
  axis.apply(program);
  JointState state = axis;
  const FpaaSchedule schedule = phase_schedule(9, 0.1);
  for (int j = 0; j < schedule.iterations(); ++j) {
    state.scale_good_subspace(std::polar(1.0, -schedule.betas[j]));
    CHECK(state.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    state.reflect_about(axis, 1.0 - std::polar(1.0, schedule.alphas[j]));
    CHECK(state.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("depth-1 amplification is the bare LCU pass") {
  PauliHamiltonian h = testing::maxcut5();
  Spectrum spec = compute_spectrum(h);
  QuantumState psi0 = uniform_state(5);
  const double beta = 0.6;
  const UnitaryProgram program = build_lcu_program(h, beta);
  const LcuOutcome bare = run_gate_level(h, spec, psi0, beta);
  const AmplifiedOutcome amp = amplify(program, psi0, phase_schedule(1, 0.1), spec);
  CHECK(amp.p_amplified == doctest::Approx(bare.p_success).epsilon(1e-12));
  CHECK(amp.f_ground == doctest::Approx(bare.f_ground).epsilon(1e-12));
}

TEST_CASE("simulated amplification equals the closed form across the sweep") {
  PauliHamiltonian h = testing::maxcut5();
  Spectrum spec = compute_spectrum(h);
  QuantumState psi0 = uniform_state(5);
  const double delta = 0.1;
  for (int depth : {5, 9, 15}) {
    const FpaaSchedule schedule = phase_schedule(depth, delta);
    const double edge = 1.0 - schedule.gamma_cheb * schedule.gamma_cheb;
    for (double beta = 0.0; beta <= 2.0 + 1e-9; beta += 0.1) {
      const UnitaryProgram program = build_lcu_program(h, beta);
      const LcuOutcome bare = run_gate_level(h, spec, psi0, beta);
      const AmplifiedOutcome amp = amplify(program, psi0, schedule, spec);
      const double formula = analytic_pl(bare.p_success, depth, delta);
      CHECK(std::abs(amp.p_amplified - formula) <= 1e-8);
      CHECK(std::abs(amp.f_ground - bare.f_ground) <= 1e-10);
      CHECK(amp.p_g == doctest::Approx(amp.p_amplified * amp.f_ground).epsilon(1e-12));
      CHECK(amp.p_g <= amp.f_ground + 1e-12);
      if (bare.p_success >= edge) {
        CHECK(amp.p_amplified >= 1.0 - delta * delta - 1e-9);
      }
    }
  }
}

TEST_CASE("shallow schedules die off at large beta") {
  PauliHamiltonian h = testing::maxcut5();
  Spectrum spec = compute_spectrum(h);
  QuantumState psi0 = uniform_state(5);
  const FpaaSchedule five = phase_schedule(5, 0.1);
  double previous = 1.0;
  for (double beta = 1.0; beta <= 2.0 + 1e-9; beta += 0.25) {
    const UnitaryProgram program = build_lcu_program(h, beta);
    const AmplifiedOutcome amp = amplify(program, psi0, five, spec);
    CHECK(amp.p_amplified < 0.1);
    CHECK(amp.p_amplified <= previous + 1e-12);
    previous = amp.p_amplified;
  }
}

TEST_CASE("amplify validates the register layout") {
  PauliHamiltonian h = testing::maxcut5();
  Spectrum spec = compute_spectrum(h);
  const UnitaryProgram program = build_lcu_program(h, 0.5);
  CHECK_THROWS_AS(amplify(program, uniform_state(4), phase_schedule(3, 0.1), spec),
                  ValidationError);
}
