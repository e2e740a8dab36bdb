#include <doctest.h>

#include <cmath>

#include "fite/state_prep.hpp"
#include "test_support.hpp"

using namespace fite;
using fite::testing::TestRng;

TEST_CASE("uniform state amplitudes") {
  QuantumState one = uniform_state(1);
  CHECK(one.amplitude(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(one.amplitude(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  QuantumState five = uniform_state(5);
  for (Bits x = 0; x < 32; ++x) {
    CHECK(five.amplitude(x).real() == doctest::Approx(1.0 / std::sqrt(32.0)));
  }
  CHECK(five.norm() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("uniform overlap with the MaxCut ground subspace is 3/16") {
  Spectrum spec = compute_spectrum(testing::maxcut5());
  CHECK(ground_overlap(uniform_state(5), spec) == doctest::Approx(3.0 / 16.0).epsilon(1e-13));
}

TEST_CASE("warm start degenerate biases") {
  const Bits target = 0b1011;
  QuantumState pinned = warm_start(4, {target, 1.0});
  CHECK(std::abs(pinned.amplitude(target)) == doctest::Approx(1.0));

  QuantumState unbiased = warm_start(4, {target, 0.5});
  for (Bits x = 0; x < 16; ++x) {
    CHECK(std::abs(unbiased.amplitude(x)) == doctest::Approx(0.25).epsilon(1e-13));
  }

  CHECK_THROWS_AS(warm_start(4, {target, 1.5}), ValidationError);
  CHECK_THROWS_AS(warm_start(4, {target, -0.1}), ValidationError);
}

TEST_CASE("warm-start overlaps on the cubic instance match the closed form") {
  PauliHamiltonian h = testing::hubo8();
  Spectrum spec = compute_spectrum(h);
  const Bits gstar = spec.ground_set.front();

  CHECK(ground_overlap(uniform_state(8), spec) == doctest::Approx(1.0 / 32.0).epsilon(1e-13));

  const double g85 = ground_overlap(warm_start(8, {gstar, 0.85}), spec);
  const double g60 = ground_overlap(warm_start(8, {gstar, 0.60}), spec);
  CHECK(g85 == doctest::Approx(0.29).epsilon(0.02));
  CHECK(g60 == doctest::Approx(0.041).epsilon(0.05));
  CHECK(g85 ==
        doctest::Approx(warm_overlap_closed_form(spec.ground_set, gstar, 0.85, 8)).epsilon(1e-12));
  CHECK(g60 ==
        doctest::Approx(warm_overlap_closed_form(spec.ground_set, gstar, 0.60, 8)).epsilon(1e-12));
}

TEST_CASE("closed-form overlap reductions") {
  // Singleton ground set: p^n.
  CHECK(warm_overlap_closed_form({0b101}, 0b101, 0.7, 3) ==
        doctest::Approx(std::pow(0.7, 3)).epsilon(1e-14));
  // p = 1/2 always reduces to |G| / 2^n.
  Spectrum spec = compute_spectrum(testing::hubo8());
  CHECK(warm_overlap_closed_form(spec.ground_set, spec.ground_set.front(), 0.5, 8) ==
        doctest::Approx(8.0 / 256.0).epsilon(1e-13));
}

TEST_CASE("closed form equals the prepared-state overlap on random instances") {
  TestRng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.uniform_int(1, 10);
    PauliHamiltonian h = testing::random_hamiltonian(rng, n, 8);
    Spectrum spec = compute_spectrum(h);
    const Bits gstar = static_cast<Bits>(rng.next() & ((Bits{1} << n) - 1));
    const double p = rng.uniform(0.0, 1.0);
    const double direct = ground_overlap(warm_start(n, {gstar, p}), spec);
    const double closed = warm_overlap_closed_form(spec.ground_set, gstar, p, n);
    CHECK(direct == doctest::Approx(closed).epsilon(1e-12));

    // gamma0(1) = 1 iff the target is a ground state.
    const double pinned = ground_overlap(warm_start(n, {gstar, 1.0}), spec);
    if (spec.is_ground(gstar)) {
      CHECK(pinned == doctest::Approx(1.0).epsilon(1e-12));
    } else {
      CHECK(pinned == doctest::Approx(0.0).epsilon(1e-12));
    }
    // gamma0(1/2) = |G| / 2^n always.
    const double unbiased = ground_overlap(warm_start(n, {gstar, 0.5}), spec);
    CHECK(unbiased == doctest::Approx(static_cast<double>(spec.ground_set.size()) /
                                      static_cast<double>(spec.dim()))
                          .epsilon(1e-12));
  }
}

TEST_CASE("state constructors validate") {
  CHECK_THROWS_AS(QuantumState::from_amplitudes(1, {{0.5, 0.0}, {0.5, 0.0}}), ValidationError);
  CHECK_THROWS_AS(QuantumState::normalized(1, {{0.0, 0.0}, {0.0, 0.0}}), ValidationError);
  CHECK_THROWS_AS(QuantumState::from_amplitudes(2, {{1.0, 0.0}}), ValidationError);

  Spectrum spec = compute_spectrum(testing::maxcut5());
  CHECK_THROWS_AS(ground_overlap(uniform_state(4), spec), ValidationError);
}

TEST_CASE("produced states stay normalized") {
  TestRng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(1, 10);
    CHECK(uniform_state(n).norm() == doctest::Approx(1.0).epsilon(1e-12));
    const Bits gstar = static_cast<Bits>(rng.next() & ((Bits{1} << n) - 1));
    CHECK(warm_start(n, {gstar, rng.uniform(0.0, 1.0)}).norm() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(testing::random_product_state(rng, n).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}
