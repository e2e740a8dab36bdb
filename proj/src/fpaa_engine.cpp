#include "fite/fpaa_engine.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "fite/errors.hpp"

namespace fite {

namespace {

const double kPi = std::acos(-1.0);

void check_schedule_params(int query_depth, double delta) {
  if (query_depth < 1 || query_depth % 2 == 0) {
    throw ValidationError("query depth must be an odd integer >= 1, got " +
                          std::to_string(query_depth));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
}

}  // namespace

double chebyshev_t(double order, double x) {
  if (!(order > 0.0)) {
    throw ValidationError("Chebyshev order must be positive, got " + std::to_string(order));
  }
  const bool integer_order = (order == std::floor(order));
  if (x >= 1.0) return std::cosh(order * std::acosh(x));
  if (!integer_order) {
    throw ValidationError("fractional Chebyshev order requires x >= 1, got x = " +
                          std::to_string(x));
  }
  if (x <= -1.0) {
    const double magnitude = std::cosh(order * std::acosh(-x));
    return (static_cast<long long>(order) % 2 == 0) ? magnitude : -magnitude;
  }
  return std::cos(order * std::acos(x));
}

FpaaSchedule phase_schedule(int query_depth, double delta) {
  check_schedule_params(query_depth, delta);
  FpaaSchedule schedule;
  schedule.query_depth = query_depth;
  schedule.delta = delta;
  schedule.gamma_cheb = 1.0 / chebyshev_t(1.0 / query_depth, 1.0 / delta);
  const int l = schedule.iterations();
  schedule.alphas.resize(l);
  schedule.betas.resize(l);
  const double root = std::sqrt(1.0 - schedule.gamma_cheb * schedule.gamma_cheb);
  for (int j = 1; j <= l; ++j) {
    const double t = std::tan(2.0 * kPi * j / query_depth) * root;
    schedule.alphas[j - 1] = 2.0 * (kPi / 2.0 - std::atan(t));  // arccot in (0, pi)
  }
  for (int j = 1; j <= l; ++j) schedule.betas[l - j] = -schedule.alphas[j - 1];
  return schedule;
}

double analytic_pl(double lambda, int query_depth, double delta) {
  check_schedule_params(query_depth, delta);
  // Measured probabilities can overshoot the unit interval by roundoff.
  if (lambda > 1.0 && lambda < 1.0 + 1e-9) lambda = 1.0;
  if (lambda < 0.0 && lambda > -1e-9) lambda = 0.0;
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("lambda must lie in [0, 1], got " + std::to_string(lambda));
  }
  const double gamma = 1.0 / chebyshev_t(1.0 / query_depth, 1.0 / delta);
  const double response = chebyshev_t(query_depth, std::sqrt(1.0 - lambda) / gamma);
  const double p = 1.0 - delta * delta * response * response;
  return std::min(1.0, std::max(0.0, p));
}

AmplifiedOutcome amplify(const UnitaryProgram& program, const QuantumState& initial,
                         const FpaaSchedule& schedule, const Spectrum& spectrum) {
  if (initial.num_qubits() != program.system_qubits) {
    throw ValidationError("initial state has " + std::to_string(initial.num_qubits()) +
                          " qubits but the program expects " +
                          std::to_string(program.system_qubits));
  }
  // |s> = A |0>: block-encoding pass applied to the prepared initial state.
  JointState axis(initial, program.num_ancillas);
  axis.apply(program);

  JointState state = axis;
  const int l = schedule.iterations();
  for (int j = 0; j < l; ++j) {
    state.scale_good_subspace(std::polar(1.0, -schedule.betas[j]));
    const Amplitude coefficient = 1.0 - std::polar(1.0, schedule.alphas[j]);
    state.reflect_about(axis, coefficient);
  }

  AmplifiedOutcome outcome;
  outcome.p_amplified = state.good_probability();
  if (outcome.p_amplified > 0.0) {
    outcome.f_ground = ground_overlap(state.post_selected_system(), spectrum);
  }
  outcome.p_g = outcome.p_amplified * outcome.f_ground;
  return outcome;
}

}  // namespace fite
