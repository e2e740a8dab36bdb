#include "fite/planner.hpp"

#include <cmath>
#include <string>

#include "fite/fpaa_engine.hpp"

namespace fite {

namespace {

void check_unit_interval(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    throw ValidationError(std::string(name) + " must lie in (0, 1), got " +
                          std::to_string(value));
  }
}

void check_gamma0(double gamma0) {
  if (!(gamma0 >= 0.0 && gamma0 <= 1.0)) {
    throw ValidationError("gamma0 must lie in [0, 1], got " + std::to_string(gamma0));
  }
}

}  // namespace

double envelope(double gamma0, double w_norm, double e0, double beta) {
  if (!(beta >= 0.0)) {
    throw ValidationError("beta must be nonnegative, got " + std::to_string(beta));
  }
  return gamma0 * std::exp(-2.0 * beta * (w_norm + e0));
}

double gap_bound_f(double gamma0, double delta_gap, double beta) {
  if (!(beta >= 0.0)) {
    throw ValidationError("beta must be nonnegative, got " + std::to_string(beta));
  }
  check_gamma0(gamma0);
  if (gamma0 == 0.0) return 0.0;
  return gamma0 / (gamma0 + (1.0 - gamma0) * std::exp(-2.0 * beta * delta_gap));
}

BetaStar beta_star(double gamma0, double delta_gap, double target_f) {
  check_unit_interval(target_f, "target fidelity");
  check_gamma0(gamma0);
  if (gamma0 == 0.0) return BetaStar{false, 0.0};
  if (target_f <= gamma0 || gamma0 == 1.0) return BetaStar{true, 0.0};
  if (!(delta_gap > 0.0)) {
    throw ValidationError("spectral gap must be positive, got " + std::to_string(delta_gap));
  }
  const double log_arg = target_f * (1.0 - gamma0) / (gamma0 * (1.0 - target_f));
  const double value = std::log(log_arg) / (2.0 * delta_gap);
  return BetaStar{true, std::max(0.0, value)};
}

PSandwich p_sandwich(double gamma0, double w_norm, double e0, double beta_star_value,
                     double target_f) {
  check_unit_interval(target_f, "target fidelity");
  const double lower = envelope(gamma0, w_norm, e0, beta_star_value);
  return PSandwich{lower, lower / target_f};
}

QueryPlan plan_queries(double lambda_star, double fpaa_delta) {
  check_unit_interval(fpaa_delta, "delta");
  if (!(lambda_star > 0.0 && lambda_star <= 1.0)) {
    throw ValidationError("query planning needs a success bound in (0, 1]; got " +
                          std::to_string(lambda_star) + " (unbounded at 0)");
  }
  const double threshold = 1.0 - fpaa_delta * fpaa_delta;
  const auto reaches_target = [&](std::int64_t depth) {
    return analytic_pl(lambda_star, static_cast<int>(depth), fpaa_delta) >= threshold;
  };
  QueryPlan plan;
  plan.asymptotic_depth =
      static_cast<std::int64_t>(std::ceil(std::log(2.0 / fpaa_delta) / std::sqrt(lambda_star)));
  if (reaches_target(1)) {
    plan.exact_depth = 1;
    return plan;
  }
  // The response is monotone in L: bracket by doubling, then bisect on odd L.
  std::int64_t lo = 1, hi = 3;
  while (!reaches_target(hi)) {
    lo = hi;
    hi = 2 * hi + 1;
    if (hi > (std::int64_t{1} << 30)) {
      throw ValidationError("query depth for success bound " + std::to_string(lambda_star) +
                            " exceeds the search limit");
    }
  }
  while (hi - lo > 2) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (mid % 2 == 0) ++mid;
    if (mid >= hi) mid -= 2;
    if (reaches_target(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  plan.exact_depth = hi;
  return plan;
}

double state_error_beta(double gamma0, double delta_gap, double eps) {
  if (!(gamma0 > 0.0 && gamma0 <= 1.0)) {
    throw ValidationError("gamma0 must lie in (0, 1], got " + std::to_string(gamma0));
  }
  if (!(eps > 0.0)) {
    throw ValidationError("state-error target must be positive, got " + std::to_string(eps));
  }
  if (eps >= std::sqrt(2.0)) return 0.0;  // met at beta = 0 for any overlap
  if (gamma0 == 1.0) return 0.0;
  if (!(delta_gap > 0.0)) {
    throw ValidationError("spectral gap must be positive, got " + std::to_string(delta_gap));
  }
  const double contraction = 1.0 - 0.5 * eps * eps;          // in (0, 1]
  const double denom = 1.0 / (contraction * contraction) - 1.0;
  if (denom <= 0.0) return 0.0;
  const double value = std::log(((1.0 - gamma0) / gamma0) / denom) / (2.0 * delta_gap);
  return std::max(0.0, value);
}

CostReport cnot_estimate(int system_qubits, int num_terms, const std::vector<int>& localities,
                         std::int64_t queries) {
  if (queries < 0) throw ValidationError("query count must be nonnegative");
  CostReport report;
  for (int k : localities) report.lcu_pass += k;
  report.oracle = static_cast<std::int64_t>(num_terms) * num_terms;
  const std::int64_t width = num_terms + system_qubits;
  report.reflection = width * width + 2;
  report.queries = queries;
  report.total =
      queries * (report.lcu_pass + report.oracle + width * width) + report.lcu_pass;
  report.qubits_total = system_qubits + num_terms + 1;
  return report;
}

Plan make_plan(const PlanInputs& inputs, int system_qubits,
               const std::vector<int>& localities) {
  Plan plan;
  plan.threshold = beta_star(inputs.gamma0, inputs.delta_gap, inputs.target_f);
  if (!plan.threshold.reachable) return plan;
  plan.lambda_star = envelope(inputs.gamma0, inputs.w_norm, inputs.e0, plan.threshold.value);
  plan.sandwich = p_sandwich(inputs.gamma0, inputs.w_norm, inputs.e0, plan.threshold.value,
                             inputs.target_f);
  plan.queries = plan_queries(plan.lambda_star, inputs.fpaa_delta);
  plan.cost = cnot_estimate(system_qubits, static_cast<int>(localities.size()), localities,
                            plan.queries.exact_depth);
  if (inputs.state_eps.has_value()) {
    plan.error_beta = state_error_beta(inputs.gamma0, inputs.delta_gap, *inputs.state_eps);
  }
  return plan;
}

}  // namespace fite
