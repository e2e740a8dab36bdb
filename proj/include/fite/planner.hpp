#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fite/errors.hpp"

namespace fite {

/// Spectral and target quantities feeding the closed-form plan.
struct PlanInputs {
  double gamma0 = 0.0;     // initial ground-subspace overlap
  double delta_gap = 0.0;  // spectral gap above the ground subspace
  double w_norm = 0.0;     // l1 norm of the Pauli coefficients
  double e0 = 0.0;         // ground energy
  double target_f = 0.9;   // target conditional ground fidelity, in (0, 1)
  double fpaa_delta = 0.1; // amplification tolerance, in (0, 1)
  std::optional<double> state_eps;  // optional state-error target in (0, sqrt 2)
};

/// Identity envelope gamma_0 e^(-2 beta (W + E_0)): the exact value of
/// P_LCU(beta) * F_g(beta) for every beta.
double envelope(double gamma0, double w_norm, double e0, double beta);

/// Gap-based fidelity lower bound gamma_0 / (gamma_0 + (1-gamma_0)
/// e^(-2 beta Delta)); 0 when gamma_0 = 0.
double gap_bound_f(double gamma0, double delta_gap, double beta);

/// Sufficient imaginary time. A zero initial overlap makes every target
/// unreachable at any finite beta; that outcome is an explicit variant, never
/// a floating-point infinity.
struct BetaStar {
  bool reachable = true;
  double value = 0.0;
};

/// max{0, (1/2 Delta) ln(F (1-g0) / (g0 (1-F)))}. Returns 0 whenever
/// target_f <= gamma0 (the initial state already meets the target) and for
/// gamma0 = 1; returns unreachable for gamma0 = 0.
BetaStar beta_star(double gamma0, double delta_gap, double target_f);

/// Success-probability sandwich at the threshold: lower = envelope at
/// beta_star, upper = lower / target_f.
struct PSandwich {
  double lower = 0.0;
  double upper = 0.0;
};

PSandwich p_sandwich(double gamma0, double w_norm, double e0, double beta_star_value,
                     double target_f);

/// Query depth plan. exact_depth is the smallest odd L whose closed-form
/// amplified probability at lambda_star reaches 1 - delta^2; the asymptotic
/// column ceil(ln(2/delta)/sqrt(lambda_star)) is reported for comparison.
struct QueryPlan {
  std::int64_t exact_depth = 1;
  std::int64_t asymptotic_depth = 1;
};

QueryPlan plan_queries(double lambda_star, double fpaa_delta);

/// Sufficient beta for state error || psi(beta) - Pi_G psi_0 / sqrt(gamma_0) ||
/// <= eps, from the gap bound:
///   (1/2 Delta) ln[ ((1-g0)/g0) / ((1 - eps^2/2)^(-2) - 1) ], clamped at 0.
/// Returns 0 for eps >= sqrt(2 - 2 sqrt(gamma0)) (already met at beta = 0).
double state_error_beta(double gamma0, double delta_gap, double eps);

/// Leading-order two-qubit gate estimate with unit constants, itemized so a
/// different decomposition model can be substituted. All entries are
/// estimates, not exact synthesis counts.
struct CostReport {
  std::int64_t lcu_pass = 0;    // sum of term localities (one pass of A)
  std::int64_t oracle = 0;      // M^2: multi-controlled flag on the M ancillas
  std::int64_t reflection = 0;  // (M+n)^2 + 2: zero reflection, two-target form
  std::int64_t queries = 0;     // L
  std::int64_t total = 0;       // L [sum k + M^2 + (M+n)^2] + sum k
  int qubits_total = 0;         // n + M + 1 (one phase-kickback scratch qubit)
};

CostReport cnot_estimate(int system_qubits, int num_terms, const std::vector<int>& localities,
                         std::int64_t queries);

/// Full closed-form plan: threshold, success sandwich, query depth, cost.
struct Plan {
  BetaStar threshold;
  double lambda_star = 0.0;
  PSandwich sandwich;
  QueryPlan queries;
  CostReport cost;
  std::optional<double> error_beta;
};

Plan make_plan(const PlanInputs& inputs, int system_qubits, const std::vector<int>& localities);

}  // namespace fite
