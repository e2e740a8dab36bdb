#pragma once

#include <vector>

#include "fite/lcu_engine.hpp"

namespace fite {

/// Chebyshev polynomial of the first kind, continuously extended:
///   cos(order * arccos x) on [-1, 1], cosh(order * arccosh x) for x > 1.
/// Integer orders extend to x < -1 by parity; fractional orders require
/// x >= 1 (fractional order with x < 1 is a domain error).
double chebyshev_t(double order, double x);

/// Phase schedule for fixed-point amplification at query depth L = 2l + 1.
/// The two length-l sequences are phase-matched: betas[l-j] = -alphas[j-1].
struct FpaaSchedule {
  int query_depth = 1;        // L, odd
  double delta = 0.1;         // residual-amplitude tolerance
  double gamma_cheb = 0.0;    // 1 / T_{1/L}(1/delta)
  std::vector<double> alphas;  // radians, applied to the initial-state reflection
  std::vector<double> betas;   // radians, applied to the good-subspace reflection

  int iterations() const { return (query_depth - 1) / 2; }
};

/// alpha_j = 2 arccot(tan(2 pi j / L) sqrt(1 - gamma^2)), arccot valued in
/// (0, pi). L = 1 yields empty phase lists (the bare pass).
FpaaSchedule phase_schedule(int query_depth, double delta);

/// Closed-form amplified success probability for an event of initial
/// probability lambda:
///   P_L = 1 - delta^2 [T_L(sqrt(1 - lambda) / gamma)]^2,
/// clamped to [0, 1]. Reaches >= 1 - delta^2 exactly when
/// lambda >= 1 - gamma^2.
double analytic_pl(double lambda, int query_depth, double delta);

struct AmplifiedOutcome {
  double p_amplified = 0.0;  // good-subspace probability after the schedule
  double f_ground = 0.0;     // conditional ground fidelity (unchanged by FPAA)
  double p_g = 0.0;          // p_amplified * f_ground
};

/// Runs the phased-reflection sequence on the joint register. A is the
/// block-encoding program applied to the prepared initial state; the good
/// subspace is all-ancillas-zero (system qubits unconstrained). Each of the
/// l iterations applies the good-subspace phase e^(-i beta_j) followed by the
/// initial-state reflection I - (1 - e^(i alpha_j)) |s><s|, with |s> = A|0>.
/// Both are exact phase masks / rank-one updates, no gate decomposition.
AmplifiedOutcome amplify(const UnitaryProgram& program, const QuantumState& initial,
                         const FpaaSchedule& schedule, const Spectrum& spectrum);

}  // namespace fite
