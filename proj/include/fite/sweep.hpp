#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "fite/fpaa_engine.hpp"
#include "fite/lcu_engine.hpp"

namespace fite {

/// Inclusive beta grid start, start+step, ..., stop (within half a step).
struct BetaGrid {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

/// One row per beta point of the identity sweep. Gate-level columns are
/// filled only when the circuit path is requested.
struct SweepRecord {
  double beta = 0.0;
  double p_lcu = 0.0;
  double f_g = 0.0;
  double product = 0.0;
  double envelope = 0.0;
  double rel_err = 0.0;  // |product/envelope - 1|, evaluated in log space
  std::optional<double> p_lcu_gate;
  std::optional<double> f_g_gate;
  std::optional<double> state_fidelity;  // |<post_analytic|post_gate>|^2
};

std::vector<SweepRecord> run_lcu_sweep(const PauliHamiltonian& hamiltonian,
                                       const Spectrum& spectrum, const QuantumState& state,
                                       const BetaGrid& grid, bool gate_level);

/// Header `beta,p_lcu,f_g,product,envelope,rel_err`, plus
/// `,p_lcu_gate,f_g_gate,state_fidelity` in gate-level mode.
void write_lcu_csv(std::ostream& out, const std::vector<SweepRecord>& records, bool gate_level);

/// One row per (beta, L) of the amplification sweep. query_depth 0 is the
/// unamplified passthrough.
struct FpaaRecord {
  double beta = 0.0;
  int query_depth = 0;
  double delta = 0.0;
  double p_unamp = 0.0;
  double p_amp = 0.0;
  double p_amp_formula = 0.0;  // closed form evaluated at the measured p_unamp
  double f_g = 0.0;
  double p_g = 0.0;
};

std::vector<FpaaRecord> run_fpaa_sweep(const PauliHamiltonian& hamiltonian,
                                       const Spectrum& spectrum, const QuantumState& state,
                                       const BetaGrid& grid,
                                       const std::vector<int>& query_depths, double delta);

/// Header `beta,L,delta,p_unamp,p_amp,p_amp_formula,f_g,p_g`.
void write_fpaa_csv(std::ostream& out, const std::vector<FpaaRecord>& records);

}  // namespace fite
