#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fite/pauli_model.hpp"
#include "fite/state_prep.hpp"

namespace fite {

/// One term of the factorized propagator, contracted to operator norm <= 1:
///   alpha_w * I - gamma_w * sgn(coeff) * Z_mask
/// with alpha_w = (1 + e^(-2 beta |coeff|))/2 and gamma_w = 1 - alpha_w.
/// The pair is a convex combination for every beta >= 0, so the beta -> 0
/// limit is smooth (the kappa = alpha_w/gamma_w form diverges there and is
/// exposed for reporting only).
struct LcuBlock {
  PauliTerm term;
  double beta = 0.0;
  double alpha_w = 1.0;
  double gamma_w = 0.0;

  /// coth(beta |coeff|); +inf at beta = 0.
  double kappa() const { return alpha_w / gamma_w; }
};

LcuBlock make_lcu_block(const PauliTerm& term, double beta);

/// Real rotation on one ancilla qubit. Opening form is
///   [[c, -s], [s, c]]  with c = sqrt(alpha_w), s = sqrt(gamma_w);
/// the closing gate is its transpose (real, so transpose = adjoint).
struct AncillaRotation {
  int qubit = 0;
  double c = 1.0;
  double s = 0.0;
  bool transposed = false;
};

/// Diagonal on the joint register: where the ancilla bit is 1, multiplies the
/// amplitude by sign * (-1)^popcount(system_mask & system_bits). sign carries
/// the -sgn(coeff) of the encoded unitary.
struct ControlledTermFlip {
  int ancilla = 0;
  Bits system_mask = 0;
  double sign = -1.0;
};

using Gate = std::variant<AncillaRotation, ControlledTermFlip>;

/// Ordered gate list realizing the joint block-encoding. One three-gate block
/// per Hamiltonian term; post-selecting every ancilla on |0> applies
/// e^(-beta W) e^(-beta H) to the system register.
struct UnitaryProgram {
  int system_qubits = 0;
  int num_ancillas = 0;
  std::vector<LcuBlock> blocks;
  std::vector<Gate> gates;

  int total_qubits() const { return system_qubits + num_ancillas; }
  std::size_t joint_dim() const { return std::size_t{1} << total_qubits(); }
  /// Ancilla for block index mu is joint qubit system_qubits + mu.
  int ancilla_qubit(int block_index) const { return system_qubits + block_index; }
};

UnitaryProgram build_lcu_program(const PauliHamiltonian& hamiltonian, double beta);

/// Dense statevector over system qubits 0..n-1 plus ancilla qubits n..n+M-1.
/// Joint index = (ancilla_bits << n) | system_bits.
class JointState {
 public:
  JointState(const QuantumState& system, int num_ancillas);

  int system_qubits() const { return system_qubits_; }
  int ancilla_qubits() const { return num_ancillas_; }
  int total_qubits() const { return system_qubits_ + num_ancillas_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }

  void apply(const Gate& gate);
  void apply(const UnitaryProgram& program);

  double norm_sq() const;

  /// Probability that every ancilla reads 0.
  double good_probability() const;

  /// Renormalized system marginal on the all-ancillas-zero event.
  QuantumState post_selected_system() const;

  /// Multiplies every amplitude in the all-ancillas-zero subspace by factor.
  void scale_good_subspace(Amplitude factor);

  /// psi -> psi - coefficient * <axis|psi> * axis. With coefficient
  /// 1 - e^(i phase) this is the generalized reflection about axis.
  void reflect_about(const JointState& axis, Amplitude coefficient);

  /// |amp|^2 for every joint basis state, in index order.
  std::vector<double> probabilities() const;

 private:
  int system_qubits_;
  int num_ancillas_;
  std::vector<Amplitude> amps_;
};

/// Result of one block-encoding pass at a fixed beta.
struct LcuOutcome {
  double p_success = 1.0;       // all ancillas post-select to |0>
  double log_p_success = 0.0;   // finite even when p_success underflows
  QuantumState post_state;      // normalized system state given success
  double f_ground = 0.0;        // ground-subspace weight of post_state
};

/// Closed-form spectral path:
///   P = e^(-2 beta W) * sum_x |c_x|^2 e^(-2 beta E_x),
///   post amplitudes proportional to c_x e^(-beta E_x),
/// accumulated with e^(-2 beta E_0) factored out so large beta never
/// overflows or underflows the partition sum.
LcuOutcome analytic_outcome(const PauliHamiltonian& hamiltonian, const Spectrum& spectrum,
                            const QuantumState& state, double beta);

/// Gate-by-gate simulation of the joint register: prepares ancillas in |0>,
/// applies the block-encoding program, post-selects. Independent of the
/// analytic path above.
LcuOutcome run_gate_level(const PauliHamiltonian& hamiltonian, const Spectrum& spectrum,
                          const QuantumState& state, double beta);

/// Full-register measurement record. Histogram keys are joint bitstrings
/// rendered most significant qubit first (ancillas occupy the top bits, so a
/// success outcome starts with M zeros).
struct ShotReport {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::uint64_t successes = 0;     // all ancillas measured 0
  std::uint64_t ground_hits = 0;   // successes whose system bits are ground
  std::map<std::string, std::uint64_t> histogram;
};

/// Draws shots from the exact joint distribution via inverse-CDF over the
/// probability vector, using a counter-based seeded generator: identical
/// seed gives an identical report on any platform.
ShotReport sample_shots(const PauliHamiltonian& hamiltonian, const Spectrum& spectrum,
                        const QuantumState& state, double beta, std::uint64_t shots,
                        std::uint64_t seed);

}  // namespace fite
