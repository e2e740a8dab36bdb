#pragma once

#include <complex>
#include <vector>

#include "fite/bits.hpp"
#include "fite/pauli_model.hpp"

namespace fite {

using Amplitude = std::complex<double>;

inline constexpr double kNormTol = 1e-12;

/// Normalized amplitude vector over the computational basis of n qubits.
/// Amplitude index equals the basis bitstring (qubit i = bit i).
class QuantumState {
 public:
  static QuantumState uniform(int num_qubits);
  static QuantumState computational(int num_qubits, Bits basis_state);
  /// Requires unit 2-norm within kNormTol.
  static QuantumState from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes);
  /// Rescales to unit norm; rejects the zero vector.
  static QuantumState normalized(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  Amplitude amplitude(Bits x) const { return amplitudes_[x]; }

  double norm() const;

 private:
  QuantumState(int num_qubits, std::vector<Amplitude> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Biased product state: qubit q carries amplitude sqrt(bias) on target's bit
/// value and sqrt(1-bias) on its complement, all phases real nonnegative
/// (single R_y per qubit).
struct WarmStartSpec {
  Bits target = 0;     // candidate optimum bitstring
  double bias = 0.5;   // per-qubit probability of matching the target bit
};

QuantumState uniform_state(int num_qubits);

/// Amplitude of basis state g is sqrt(bias^(n-d) (1-bias)^d) with d the
/// Hamming distance from g to the target.
QuantumState warm_start(int num_qubits, const WarmStartSpec& spec);

/// gamma_0: total probability weight of the state on the ground subspace.
double ground_overlap(const QuantumState& state, const Spectrum& spectrum);

/// Closed form for the warm-start overlap: sum over the ground set of
/// bias^(n-d) (1-bias)^d. Matches ground_overlap(warm_start(...)) exactly.
double warm_overlap_closed_form(const std::vector<Bits>& ground_set, Bits target, double bias,
                                int num_qubits);

}  // namespace fite
