#pragma once

namespace fite {

/// Caps on dense allocations. Every spectral or statevector routine works on
/// full 2^n arrays, so these guard memory, not correctness.
struct RegisterLimits {
  int max_system_qubits = 20;  // Hamiltonian construction
  int max_enum_qubits = 24;    // dense spectrum enumeration
  int max_joint_qubits = 26;   // system + LCU ancillas in one statevector
};

/// Process-wide limits. Mutated only at startup (CLI env override) or by
/// tests; all library routines read through this.
RegisterLimits& register_limits();

/// Applies FINITE_MAX_QUBITS, which overrides all three caps at once.
/// Throws ValidationError if the variable is set but not a positive integer.
void apply_register_limit_env();

}  // namespace fite
