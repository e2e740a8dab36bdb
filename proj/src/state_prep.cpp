#include "fite/state_prep.hpp"

#include <cmath>
#include <string>

#include "fite/limits.hpp"

namespace fite {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1) throw ValidationError("state needs at least one qubit");
  if (num_qubits > register_limits().max_enum_qubits) {
    throw ResourceError("dense state over " + std::to_string(num_qubits) +
                        " qubits exceeds the cap of " +
                        std::to_string(register_limits().max_enum_qubits));
  }
}

}  // namespace

QuantumState QuantumState::uniform(int num_qubits) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double amp = std::pow(2.0, -0.5 * num_qubits);
  return QuantumState(num_qubits, std::vector<Amplitude>(dim, Amplitude{amp, 0.0}));
}

QuantumState QuantumState::computational(int num_qubits, Bits basis_state) {
  check_qubit_count(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (basis_state >= dim) {
    throw ValidationError("basis state index out of range for " + std::to_string(num_qubits) +
                          " qubits");
  }
  std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
  amps[basis_state] = 1.0;
  return QuantumState(num_qubits, std::move(amps));
}

QuantumState QuantumState::from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
  check_qubit_count(num_qubits);
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw ValidationError("amplitude vector has " + std::to_string(amplitudes.size()) +
                          " entries, expected 2^" + std::to_string(num_qubits));
  }
  QuantumState state(num_qubits, std::move(amplitudes));
  if (std::abs(state.norm() - 1.0) > kNormTol) {
    throw ValidationError("amplitude vector is not normalized (|norm - 1| = " +
                          std::to_string(std::abs(state.norm() - 1.0)) + ")");
  }
  return state;
}

QuantumState QuantumState::normalized(int num_qubits, std::vector<Amplitude> amplitudes) {
  check_qubit_count(num_qubits);
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw ValidationError("amplitude vector has " + std::to_string(amplitudes.size()) +
                          " entries, expected 2^" + std::to_string(num_qubits));
  }
  double norm_sq = 0.0;
  for (const Amplitude& a : amplitudes) norm_sq += std::norm(a);
  if (norm_sq <= 0.0) throw ValidationError("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (Amplitude& a : amplitudes) a *= inv;
  return QuantumState(num_qubits, std::move(amplitudes));
}

double QuantumState::norm() const {
  double norm_sq = 0.0;
  for (const Amplitude& a : amplitudes_) norm_sq += std::norm(a);
  return std::sqrt(norm_sq);
}

QuantumState uniform_state(int num_qubits) { return QuantumState::uniform(num_qubits); }

QuantumState warm_start(int num_qubits, const WarmStartSpec& spec) {
  check_qubit_count(num_qubits);
  if (spec.bias < 0.0 || spec.bias > 1.0) {
    throw ValidationError("warm-start bias must lie in [0, 1], got " + std::to_string(spec.bias));
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (spec.target >= dim) {
    throw ValidationError("warm-start target has more than " + std::to_string(num_qubits) +
                          " bits");
  }
  const double match = std::sqrt(spec.bias);
  const double flip = std::sqrt(1.0 - spec.bias);
  std::vector<double> by_distance(static_cast<std::size_t>(num_qubits) + 1);
  for (int d = 0; d <= num_qubits; ++d) {
    by_distance[d] = std::pow(match, num_qubits - d) * std::pow(flip, d);
  }
  std::vector<Amplitude> amps(dim);
  for (std::size_t g = 0; g < dim; ++g) {
    amps[g] = by_distance[hamming_distance(static_cast<Bits>(g), spec.target)];
  }
  return QuantumState::normalized(num_qubits, std::move(amps));
}

double ground_overlap(const QuantumState& state, const Spectrum& spectrum) {
  if (state.dim() != spectrum.dim()) {
    throw ValidationError("state dimension " + std::to_string(state.dim()) +
                          " does not match spectrum dimension " +
                          std::to_string(spectrum.dim()));
  }
  double overlap = 0.0;
  for (Bits g : spectrum.ground_set) overlap += std::norm(state.amplitude(g));
  return overlap;
}

double warm_overlap_closed_form(const std::vector<Bits>& ground_set, Bits target, double bias,
                                int num_qubits) {
  double overlap = 0.0;
  for (Bits g : ground_set) {
    const int d = hamming_distance(g, target);
    overlap += std::pow(bias, num_qubits - d) * std::pow(1.0 - bias, d);
  }
  return overlap;
}

}  // namespace fite
