#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "fite/pauli_model.hpp"
#include "fite/state_prep.hpp"

namespace fite {

/// Parses a MaxCut graph file: one edge per line as `u v [weight]`, `#` to
/// end of line is a comment, blank lines ignored. Vertex count is the
/// largest index plus one. Diagnostics carry the 1-based line number.
PauliHamiltonian parse_graph_file(std::istream& in, const std::string& name);
PauliHamiltonian load_graph_file(const std::string& path);

/// Parses a Pauli-term instance:
///   {"n": int, "terms": [{"qubits": [ints], "coeff": float}, ...]}
/// Each entry is a Z-string term; an empty qubit list contributes to the
/// identity shift.
PauliHamiltonian parse_hubo_json(std::istream& in, const std::string& name);
PauliHamiltonian load_hubo_json(const std::string& path);

enum class InstanceType { kMaxCut, kHubo };

/// Loads by declared type, or by extension when unspecified (.json -> hubo).
PauliHamiltonian load_instance(const std::string& path, std::optional<InstanceType> type);

/// Initial-state request, as accepted by the CLI --init flag:
///   uniform | warm:p=<float>,gstar=<bits|auto> | file:<path>
struct InitUniform {};
struct InitWarm {
  double bias = 0.5;
  std::optional<Bits> target;  // empty means "auto": smallest ground bitstring
};
struct InitFile {
  std::string path;
};
using InitSpec = std::variant<InitUniform, InitWarm, InitFile>;

InitSpec parse_init_spec(const std::string& text, int num_qubits);

/// Resolves the spec to a concrete state. Warm starts with an auto target
/// need the spectrum; the auto rule picks the smallest ground bitstring
/// (deterministic tie-break).
QuantumState prepare_initial_state(const InitSpec& spec, int num_qubits,
                                   const Spectrum* spectrum);

/// Amplitude file: one `re im` pair per line, 2^n lines, `#` comments.
/// The vector is normalized on load.
QuantumState load_amplitude_file(const std::string& path, int num_qubits);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

}  // namespace fite
