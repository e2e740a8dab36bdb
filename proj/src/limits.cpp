#include "fite/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "fite/errors.hpp"

namespace fite {

RegisterLimits& register_limits() {
  static RegisterLimits limits;
  return limits;
}

void apply_register_limit_env() {
  const char* raw = std::getenv("FINITE_MAX_QUBITS");
  if (raw == nullptr || *raw == '\0') return;
  int value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *ptr != '\0' || value < 1) {
    throw ValidationError(std::string("FINITE_MAX_QUBITS must be a positive integer, got '") +
                          raw + "'");
  }
  RegisterLimits& limits = register_limits();
  limits.max_system_qubits = value;
  limits.max_enum_qubits = value;
  limits.max_joint_qubits = value;
}

}  // namespace fite
