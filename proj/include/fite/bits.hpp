#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "fite/errors.hpp"

namespace fite {

/// Computational-basis index. Qubit i is bit i (LSB = qubit 0).
using Bits = std::uint64_t;

inline constexpr Bits kBitsOne = 1;

inline int popcount(Bits x) { return std::popcount(x); }

/// +1 for even parity of the set bits, -1 for odd.
inline double parity_sign(Bits x) { return (std::popcount(x) & 1) ? -1.0 : 1.0; }

inline int get_bit(Bits x, int index) { return static_cast<int>((x >> index) & kBitsOne); }

inline Bits bit_mask(int index) { return kBitsOne << index; }

inline int hamming_distance(Bits a, Bits b) { return std::popcount(a ^ b); }

/// Renders an n-qubit basis index as a binary string, most significant qubit
/// first, so the rightmost character is qubit 0.
inline std::string format_bits(Bits x, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if (get_bit(x, q)) s[static_cast<std::size_t>(num_qubits - 1 - q)] = '1';
  }
  return s;
}

/// Parses the string form produced by format_bits.
inline Bits parse_bits(const std::string& s, int num_qubits) {
  if (static_cast<int>(s.size()) != num_qubits) {
    throw ValidationError("bitstring '" + s + "' does not have " + std::to_string(num_qubits) +
                          " bits");
  }
  Bits x = 0;
  for (int q = 0; q < num_qubits; ++q) {
    char c = s[static_cast<std::size_t>(num_qubits - 1 - q)];
    if (c == '1') {
      x |= bit_mask(q);
    } else if (c != '0') {
      throw ValidationError("bitstring '" + s + "' contains a character other than 0/1");
    }
  }
  return x;
}

}  // namespace fite
