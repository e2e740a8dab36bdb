#pragma once

#include <stdexcept>

namespace fite {

/// Invalid user input: malformed instance files, out-of-range indices or
/// parameters, mismatched register sizes.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A register or enumeration cap would be exceeded (dense statevectors and
/// spectra are allocated as full 2^n arrays).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fite
