#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

enum class ErrorCode {
  InvalidArgument,  // malformed input: bad word, bad modulus, index out of range
  NotPrime,         // an operation that needs a field got a composite modulus
  Incompatible,     // spec/matrix mismatch or non-uniform spec
  Budget,           // enumeration would exceed the configured state cap
  Arithmetic,       // an exact division left a remainder
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbitlab
