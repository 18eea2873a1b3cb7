#pragma once

#include <stdexcept>
#include <string>

namespace egc {

// Bad arguments: out-of-range vertices, malformed maps, size mismatches.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A materialization or enumeration bound was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical guarantee did not hold. Either a caller assertion was false
// or there is a bug; never expected in correct use.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace egc
