#pragma once

#include <stdexcept>
#include <string>

namespace palcheck {

// Invalid input data: malformed files, violated invariants, unsupported
// parameters. Messages carry a path-style locator where one exists,
// e.g. "$.tuples[3][1]: unknown color label 'x'".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was asked to run outside its supported range and refuses
// rather than attempting it (e.g. exhaustive enumerations whose size
// exceeds the stated budget). The message states the required count.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace palcheck
