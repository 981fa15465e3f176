#pragma once

#include <stdexcept>

namespace hstrace {

/// Malformed or inconsistent input: bad descriptors, out-of-range table
/// cells, mismatched groups between files. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed: non-idempotent complex entry,
/// enumeration of an infinite group, order bound exceeded. CLI exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hstrace
