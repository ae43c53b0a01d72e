#pragma once

#include <stdexcept>

namespace klcells {

/// Malformed input or a violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A degree or size beyond the configured limit.
class BoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Cache or export file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klcells
