#pragma once

#include <stdexcept>
#include <string>

namespace tutte {

/// Malformed graph, bad parameter, or violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation exceeded a configured or hard resource limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A random generator gave up before producing a valid sample.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tutte
