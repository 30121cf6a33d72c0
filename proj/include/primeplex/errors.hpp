#pragma once

#include <stdexcept>
#include <string>

namespace primeplex {

/// A request exceeded a configured size or memory bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The root finder did not reach the requested residual.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primeplex
