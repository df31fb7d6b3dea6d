#pragma once

#include <stdexcept>
#include <string>

namespace otfkm {

// Two independent computations of the same quantity disagreed beyond their
// documented tolerance.  The CLI maps this to its own exit code, separate
// from ordinary check failures.
class NumericalIntegrityError : public std::runtime_error {
 public:
  explicit NumericalIntegrityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A point handed to an operation no longer satisfies the level-set condition
// of the family it claims to live on.
class StalePointError : public std::runtime_error {
 public:
  explicit StalePointError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace otfkm
