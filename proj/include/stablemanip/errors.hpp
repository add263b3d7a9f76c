#ifndef STABLEMANIP_ERRORS_HPP_
#define STABLEMANIP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace stablemanip {

// Malformed or out-of-range input (bad ids, mismatched sizes, bad files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rule / manipulator-count combination with no decider behind it.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stablemanip

#endif  // STABLEMANIP_ERRORS_HPP_
