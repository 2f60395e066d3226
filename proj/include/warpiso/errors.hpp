#pragma once

#include <stdexcept>
#include <string>

namespace warpiso {

// Rejected inputs: bad parameters, violated preconditions, malformed files.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure: non-convergence, unresolvable cancellation, exhausted
// iteration budgets.  Messages carry enough context to reproduce the call.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace warpiso
