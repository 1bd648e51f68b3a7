#pragma once

#include <stdexcept>

namespace farq {

// Thrown where an algorithm is exponential in some dimension and the instance
// exceeds the configured cap; refusing beats silently grinding.
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace farq
