#pragma once

#include <stdexcept>
#include <string>

namespace dwigner {

// Thrown when a request exceeds a hard resource budget (dense path for
// n > 6, enumeration of more than 2^24 sign assignments, n > 12 fields).
// The CLI maps this to exit code 3.
class capability_error : public std::runtime_error {
  public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dwigner
