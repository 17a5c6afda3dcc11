#pragma once

#include <stdexcept>
#include <string>

namespace cfhom {

/// Raised for malformed input and violated preconditions. The message is
/// meant for end users and names the offending degree, field or parameter.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cfhom
