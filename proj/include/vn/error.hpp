#pragma once
#include <stdexcept>
#include <string>

namespace vn {

// Thrown on invalid input or broken preconditions. The CLI maps this to
// exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vn
