#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

// Precondition violations and malformed inputs. The CLI maps this to exit
// code 2; semantic failures (an invalid family, a FAIL row) use exit code 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kappa
