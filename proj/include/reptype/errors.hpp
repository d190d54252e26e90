#pragma once

#include <stdexcept>

namespace reptype {

// Bad input data (malformed relation, cyclic covers, invalid labels...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exponential scan was asked to run past its configured size cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace reptype
