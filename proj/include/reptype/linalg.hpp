#pragma once

#include <vector>

#include "reptype/arith.hpp"

namespace reptype {

// Gauss-Jordan over the rationals. Solves A y = b in place (b becomes y).
// Returns false when A is singular.
bool solve_linear(std::vector<std::vector<Rat>>& A, std::vector<Rat>& b);

}  // namespace reptype
