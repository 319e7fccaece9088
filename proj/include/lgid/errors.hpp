#pragma once

#include <stdexcept>
#include <string>

namespace lgid {

// Argument outside the real domain an evaluator supports.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation at a pole (s = 1 for the zeta family).
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Structurally invalid arguments: non-coprime pairs, vanishing denominators.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_degree : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Quadrature or summation failed to reach its target tolerance.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unknown_id : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace lgid
