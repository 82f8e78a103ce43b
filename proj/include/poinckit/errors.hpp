#pragma once

#include <stdexcept>
#include <string>

namespace poinckit {

// Invalid inputs or violated preconditions.
struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation that could not be carried out (non-convergence, singular
// systems, non-finite values). Mathematical outcomes such as moment blow-up
// or integral divergence are reported through flags, not exceptions.
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace poinckit
