// errors.hpp
// Exception taxonomy for the qops library. Each failure mode raised by a
// public operation maps to one of these types so callers (and tests) can
// distinguish a shape mismatch from, say, a convergence failure.

#pragma once

#include <stdexcept>
#include <string>

namespace qops {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/operator dimension mismatch (non-square where square required, etc.)
struct shape_error : error {
    using error::error;
};

// Requested result dimensions cannot be represented.
struct size_error : error {
    using error::error;
};

// Invalid argument value (bad index, empty set, nonpositive physical quantity).
struct argument_error : error {
    using error::error;
};

// Input expected to be Hermitian is not, within tolerance.
struct symmetry_error : error {
    using error::error;
};

// Iterative algorithm failed to reach its tolerance within the cap.
struct convergence_error : error {
    using error::error;
};

// Operator expected positive semidefinite has an eigenvalue below the floor.
struct positivity_error : error {
    using error::error;
};

// Measurement-operator set does not sum to identity.
struct completeness_error : error {
    using error::error;
};

// State vector or probability list is not normalized within tolerance.
struct normalization_error : error {
    using error::error;
};

// Simulation configuration violates its invariants.
struct config_error : error {
    using error::error;
};

}  // namespace qops
