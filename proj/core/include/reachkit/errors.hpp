#pragma once

#include <stdexcept>

namespace reachkit {

// Base class for all reachkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed parameters or violated preconditions. The CLI maps this to a
// usage error (exit code 2).
struct InvalidArgument : Error {
    using Error::Error;
};

// The parameters fail a feasibility condition the operation requires.
struct Infeasible : Error {
    using Error::Error;
};

// The operation is undefined for the given parameters, as opposed to
// failing a check that could have gone either way. Example: manifold
// bounds with delta > eps.
struct Inapplicable : Error {
    using Error::Error;
};

// Geometric degeneracy: affinely dependent points and the like.
struct Degenerate : Error {
    using Error::Error;
};

// A configured resource cap (point count, simplex count, grid size) was hit.
struct ResourceLimit : Error {
    using Error::Error;
};

// The sampling density is too coarse for the requested verification; the
// message names the bound the caller must meet.
struct DensityTooCoarse : Error {
    using Error::Error;
};

// Parse or serialization failure.
struct IoError : Error {
    using Error::Error;
};

}
