#pragma once

#include <stdexcept>
#include <string>

namespace spikeauct {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A domain invariant does not hold: bad vector contents, empty inputs,
/// out-of-range parameters. The message names the violated invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Two arguments that must agree in length do not.
struct DimensionError : ValidationError {
    using ValidationError::ValidationError;
};

/// Capacity parameters admit no feasible gap vector.
struct FeasibilityError : ValidationError {
    using ValidationError::ValidationError;
};

/// Arguments that must come from the same mechanism run do not match.
struct ConsistencyError : ValidationError {
    using ValidationError::ValidationError;
};

/// The requested routine does not apply to this instance; a different
/// routine must be used (e.g. the general solver instead of the closed form).
struct RegimeError : Error {
    using Error::Error;
};

/// Closed-form routines require non-increasing coefficients.
struct MonotonicityError : RegimeError {
    using RegimeError::RegimeError;
};

/// Every gap already carries a positive lower bound; capacity cannot grow.
struct CapacityExhaustedError : RegimeError {
    using RegimeError::RegimeError;
};

/// All coefficients are equal, so no capacity threshold exists.
struct NoThresholdError : RegimeError {
    using RegimeError::RegimeError;
};

/// A scenario file could not be read or decoded.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace spikeauct
