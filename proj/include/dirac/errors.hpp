#ifndef DIRAC_ERRORS_HPP
#define DIRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirac {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed generator parameters.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// Input outside the supported surface (raw-matrix transforms without a
/// generator lineage, massless spinor requests).
struct UnsupportedInputError : Error {
    using Error::Error;
};

/// Operation invoked on values that violate its stated precondition,
/// e.g. a picture conversion applied to the wrong picture.
struct PreconditionError : Error {
    using Error::Error;
};

/// Input data violates a structural invariant; the message names the
/// invariant (e.g. the mass-shell condition).
struct ValidationError : Error {
    using Error::Error;
};

/// Malformed input text (JSON field specs, flag payloads).
struct ParseError : Error {
    using Error::Error;
};

/// A numerical procedure failed to converge.
struct NumericError : Error {
    using Error::Error;
};

} // namespace dirac

#endif
