#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Error taxonomy shared by all modules.  The CLI maps UsageError to exit
// code 2 and everything else derived from Error to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatches: incompatible dimensions, oversized tensor products.
struct DimensionError : Error {
    using Error::Error;
};

// Parameter out of its mathematical domain (lambda outside [0,1], ...).
struct DomainError : Error {
    using Error::Error;
};

// A matrix that fails the density-matrix contract (trace, Hermiticity, PSD).
struct StateError : Error {
    using Error::Error;
};

// Numerical breakdown: eigensolver non-convergence, out-of-range results.
struct NumericError : Error {
    using Error::Error;
};

// Requested a PSD-only operation on a matrix with a negative eigenvalue.
struct NotPsdError : NumericError {
    using NumericError::NumericError;
};

// Malformed CLI invocation or config file.
struct UsageError : Error {
    using Error::Error;
};

} // namespace qcorr
