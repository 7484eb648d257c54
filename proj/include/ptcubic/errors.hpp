#pragma once

#include <stdexcept>
#include <string>

namespace ptcubic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: out-of-range parameter, unknown model, malformed literal.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation finished but produced something it must not silently pass on:
/// non-convergence, a Padé pole on the grid, a broken identity.
class ComputationAnomaly : public Error {
public:
    using Error::Error;
};

}  // namespace ptcubic
