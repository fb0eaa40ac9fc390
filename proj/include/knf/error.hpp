#pragma once

#include <stdexcept>
#include <string>

namespace knf {

/// Base class for computation errors raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters outside the documented range (rank, domain index, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

/// The representation cannot be placed in weight -1 (shifted E(λ) not odd).
class ParityError : public Error {
public:
    using Error::Error;
};

/// A dimension or size guard was exceeded.
class GuardError : public Error {
public:
    using Error::Error;
};

}  // namespace knf
