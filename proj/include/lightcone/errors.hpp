#pragma once

#include <stdexcept>
#include <string>

namespace lightcone {

// Base of every error the library throws. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x <= 0 for K1,
// negative radius, t == y0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Iterative numerics (acceleration, extrapolation, root finding) did not reach
// the requested tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Evaluation requested inside the excluded light-cone band, or closer to it
// than a finite-difference stencil allows.
class LightconeBandError : public Error {
public:
    using Error::Error;
};

// Malformed configuration or unknown identifiers.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace lightcone
