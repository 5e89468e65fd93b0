#pragma once

#include <stdexcept>
#include <string>

namespace spindec {

// Base class so callers can catch every domain error with one handler.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveParameter : Error {
    explicit NonPositiveParameter(const std::string& field)
        : Error("parameter must be positive: " + field), field(field) {}
    std::string field;
};

struct NonFiniteParameter : Error {
    explicit NonFiniteParameter(const std::string& field)
        : Error("parameter must be finite: " + field), field(field) {}
    std::string field;
};

struct NonNegativeTimeRequired : Error {
    NonNegativeTimeRequired() : Error("scaled time must be >= 0") {}
};

struct DiagonalPairRejected : Error {
    DiagonalPairRejected() : Error("operation requires an off-diagonal spin pair") {}
};

struct NoDecoherence : Error {
    explicit NoDecoherence(const std::string& why) : Error("no decoherence: " + why) {}
};

struct UnnormalizedSpinState : Error {
    UnnormalizedSpinState() : Error("spin amplitudes must satisfy |a|^2+|b|^2 = 1") {}
};

struct InsufficientSamples : Error {
    explicit InsufficientSamples(const std::string& why)
        : Error("insufficient samples: " + why) {}
};

struct PeaksNotResolved : Error {
    explicit PeaksNotResolved(const std::string& why)
        : Error("peaks not resolved: " + why) {}
};

struct QuadratureNotConverged : Error {
    explicit QuadratureNotConverged(const std::string& why)
        : Error("quadrature not converged: " + why) {}
};

struct CflViolation : Error {
    explicit CflViolation(double cfl)
        : Error("CFL number " + std::to_string(cfl) + " exceeds 0.9"), cfl(cfl) {}
    double cfl;
};

struct DomainTooSmall : Error {
    explicit DomainTooSmall(double boundary_mass)
        : Error("boundary density " + std::to_string(boundary_mass) + " exceeds 1e-9"),
          boundary_mass(boundary_mass) {}
    double boundary_mass;
};

struct ParseError : Error {
    ParseError(int line, const std::string& what_failed)
        : Error("parse error at line " + std::to_string(line) + ": " + what_failed),
          line(line) {}
    int line;
};

struct InvalidValue : Error {
    explicit InvalidValue(const std::string& key)
        : Error("invalid value for: " + key), key(key) {}
    std::string key;
};

struct IoError : Error {
    explicit IoError(const std::string& what_failed) : Error("io error: " + what_failed) {}
};

}  // namespace spindec
