#pragma once

#include <stdexcept>
#include <string>

namespace maxtoric {

/// Base of every error raised by the library. Each subclass names one
/// failure category so callers (the CLI in particular) can map it to an exit
/// status without parsing messages.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched lengths, variable lists or matrix shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Value outside the domain of an operation (negative exponent at zero,
/// nonpositive parameter, Laurent input where an ordinary polynomial is
/// required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial text or problem description.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Desk-scale guard tripped (alphabet too large for saturation, system too
/// large for the algebraic solver).
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// Target moments lie on or outside the moment polytope: the solver diverged
/// or ran out of iterations.
class InfeasibleMomentsError : public Error {
public:
    using Error::Error;
};

/// The feature covariance is singular for every distribution, i.e. the
/// constraints are affinely dependent.
class RankDeficiencyError : public Error {
public:
    using Error::Error;
};

/// Gröbner basis is not zero-dimensional or not triangular.
class UnsupportedStructureError : public Error {
public:
    using Error::Error;
};

}  // namespace maxtoric
