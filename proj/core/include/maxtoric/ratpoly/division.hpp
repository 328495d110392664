#pragma once

#include "maxtoric/ratpoly/polynomial.hpp"

#include <span>
#include <vector>

namespace maxtoric::ratpoly {

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, and no
/// term of the remainder is divisible by a leading term of a divisor.
/// Divisors are tried in the given order. Throws ArgumentError for an empty
/// list or a zero divisor, DomainError for Laurent input, DimensionError for
/// mismatched variables.
DivisionResult multivariate_divide(const Polynomial& f, std::span<const Polynomial> divisors,
                                   const MonomialOrder& ord);

/// Remainder of multivariate_divide() without building quotients.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& ord);

}  // namespace maxtoric::ratpoly
