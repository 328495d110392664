#pragma once

#include "maxtoric/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace maxtoric::maxent {

/// Positive real root of a univariate polynomial, bracketed by rationals.
struct RealRoot {
    Rational lower;
    Rational upper;
    double value = 0.0;
    /// Set when the root was identified exactly.
    std::optional<Rational> exact;
};

/// Isolates every positive real root of sum_k coeffs[k] x^k using Sturm
/// counts on the square-free part, then refines each by sign bisection in
/// exact arithmetic until the bracket is narrower than `width`. A root is
/// reported exact when it is hit during bisection or when the simplest
/// rational inside the final bracket is a root. Roots are ascending.
/// Throws ArgumentError for the zero polynomial.
std::vector<RealRoot> positive_real_roots(std::span<const Rational> coeffs, double width = 1e-14);

/// Simplest rational (smallest denominator) in [lo, hi], 0 < lo <= hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace maxtoric::maxent
