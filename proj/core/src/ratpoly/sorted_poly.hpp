#pragma once

// Reduction engine shared by division and Buchberger. Terms are kept in
// ascending order under one monomial order so the leading term is back().

#include "maxtoric/ratpoly/polynomial.hpp"

#include <span>
#include <vector>

namespace maxtoric::ratpoly::detail {

struct Term {
    ExponentVector exps;
    Rational coef;
};

struct SortedPoly {
    std::vector<Term> terms;

    bool empty() const noexcept { return terms.empty(); }
    const Term& lead() const { return terms.back(); }
    const ExponentVector& lead_exps() const { return terms.back().exps; }
};

SortedPoly from_polynomial(const Polynomial& f, const MonomialOrder& ord);
Polynomial to_polynomial(const SortedPoly& p, const std::vector<std::string>& vars);

/// p - c * x^shift * g.
SortedPoly sub_scaled(const SortedPoly& p, const Rational& c, const ExponentVector& shift,
                      const SortedPoly& g, const MonomialOrder& ord);

void make_monic(SortedPoly& p);

/// Full reduction of p modulo the divisors (every term, not only the lead).
SortedPoly reduce(SortedPoly p, std::span<const SortedPoly* const> divisors,
                  const MonomialOrder& ord);

}  // namespace maxtoric::ratpoly::detail
