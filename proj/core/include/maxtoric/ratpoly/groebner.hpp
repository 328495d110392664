#pragma once

#include "maxtoric/ratpoly/polynomial.hpp"

#include <span>
#include <vector>

namespace maxtoric::ratpoly {

/// Reduced Gröbner basis: monic elements sorted by leading monomial
/// (largest first), no term of any element divisible by another element's
/// leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> basis, MonomialOrder order);

    const std::vector<Polynomial>& basis() const noexcept { return basis_; }
    const MonomialOrder& order() const noexcept { return order_; }
    std::size_t size() const noexcept { return basis_.size(); }

    /// The ideal is the whole ring.
    bool is_unit() const;
    /// The ideal is zero (no generators).
    bool is_zero_ideal() const noexcept { return basis_.empty(); }

    Polynomial reduce(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

    /// Zero-dimensional test: every variable has a pure power among the
    /// leading monomials.
    bool is_zero_dimensional() const;

private:
    std::vector<Polynomial> basis_;
    MonomialOrder order_;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Buchberger's algorithm with the normal selection strategy (pair with the
/// smallest lcm of leading monomials first) and both of Buchberger's
/// criteria for discarding pairs. Zero generators are ignored. Requires
/// ordinary polynomials over one variable list; throws ArgumentError on an
/// empty list, DomainError on Laurent input.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord);

}  // namespace maxtoric::ratpoly
