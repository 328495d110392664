#include "maxtoric/ratpoly/division.hpp"

#include "maxtoric/error.hpp"
#include "sorted_poly.hpp"

#include <algorithm>

namespace maxtoric::ratpoly {

namespace {

void validate(const Polynomial& f, std::span<const Polynomial> divisors,
              const MonomialOrder& ord) {
    if (divisors.empty()) throw ArgumentError("division by an empty divisor list");
    if (ord.num_vars() != f.num_vars())
        throw DimensionError("monomial order and dividend disagree on variable count");
    if (f.has_negative_exponent())
        throw DomainError("division of a Laurent polynomial; clear denominators first");
    for (const auto& g : divisors) {
        if (g.vars() != f.vars()) throw DimensionError("divisor over a different variable list");
        if (g.is_zero()) throw ArgumentError("zero divisor");
        if (g.has_negative_exponent())
            throw DomainError("Laurent divisor; clear denominators first");
    }
}

}  // namespace

DivisionResult multivariate_divide(const Polynomial& f, std::span<const Polynomial> divisors,
                                   const MonomialOrder& ord) {
    validate(f, divisors, ord);
    std::vector<detail::SortedPoly> gs;
    gs.reserve(divisors.size());
    for (const auto& g : divisors) gs.push_back(detail::from_polynomial(g, ord));

    DivisionResult out;
    out.quotients.assign(divisors.size(), Polynomial(f.vars()));
    std::vector<detail::Term> remainder_desc;
    auto p = detail::from_polynomial(f, ord);
    while (!p.empty()) {
        const auto& lt = p.lead();
        auto hit = std::find_if(gs.begin(), gs.end(),
                                [&](const auto& g) { return divides(g.lead_exps(), lt.exps); });
        if (hit == gs.end()) {
            remainder_desc.push_back(std::move(p.terms.back()));
            p.terms.pop_back();
            continue;
        }
        ExponentVector shift(lt.exps.size());
        for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = lt.exps[k] - hit->lead_exps()[k];
        const Rational c = lt.coef / hit->lead().coef;
        out.quotients[static_cast<std::size_t>(hit - gs.begin())].add_term(shift, c);
        p = detail::sub_scaled(p, c, shift, *hit, ord);
    }
    out.remainder = Polynomial(f.vars());
    for (const auto& t : remainder_desc) out.remainder.add_term(t.exps, t.coef);
    return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& ord) {
    validate(f, divisors, ord);
    std::vector<detail::SortedPoly> gs;
    std::vector<const detail::SortedPoly*> ptrs;
    gs.reserve(divisors.size());
    for (const auto& g : divisors) gs.push_back(detail::from_polynomial(g, ord));
    for (const auto& g : gs) ptrs.push_back(&g);
    return detail::to_polynomial(detail::reduce(detail::from_polynomial(f, ord), ptrs, ord),
                                 f.vars());
}

}  // namespace maxtoric::ratpoly
