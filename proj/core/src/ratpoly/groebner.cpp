#include "maxtoric/ratpoly/groebner.hpp"

#include "maxtoric/error.hpp"
#include "maxtoric/ratpoly/division.hpp"
#include "sorted_poly.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace maxtoric::ratpoly {

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> basis, MonomialOrder order)
    : basis_(std::move(basis)), order_(std::move(order)) {}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
    if (basis_.empty()) return f;
    return normal_form(f, basis_, order_);
}

bool GroebnerBasis::is_zero_dimensional() const {
    if (is_unit()) return true;
    const std::size_t n = order_.num_vars();
    std::vector<bool> has_pure_power(n, false);
    for (const auto& g : basis_) {
        const auto lm = g.leading_term(order_).first;
        std::size_t nonzero = 0, var = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (lm[k] != 0) {
                ++nonzero;
                var = k;
            }
        if (nonzero == 1) has_pure_power[var] = true;
    }
    return std::all_of(has_pure_power.begin(), has_pure_power.end(), [](bool b) { return b; });
}

namespace {

ExponentVector difference(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

detail::SortedPoly spoly(const detail::SortedPoly& f, const detail::SortedPoly& g,
                         const MonomialOrder& ord) {
    const auto l = lcm(f.lead_exps(), g.lead_exps());
    detail::SortedPoly zero;
    auto a = detail::sub_scaled(zero, -1 / f.lead().coef, difference(l, f.lead_exps()), f, ord);
    return detail::sub_scaled(a, 1 / g.lead().coef, difference(l, g.lead_exps()), g, ord);
}

bool is_constant(const detail::SortedPoly& p) {
    return p.terms.size() == 1 &&
           std::all_of(p.lead_exps().begin(), p.lead_exps().end(), [](auto e) { return e == 0; });
}

struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.vars() != g.vars()) throw DimensionError("S-polynomial of different rings");
    if (f.is_zero() || g.is_zero()) throw ArgumentError("S-polynomial of the zero polynomial");
    if (f.has_negative_exponent() || g.has_negative_exponent())
        throw DomainError("S-polynomial of a Laurent polynomial");
    if (ord.num_vars() != f.num_vars())
        throw DimensionError("monomial order and polynomials disagree on variable count");
    return detail::to_polynomial(
        spoly(detail::from_polynomial(f, ord), detail::from_polynomial(g, ord), ord), f.vars());
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord) {
    if (gens.empty()) throw ArgumentError("Gröbner basis of an empty generator list");
    const auto& vars = gens.front().vars();
    if (ord.num_vars() != vars.size())
        throw DimensionError("monomial order and generators disagree on variable count");
    for (const auto& g : gens) {
        if (g.vars() != vars) throw DimensionError("generators over different variable lists");
        if (g.has_negative_exponent())
            throw DomainError("Laurent generator; clear denominators first");
    }

    const auto unit = [&] {
        return GroebnerBasis({Polynomial::constant(vars, 1)}, ord);
    };

    std::vector<detail::SortedPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto p = detail::from_polynomial(g, ord);
        detail::make_monic(p);
        if (is_constant(p)) return unit();
        basis.push_back(std::move(p));
    }
    if (basis.empty()) return GroebnerBasis({}, ord);

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto add_pairs_for = [&](std::size_t t) {
        for (std::size_t k = 0; k < t; ++k) {
            pending.push_back({k, t, lcm(basis[k].lead_exps(), basis[t].lead_exps())});
            pending_keys.emplace(k, t);
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) add_pairs_for(t);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending_keys.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    std::vector<const detail::SortedPoly*> divisors;
    while (!pending.empty()) {
        // Normal strategy: smallest lcm first; earlier pairs win ties.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (ord.compare_unchecked(pending[k].lcm, pending[best].lcm) < 0) best = k;
        const Pair pair = std::move(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        pending_keys.erase({pair.i, pair.j});

        // First criterion: coprime leading monomials reduce to zero.
        if (coprime(basis[pair.i].lead_exps(), basis[pair.j].lead_exps())) continue;

        // Second (chain) criterion.
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == pair.i || k == pair.j) continue;
            chain = divides(basis[k].lead_exps(), pair.lcm) && !is_pending(pair.i, k) &&
                    !is_pending(pair.j, k);
        }
        if (chain) continue;

        divisors.clear();
        for (const auto& g : basis) divisors.push_back(&g);
        auto r = detail::reduce(spoly(basis[pair.i], basis[pair.j], ord), divisors, ord);
        if (r.empty()) continue;
        detail::make_monic(r);
        if (is_constant(r)) return unit();
        basis.push_back(std::move(r));
        add_pairs_for(basis.size() - 1);
    }

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's (keep the first of equal leading monomials).
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !divides(basis[j].lead_exps(), basis[i].lead_exps())) continue;
            keep[i] = basis[j].lead_exps() == basis[i].lead_exps() && i < j;
        }
    std::vector<detail::SortedPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Interreduce tails; leading monomials are fixed so one pass suffices.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        divisors.clear();
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) divisors.push_back(&minimal[j]);
        detail::Term lead = minimal[i].terms.back();
        minimal[i].terms.pop_back();
        auto tail = detail::reduce(std::move(minimal[i]), divisors, ord);
        tail.terms.push_back(std::move(lead));
        minimal[i] = std::move(tail);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
        return ord.greater(a.lead_exps(), b.lead_exps());
    });

    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const auto& p : minimal) out.push_back(detail::to_polynomial(p, vars));
    return GroebnerBasis(std::move(out), ord);
}

}  // namespace maxtoric::ratpoly
