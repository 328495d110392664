#include "sorted_poly.hpp"

#include <algorithm>

namespace maxtoric::ratpoly::detail {

SortedPoly from_polynomial(const Polynomial& f, const MonomialOrder& ord) {
    SortedPoly p;
    p.terms.reserve(f.size());
    for (const auto& [e, c] : f.terms()) p.terms.push_back({e, c});
    std::sort(p.terms.begin(), p.terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare_unchecked(a.exps, b.exps) < 0;
    });
    return p;
}

Polynomial to_polynomial(const SortedPoly& p, const std::vector<std::string>& vars) {
    Polynomial f(vars);
    for (const auto& t : p.terms) f.add_term(t.exps, t.coef);
    return f;
}

SortedPoly sub_scaled(const SortedPoly& p, const Rational& c, const ExponentVector& shift,
                      const SortedPoly& g, const MonomialOrder& ord) {
    SortedPoly out;
    out.terms.reserve(p.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    ExponentVector shifted(shift.size());
    auto shifted_at = [&](std::size_t idx) -> const ExponentVector& {
        const auto& e = g.terms[idx].exps;
        for (std::size_t k = 0; k < e.size(); ++k) shifted[k] = e[k] + shift[k];
        return shifted;
    };
    while (i < p.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) {
            out.terms.push_back(p.terms[i++]);
            continue;
        }
        const auto& se = shifted_at(j);
        if (i == p.terms.size()) {
            out.terms.push_back({se, -c * g.terms[j].coef});
            ++j;
            continue;
        }
        const auto cmp = ord.compare_unchecked(p.terms[i].exps, se);
        if (cmp < 0) {
            out.terms.push_back(p.terms[i++]);
        } else if (cmp > 0) {
            out.terms.push_back({se, -c * g.terms[j].coef});
            ++j;
        } else {
            Rational v = p.terms[i].coef - c * g.terms[j].coef;
            if (v != 0) out.terms.push_back({p.terms[i].exps, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

void make_monic(SortedPoly& p) {
    if (p.empty()) return;
    const Rational lc = p.lead().coef;
    if (lc == 1) return;
    for (auto& t : p.terms) t.coef /= lc;
}

SortedPoly reduce(SortedPoly p, std::span<const SortedPoly* const> divisors,
                  const MonomialOrder& ord) {
    std::vector<Term> remainder_desc;
    while (!p.empty()) {
        const Term& lt = p.lead();
        const SortedPoly* hit = nullptr;
        for (const auto* g : divisors)
            if (!g->empty() && divides(g->lead_exps(), lt.exps)) {
                hit = g;
                break;
            }
        if (hit == nullptr) {
            remainder_desc.push_back(std::move(p.terms.back()));
            p.terms.pop_back();
            continue;
        }
        ExponentVector shift(lt.exps.size());
        for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = lt.exps[k] - hit->lead_exps()[k];
        const Rational c = lt.coef / hit->lead().coef;
        p = sub_scaled(p, c, shift, *hit, ord);
    }
    std::reverse(remainder_desc.begin(), remainder_desc.end());
    return {std::move(remainder_desc)};
}

}  // namespace maxtoric::ratpoly::detail
