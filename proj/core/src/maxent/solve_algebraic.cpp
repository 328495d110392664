#include "maxtoric/maxent/solve_algebraic.hpp"

#include "maxtoric/error.hpp"
#include "maxtoric/maxent/root_isolation.hpp"
#include "maxtoric/ratpoly/groebner.hpp"

#include <algorithm>

namespace maxtoric::maxent {

using ratpoly::MonomialOrder;
using ratpoly::Polynomial;

namespace {

struct Partial {
    std::vector<double> value;
    std::vector<Rational> approx;
    std::vector<bool> exact;
};

// Univariate coefficients of f in variable `var` after substituting the
// rational values of the already solved variables.
std::vector<Rational> substitute(const Polynomial& f, std::size_t var,
                                 const std::vector<Rational>& values,
                                 const std::vector<bool>& known) {
    std::vector<Rational> dense(static_cast<std::size_t>(f.degree_in(var)) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k == var || e[k] == 0) continue;
            if (!known[k]) throw UnsupportedStructureError("basis is not triangular");
            t *= maxtoric::pow(values[k], e[k]);
        }
        dense[static_cast<std::size_t>(e[var])] += t;
    }
    return dense;
}

}  // namespace

std::vector<AlgebraicSolution> solve_algebraic(std::span<const Polynomial> equations,
                                               const MonomialOrder& order) {
    if (equations.empty()) throw ArgumentError("solve_algebraic: empty system");
    const auto& vars = equations.front().vars();
    const std::size_t n = vars.size();
    for (const auto& eq : equations) {
        if (eq.vars() != vars) throw DimensionError("equations over different variable lists");
        if (eq.has_negative_exponent())
            throw DomainError("Laurent equation; clear denominators first");
    }
    if (equations.size() != n)
        throw ArgumentError("solve_algebraic needs as many equations as variables (" +
                            std::to_string(equations.size()) + " vs " + std::to_string(n) + ")");
    if (n > kMaxAlgebraicVars)
        throw SizeLimitError("algebraic solving is limited to " +
                             std::to_string(kMaxAlgebraicVars) + " variables");
    for (const auto& eq : equations)
        if (eq.total_degree() > kMaxAlgebraicDegree)
            throw SizeLimitError("algebraic solving is limited to total degree " +
                                 std::to_string(kMaxAlgebraicDegree));
    if (order.num_vars() != n) throw DimensionError("order and equations disagree on variable count");

    std::vector<Polynomial> seed(equations.begin(), equations.end());
    if (order.kind() != MonomialOrder::Kind::lex) {
        auto first = ratpoly::buchberger(seed, order);
        if (first.is_unit()) return {};
        seed = first.basis();
    }
    const MonomialOrder lex(MonomialOrder::Kind::lex, order.priority());
    const auto gb = ratpoly::buchberger(seed, lex);
    if (gb.is_unit()) return {};
    if (gb.is_zero_ideal() || !gb.is_zero_dimensional())
        throw UnsupportedStructureError("solution set is not zero-dimensional");

    // Triangular shape: one element per variable, led by a pure power of it.
    std::vector<const Polynomial*> by_level(n, nullptr);
    for (const auto& g : gb.basis()) {
        const auto lm = g.leading_term(lex).first;
        std::size_t level = n;
        for (std::size_t k = 0; k < n; ++k)
            if (lm[order.priority()[k]] != 0) {
                level = k;
                break;
            }
        const auto nonzero = std::count_if(lm.begin(), lm.end(), [](auto e) { return e != 0; });
        if (level == n || nonzero != 1 || by_level[level] != nullptr)
            throw UnsupportedStructureError("lex basis is not triangular");
        by_level[level] = &g;
    }
    if (gb.size() != n) throw UnsupportedStructureError("lex basis is not triangular");

    std::vector<Partial> partials{
        {std::vector<double>(n, 0.0), std::vector<Rational>(n), std::vector<bool>(n, false)}};
    std::vector<bool> known(n, false);
    for (std::size_t level = n; level-- > 0;) {
        const std::size_t var = order.priority()[level];
        std::vector<Partial> next;
        for (const auto& part : partials) {
            const auto coeffs = substitute(*by_level[level], var, part.approx, known);
            const bool inputs_exact = std::all_of(
                order.priority().begin() + static_cast<std::ptrdiff_t>(level) + 1,
                order.priority().end(), [&](std::size_t v) { return part.exact[v]; });
            for (const auto& root : positive_real_roots(coeffs)) {
                Partial ext = part;
                ext.value[var] = root.value;
                ext.exact[var] = inputs_exact && root.exact.has_value();
                ext.approx[var] = root.exact ? *root.exact : Rational((root.lower + root.upper) / 2);
                next.push_back(std::move(ext));
            }
        }
        partials = std::move(next);
        known[var] = true;
    }

    std::vector<AlgebraicSolution> out;
    for (auto& part : partials) {
        AlgebraicSolution s{std::move(part.value), std::nullopt};
        if (std::all_of(part.exact.begin(), part.exact.end(), [](bool b) { return b; }))
            s.exact = std::move(part.approx);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<AlgebraicSolution> solve_algebraic(const PolySystem& system,
                                               const MonomialOrder& order) {
    return solve_algebraic(std::span<const Polynomial>(system.cleared), order);
}

}  // namespace maxtoric::maxent
