#include "maxtoric/ratpoly/polynomial.hpp"

#include "maxtoric/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxtoric::ratpoly {

Polynomial::Polynomial(std::vector<std::string> vars, bool laurent)
    : vars_(std::move(vars)), laurent_(laurent) {}

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c, bool laurent) {
    Polynomial p(std::move(vars), laurent);
    p.add_term(ExponentVector(p.num_vars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw DimensionError("variable index out of range");
    Polynomial p(std::move(vars));
    ExponentVector e(p.num_vars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, ExponentVector exps,
                                const Rational& c) {
    const bool negative = std::any_of(exps.begin(), exps.end(), [](auto x) { return x < 0; });
    Polynomial p(std::move(vars), negative);
    p.add_term(exps, c);
    return p;
}

void Polynomial::check_exponents(const ExponentVector& exps) const {
    if (exps.size() != vars_.size())
        throw DimensionError("exponent vector of length " + std::to_string(exps.size()) +
                             " in a ring of " + std::to_string(vars_.size()) + " variables");
    if (!laurent_)
        for (auto e : exps)
            if (e < 0) throw DomainError("negative exponent in an ordinary polynomial");
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (vars_ != other.vars_) throw DimensionError("polynomials over different variable lists");
}

void Polynomial::add_term(const ExponentVector& exps, const Rational& c) {
    check_exponents(exps);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](auto e) { return e == 0; });
}

bool Polynomial::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        for (auto x : e)
            if (x < 0) return true;
    return false;
}

Polynomial Polynomial::with_laurent(bool laurent) const {
    if (!laurent && has_negative_exponent())
        throw DomainError("polynomial has negative exponents; clear denominators first");
    Polynomial p = *this;
    p.laurent_ = laurent;
    return p;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, ratpoly::total_degree(e));
    return d;
}

std::int32_t Polynomial::degree_in(std::size_t var) const {
    std::int32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

Rational Polynomial::coefficient(const ExponentVector& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial::Term Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    if (ord.num_vars() != vars_.size())
        throw DimensionError("monomial order and polynomial disagree on variable count");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return *best;
}

std::vector<Polynomial::Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
    if (ord.num_vars() != vars_.size())
        throw DimensionError("monomial order and polynomial disagree on variable count");
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
    return out;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw DimensionError("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) {
                if (point[k] == 0 && e[k] < 0)
                    throw DomainError("negative exponent of " + vars_[k] + " evaluated at 0");
                t *= maxtoric::pow(point[k], e[k]);
            }
        sum += t;
    }
    return sum;
}

double Polynomial::eval(std::span<const double> point) const {
    if (point.size() != vars_.size()) throw DimensionError("evaluation point has wrong length");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) {
                if (point[k] == 0.0 && e[k] < 0)
                    throw DomainError("negative exponent of " + vars_[k] + " evaluated at 0");
                t *= std::pow(point[k], e[k]);
            }
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw DimensionError("derivative variable out of range");
    Polynomial d(vars_, laurent_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExponentVector de = e;
        de[var] -= 1;
        d.terms_.emplace(std::move(de), c * e[var]);
    }
    return d;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    const Rational lc = leading_term(ord).second;
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c /= lc;
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_compatible(rhs);
    laurent_ = laurent_ || rhs.laurent_;
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_compatible(rhs);
    laurent_ = laurent_ || rhs.laurent_;
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check_compatible(rhs);
    Polynomial out(lhs.vars_, lhs.laurent_ || rhs.laurent_);
    ExponentVector e(lhs.num_vars());
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

LaurentClearing laurent_clear(const Polynomial& f) {
    ExponentVector shift(f.num_vars(), 0);
    for (const auto& [e, c] : f.terms())
        for (std::size_t k = 0; k < e.size(); ++k) shift[k] = std::max(shift[k], -e[k]);
    Polynomial g(f.vars());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector ge = e;
        for (std::size_t k = 0; k < ge.size(); ++k) ge[k] += shift[k];
        g.add_term(ge, c);
    }
    return {std::move(shift), std::move(g)};
}

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

}  // namespace maxtoric::ratpoly
