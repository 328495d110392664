#pragma once

#include "maxtoric/rational.hpp"
#include "maxtoric/ratpoly/monomial_order.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maxtoric::ratpoly {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms live in a map keyed by exponent vector; zero coefficients are never
/// stored, so two polynomials over the same variables are equal exactly when
/// their term maps are. The `laurent` flag admits negative exponents; it is
/// not part of equality.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;
    using Term = std::pair<ExponentVector, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars, bool laurent = false);

    static Polynomial constant(std::vector<std::string> vars, const Rational& c,
                               bool laurent = false);
    static Polynomial variable(std::vector<std::string> vars, std::size_t index);
    /// Laurent flag is set when `exps` has a negative entry.
    static Polynomial monomial(std::vector<std::string> vars, ExponentVector exps,
                               const Rational& c = 1);

    /// Adds c·x^exps, dropping the term if the coefficient cancels.
    void add_term(const ExponentVector& exps, const Rational& c);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::size_t num_vars() const noexcept { return vars_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_laurent() const noexcept { return laurent_; }
    /// True for a nonzero polynomial whose only term is the constant one.
    bool is_constant() const;

    /// Same terms with the flag changed. Dropping the flag while a negative
    /// exponent is present throws DomainError.
    Polynomial with_laurent(bool laurent) const;
    bool has_negative_exponent() const;

    /// Largest total degree over all terms; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    /// Largest exponent of one variable; 0 for the zero polynomial.
    std::int32_t degree_in(std::size_t var) const;

    Rational coefficient(const ExponentVector& exps) const;

    /// Throws DomainError on the zero polynomial.
    Term leading_term(const MonomialOrder& ord) const;
    /// Terms sorted by `ord`, largest first.
    std::vector<Term> sorted_terms(const MonomialOrder& ord) const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    Polynomial derivative(std::size_t var) const;
    /// Divides every coefficient by the leading coefficient under `ord`.
    Polynomial monic(const MonomialOrder& ord) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Polynomial& other) const;
    void check_exponents(const ExponentVector& exps) const;

    std::vector<std::string> vars_;
    TermMap terms_;
    bool laurent_ = false;
};

/// Shift that turns a Laurent polynomial into an ordinary one.
struct LaurentClearing {
    ExponentVector multiplier;
    Polynomial cleared;
};

/// Multiplies `f` by the smallest monomial x^s making every exponent
/// nonnegative, s_k = max(0, -min exponent of x_k). The result is ordinary and
/// has the same zeros as `f` in the positive orthant.
LaurentClearing laurent_clear(const Polynomial& f);

/// Names `prefix1 .. prefixN`.
std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count);

}  // namespace maxtoric::ratpoly
