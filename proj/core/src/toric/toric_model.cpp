#include "maxtoric/toric/toric_model.hpp"

#include "maxtoric/error.hpp"
#include "maxtoric/ratpoly/groebner.hpp"
#include "maxtoric/toric/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxtoric::toric {

using ratpoly::ExponentVector;
using ratpoly::Polynomial;

namespace {

void check_lengths(const ConstraintMatrix& a, std::size_t theta, std::size_t prior) {
    if (theta != a.rows())
        throw DimensionError("theta has length " + std::to_string(theta) + ", expected " +
                             std::to_string(a.rows()));
    if (prior != 0 && prior != a.cols())
        throw DimensionError("prior has length " + std::to_string(prior) + ", expected " +
                             std::to_string(a.cols()));
}

std::int32_t narrow_exponent(std::int64_t e) {
    if (e > std::numeric_limits<std::int32_t>::max() || e < std::numeric_limits<std::int32_t>::min())
        throw ArgumentError("exponent out of range");
    return static_cast<std::int32_t>(e);
}

}  // namespace

DistributionVector toric_param(const ConstraintMatrix& a, std::span<const double> theta,
                               std::span<const double> prior) {
    check_lengths(a, theta.size(), prior.size());
    std::vector<double> log_theta(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (!(theta[i] > 0.0) || !std::isfinite(theta[i]))
            throw DomainError("theta must be strictly positive");
        log_theta[i] = std::log(theta[i]);
    }
    for (double h : prior)
        if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("prior weights must be positive");

    std::vector<double> logw(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = prior.empty() ? 0.0 : std::log(prior[j]);
        for (std::size_t i = 0; i < a.rows(); ++i) s += static_cast<double>(a(i, j)) * log_theta[i];
        logw[j] = s;
    }
    const double top = *std::max_element(logw.begin(), logw.end());
    double z = 0.0;
    for (auto& w : logw) {
        w = std::exp(w - top);
        z += w;
    }
    for (auto& w : logw) w /= z;
    return DistributionVector(std::move(logw));
}

DistributionVector toric_param_exact(const ConstraintMatrix& a, std::span<const Rational> theta,
                                     std::span<const Rational> prior) {
    check_lengths(a, theta.size(), prior.size());
    for (const auto& t : theta)
        if (t <= 0) throw DomainError("theta must be strictly positive");
    for (const auto& h : prior)
        if (h <= 0) throw DomainError("prior weights must be positive");
    std::vector<Rational> w(a.cols());
    Rational z = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Rational v = prior.empty() ? Rational(1) : prior[j];
        for (std::size_t i = 0; i < a.rows(); ++i) v *= maxtoric::pow(theta[i], a(i, j));
        z += v;
        w[j] = std::move(v);
    }
    for (auto& v : w) v /= z;
    return DistributionVector(std::move(w));
}

std::vector<Polynomial> lattice_binomials(const ConstraintMatrix& a,
                                          const std::vector<std::string>& vars) {
    if (vars.size() < a.cols()) throw DimensionError("too few variables for lattice binomials");
    const std::size_t offset = vars.size() - a.cols();
    std::vector<Polynomial> out;
    for (const auto& u : integer_kernel_basis(a).vectors) {
        ExponentVector plus(vars.size(), 0), minus(vars.size(), 0);
        for (std::size_t j = 0; j < u.size(); ++j)
            (u[j] > 0 ? plus : minus)[offset + j] = narrow_exponent(u[j] > 0 ? u[j] : -u[j]);
        Polynomial b(vars);
        b.add_term(plus, 1);
        b.add_term(minus, -1);
        out.push_back(std::move(b));
    }
    return out;
}

BinomialGenerators toric_ideal_generators(const ConstraintMatrix& a) {
    const std::size_t m = a.cols();
    if (m > kMaxSaturationAlphabet)
        throw SizeLimitError("toric ideal saturation is limited to alphabets of size " +
                             std::to_string(kMaxSaturationAlphabet) + " (got " +
                             std::to_string(m) + ")");
    BinomialGenerators out{ratpoly::indexed_names("p", m), {}};

    // Ring w, p1..pm with w eliminated first.
    std::vector<std::string> ring{"w"};
    ring.insert(ring.end(), out.vars.begin(), out.vars.end());
    auto gens = lattice_binomials(a, ring);
    if (gens.empty()) return out;

    Polynomial inverse(ring);
    inverse.add_term(ExponentVector(m + 1, 1), 1);
    inverse.add_term(ExponentVector(m + 1, 0), -1);
    gens.push_back(std::move(inverse));

    const auto order = ratpoly::MonomialOrder::elimination(1, m + 1);
    const auto gb = ratpoly::buchberger(gens, order);
    const auto lex = ratpoly::MonomialOrder::lex(m);
    for (const auto& g : gb.basis()) {
        if (g.degree_in(0) != 0) continue;
        Polynomial b(out.vars);
        for (const auto& [e, c] : g.terms()) b.add_term(ExponentVector(e.begin() + 1, e.end()), c);
        if (b.leading_term(lex).second < 0) b = -b;
        out.binomials.push_back(std::move(b));
    }
    return out;
}

MembershipReport verify_model_membership(const DistributionVector& p,
                                         const BinomialGenerators& generators, double tol,
                                         std::span<const double> prior) {
    if (p.size() != generators.vars.size())
        throw DimensionError("distribution length does not match the generator ring");
    if (!prior.empty() && prior.size() != p.size())
        throw DimensionError("prior length does not match the distribution");

    std::vector<double> point = p.probs();
    if (!prior.empty())
        for (std::size_t j = 0; j < point.size(); ++j) {
            if (!(prior[j] > 0.0)) throw DomainError("prior weights must be positive");
            point[j] /= prior[j];
        }

    MembershipReport report;
    for (const auto& g : generators.binomials) {
        const double r = std::abs(g.eval(std::span<const double>(point)));
        report.residuals.push_back(r);
        report.max_residual = std::max(report.max_residual, r);
    }
    report.member = report.max_residual <= tol;

    if (p.exact() && prior.empty()) {
        bool all_zero = true;
        for (const auto& g : generators.binomials)
            all_zero = all_zero && g.eval(std::span<const Rational>(*p.exact())) == 0;
        report.exact_member = all_zero;
    }
    return report;
}

MembershipReport verify_model_membership(const DistributionVector& p, const ConstraintMatrix& a,
                                         double tol) {
    if (p.size() != a.cols()) throw DimensionError("distribution length does not match A");
    return verify_model_membership(p, toric_ideal_generators(a), tol);
}

}  // namespace maxtoric::toric
