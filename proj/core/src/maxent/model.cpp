#include "maxtoric/maxent/model.hpp"

#include "maxtoric/error.hpp"
#include "maxtoric/ratpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace maxtoric::maxent {

SampleData sample_sums(std::span<const std::size_t> observations, const toric::ConstraintMatrix& a) {
    if (observations.empty()) throw ArgumentError("sample_sums: no observations");
    SampleData s;
    s.observations.assign(observations.begin(), observations.end());
    s.n = static_cast<std::int64_t>(observations.size());
    s.sigma.assign(a.rows(), 0);
    for (auto o : observations) {
        if (o < 1 || o > a.cols())
            throw DomainError("observation " + std::to_string(o) + " outside 1.." +
                              std::to_string(a.cols()));
        for (std::size_t i = 0; i < a.rows(); ++i) s.sigma[i] += a(i, o - 1);
    }
    return s;
}

MaxEntProblem MaxEntProblem::with_targets(toric::ConstraintMatrix a, MomentTargets targets,
                                          std::vector<Rational> prior) {
    MaxEntProblem p{std::move(a), std::move(targets), std::move(prior), {}};
    p.validate();
    return p;
}

MaxEntProblem MaxEntProblem::with_samples(toric::ConstraintMatrix a,
                                          std::span<const std::size_t> observations,
                                          std::vector<Rational> prior) {
    auto samples = sample_sums(observations, a);
    MaxEntProblem p{std::move(a), std::move(samples), std::move(prior), {}};
    p.validate();
    return p;
}

void MaxEntProblem::validate() const {
    if (const auto* t = std::get_if<MomentTargets>(&targets)) {
        if (t->size() != a.rows())
            throw DimensionError("expected " + std::to_string(a.rows()) + " targets, got " +
                                 std::to_string(t->size()));
    } else {
        const auto& s = std::get<SampleData>(targets);
        if (s.n < 1 || static_cast<std::size_t>(s.n) != s.observations.size())
            throw DomainError("sample count does not match the observations");
        if (sample_sums(s.observations, a).sigma != s.sigma)
            throw DomainError("sample sums do not match the observations");
    }
    if (!prior.empty()) {
        if (prior.size() != a.cols()) throw DimensionError("prior length does not match A");
        for (const auto& h : prior)
            if (h <= 0) throw DomainError("prior weights must be strictly positive");
    }
    if (!theta_names.empty() && theta_names.size() != a.rows())
        throw DimensionError("theta_names length does not match the constraint count");
}

std::vector<Rational> MaxEntProblem::exact_targets() const {
    if (const auto* t = std::get_if<MomentTargets>(&targets)) return *t;
    const auto& s = std::get<SampleData>(targets);
    std::vector<Rational> out;
    for (auto sigma : s.sigma) {
        Rational q(Integer(static_cast<long>(sigma)), Integer(static_cast<long>(s.n)));
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::vector<double> MaxEntProblem::target_values() const {
    std::vector<double> out;
    for (const auto& q : exact_targets()) out.push_back(q.get_d());
    return out;
}

std::vector<double> MaxEntProblem::prior_weights() const {
    std::vector<double> out;
    for (const auto& h : prior) out.push_back(h.get_d());
    return out;
}

std::vector<std::string> MaxEntProblem::variable_names() const {
    return theta_names.empty() ? ratpoly::indexed_names("t", a.rows()) : theta_names;
}

ModelEvaluation model_distribution(const toric::ConstraintMatrix& a, std::span<const double> xi,
                                   std::span<const double> prior) {
    if (xi.size() != a.rows()) throw DimensionError("xi length does not match A");
    if (!prior.empty() && prior.size() != a.cols())
        throw DimensionError("prior length does not match A");
    std::vector<double> logw(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = prior.empty() ? 0.0 : std::log(prior[j]);
        for (std::size_t i = 0; i < a.rows(); ++i) s -= xi[i] * static_cast<double>(a(i, j));
        logw[j] = s;
    }
    const double top = *std::max_element(logw.begin(), logw.end());
    double z = 0.0;
    for (auto& w : logw) {
        w = std::exp(w - top);
        z += w;
    }
    for (auto& w : logw) w /= z;
    return {toric::DistributionVector(std::move(logw)), top + std::log(z)};
}

std::vector<double> moments(const toric::ConstraintMatrix& a, const toric::DistributionVector& p) {
    if (p.size() != a.cols()) throw DimensionError("distribution length does not match A");
    std::vector<double> mu(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) mu[i] += static_cast<double>(a(i, j)) * p[j];
    return mu;
}

std::vector<Rational> moments_exact(const toric::ConstraintMatrix& a,
                                    std::span<const Rational> p) {
    if (p.size() != a.cols()) throw DimensionError("distribution length does not match A");
    std::vector<Rational> mu(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) mu[i] += Rational(static_cast<long>(a(i, j))) * p[j];
    return mu;
}

double moment_residual(const toric::ConstraintMatrix& a, const toric::DistributionVector& p,
                       std::span<const double> targets) {
    if (targets.size() != a.rows()) throw DimensionError("targets length does not match A");
    const auto mu = moments(a, p);
    double r = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) r = std::max(r, std::abs(mu[i] - targets[i]));
    return r;
}

}  // namespace maxtoric::maxent
