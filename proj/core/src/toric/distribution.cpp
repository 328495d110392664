#include "maxtoric/toric/distribution.hpp"

#include "maxtoric/error.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace maxtoric::toric {

DistributionVector::DistributionVector(std::vector<double> probs, double tol)
    : probs_(std::move(probs)) {
    if (probs_.empty()) throw DomainError("empty distribution");
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0)
            throw DomainError("distribution entry " + std::to_string(p) + " is not >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol)
        throw DomainError("distribution sums to " + std::to_string(sum) + ", not 1");
}

DistributionVector::DistributionVector(std::vector<Rational> exact) {
    if (exact.empty()) throw DomainError("empty distribution");
    Rational sum = 0;
    for (const auto& q : exact) {
        if (q < 0) throw DomainError("distribution entry " + q.get_str() + " is negative");
        sum += q;
    }
    if (sum != 1) throw DomainError("exact distribution sums to " + sum.get_str());
    probs_.reserve(exact.size());
    for (const auto& q : exact) probs_.push_back(q.get_d());
    exact_ = std::move(exact);
}

DistributionVector DistributionVector::uniform(std::size_t m) {
    return DistributionVector(std::vector<Rational>(m, Rational(1, static_cast<unsigned long>(m))));
}

DistributionVector DistributionVector::normalized(const std::vector<double>& weights) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0) || !std::isfinite(total))
        throw DomainError("weights do not have a positive finite sum");
    std::vector<double> p(weights.size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = weights[j] / total;
    return DistributionVector(std::move(p), 1e-9);
}

}  // namespace maxtoric::toric
