#pragma once

#include "maxtoric/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace maxtoric::toric {

/// Point of the probability simplex. Floating-point probabilities are always
/// present; an exact rational copy is carried when the point was computed
/// exactly.
class DistributionVector {
public:
    DistributionVector() = default;

    /// Throws DomainError for a negative or non-finite entry, or a sum off by
    /// more than `tol` from 1.
    explicit DistributionVector(std::vector<double> probs, double tol = 1e-12);

    /// Exact point: entries >= 0 summing to exactly 1.
    explicit DistributionVector(std::vector<Rational> exact);

    static DistributionVector uniform(std::size_t m);
    /// Scales positive weights to sum 1.
    static DistributionVector normalized(const std::vector<double>& weights);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t j) const { return probs_[j]; }
    const std::vector<double>& probs() const noexcept { return probs_; }
    const std::optional<std::vector<Rational>>& exact() const noexcept { return exact_; }

private:
    std::vector<double> probs_;
    std::optional<std::vector<Rational>> exact_;
};

}  // namespace maxtoric::toric
