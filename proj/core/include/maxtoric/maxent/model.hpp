#pragma once

#include "maxtoric/rational.hpp"
#include "maxtoric/toric/constraint_matrix.hpp"
#include "maxtoric/toric/distribution.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace maxtoric::maxent {

/// Observations O_1..O_N (values in 1..m) with their exact sample sums
/// sigma_i = sum_l t_i(O_l).
struct SampleData {
    std::vector<std::size_t> observations;
    std::int64_t n = 0;
    std::vector<std::int64_t> sigma;
};

/// Throws ArgumentError for an empty list, DomainError for an observation
/// outside 1..m.
SampleData sample_sums(std::span<const std::size_t> observations, const toric::ConstraintMatrix& a);

using MomentTargets = std::vector<Rational>;

/// One estimation instance: constraints, optional prior weights and either
/// moment targets or raw samples.
struct MaxEntProblem {
    toric::ConstraintMatrix a;
    std::variant<MomentTargets, SampleData> targets;
    /// Positive weights h_j; empty means uniform.
    std::vector<Rational> prior;
    /// Names of theta_1..theta_d; empty means t1..td.
    std::vector<std::string> theta_names;

    static MaxEntProblem with_targets(toric::ConstraintMatrix a, MomentTargets targets,
                                      std::vector<Rational> prior = {});
    static MaxEntProblem with_samples(toric::ConstraintMatrix a,
                                      std::span<const std::size_t> observations,
                                      std::vector<Rational> prior = {});

    /// Throws DimensionError / DomainError when the invariants fail.
    void validate() const;

    bool empirical() const noexcept { return std::holds_alternative<SampleData>(targets); }
    const SampleData& samples() const { return std::get<SampleData>(targets); }

    /// T, or sigma / N in empirical mode.
    std::vector<Rational> exact_targets() const;
    std::vector<double> target_values() const;
    /// h as doubles; empty when the prior is uniform.
    std::vector<double> prior_weights() const;
    std::vector<std::string> variable_names() const;
};

struct ModelEvaluation {
    toric::DistributionVector p;
    /// ln sum_j h_j exp(-sum_i xi_i A[i][j]).
    double log_z = 0.0;
};

/// p_j ∝ h_j exp(-sum_i xi_i A[i][j]) evaluated with the log-sum-exp shift.
ModelEvaluation model_distribution(const toric::ConstraintMatrix& a, std::span<const double> xi,
                                   std::span<const double> prior = {});

/// (sum_j A[i][j] p_j)_i.
std::vector<double> moments(const toric::ConstraintMatrix& a, const toric::DistributionVector& p);
std::vector<Rational> moments_exact(const toric::ConstraintMatrix& a,
                                    std::span<const Rational> p);

/// max_i |moments(a, p)_i - targets_i|.
double moment_residual(const toric::ConstraintMatrix& a, const toric::DistributionVector& p,
                       std::span<const double> targets);

}  // namespace maxtoric::maxent
