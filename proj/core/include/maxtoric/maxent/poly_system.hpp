#pragma once

#include "maxtoric/maxent/model.hpp"
#include "maxtoric/ratpoly/polynomial.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maxtoric::maxent {

enum class SystemKind { direct, dual, dual_empirical };

std::string to_string(SystemKind kind);

/// Polynomial system in theta_1..theta_d. `equations` are the forms as
/// derived (Laurent when exponents go negative); `cleared` are the same
/// equations multiplied by `multipliers[i]` so every exponent is >= 0.
struct PolySystem {
    SystemKind provenance = SystemKind::direct;
    std::vector<std::string> vars;
    std::vector<ratpoly::Polynomial> equations;
    std::vector<ratpoly::Polynomial> cleared;
    std::vector<ratpoly::ExponentVector> multipliers;
};

/// Moment-matching equations under theta_i = exp(-xi_i):
///   sum_j h_j (A[i][j] - T_i) prod_k theta_k^{A[k][j]} = 0,  i = 1..d.
/// Positive roots of the cleared system are the fitted parameters.
PolySystem direct_system(const toric::ConstraintMatrix& a, std::span<const Rational> targets,
                         std::span<const Rational> prior = {},
                         std::vector<std::string> vars = {});
PolySystem direct_system(const MaxEntProblem& problem);

/// Dual objective Psi'(theta) = sum_j h_j prod_i theta_i^{e_ij} with
/// e_ij = T_i - A[i][j] (integer targets) or sigma_i - N A[i][j] (samples),
/// under theta_i = exp(+xi_i) (resp. exp(+xi_i / N)), together with its
/// gradient system d Psi' / d theta_k = 0.
struct DualSystem {
    PolySystem gradient;
    ratpoly::Polynomial objective;

    /// Psi' at a positive point.
    double objective_at(std::span<const double> theta) const;
};

/// Throws DomainError when some target is not an integer: the dual is only
/// a Laurent system for integer targets, so such data must go through the
/// sample-sum form.
DualSystem dual_system(const toric::ConstraintMatrix& a, std::span<const Rational> targets,
                       std::span<const Rational> prior = {}, std::vector<std::string> vars = {});
DualSystem dual_system(const toric::ConstraintMatrix& a, const SampleData& samples,
                       std::span<const Rational> prior = {}, std::vector<std::string> vars = {});
DualSystem dual_system(const MaxEntProblem& problem);

}  // namespace maxtoric::maxent
