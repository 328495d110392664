#pragma once

#include "maxtoric/maxent/model.hpp"
#include "maxtoric/ratpoly/monomial_order.hpp"
#include "maxtoric/toric/distribution.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxtoric::maxent {

enum class Solver { gis, newton, groebner };

std::string to_string(Solver solver);
/// Throws ArgumentError on an unknown name.
Solver parse_solver(std::string_view name);

struct FitOptions {
    /// Largest accepted moment residual.
    double tol = 1e-10;
    /// 0 selects the solver default: 10000 for GIS, 100 for Newton.
    std::size_t max_iter = 0;
    /// ||xi||_inf beyond this bound is treated as divergence.
    double divergence_bound = 40.0;
};

struct FitResult {
    /// Lagrange parameters; p_j ∝ h_j exp(-sum_i xi_i A[i][j]).
    std::vector<double> xi;
    /// xi / N in empirical mode.
    std::optional<std::vector<double>> xi_tilde;
    toric::DistributionVector p;
    double log_z = 0.0;
    double residual = 0.0;
    std::size_t iterations = 0;
    Solver solver = Solver::newton;
    /// theta = exp(-xi) exactly, when the algebraic path found a rational root.
    std::optional<std::vector<Rational>> exact_theta;
};

/// Fits the moment constraints numerically.
///
/// GIS shifts every feature to be nonnegative, appends a slack feature so
/// the feature sum is a constant C, and applies the multiplicative update
/// lambda_i += ln(target_i / E_p[f_i]) / C. Newton minimizes the convex dual
/// ln Z(xi) + xi·T with the feature covariance as Hessian and an Armijo
/// backtracking line search on the dual value.
///
/// Throws InfeasibleMomentsError when the targets are on or outside the
/// moment polytope (divergence or iteration limit), RankDeficiencyError
/// (Newton) when the constraints are affinely dependent, ArgumentError for
/// Solver::groebner.
FitResult fit_numeric(const MaxEntProblem& problem, Solver solver, const FitOptions& options = {});

/// direct_system() followed by solve_algebraic(). Throws
/// UnsupportedStructureError / SizeLimitError from the solver and
/// InfeasibleMomentsError when no positive solution exists.
FitResult fit_algebraic(const MaxEntProblem& problem, const ratpoly::MonomialOrder& order);

}  // namespace maxtoric::maxent
