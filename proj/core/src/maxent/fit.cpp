#include "maxtoric/maxent/fit.hpp"

#include "maxtoric/error.hpp"
#include "maxtoric/maxent/poly_system.hpp"
#include "maxtoric/maxent/solve_algebraic.hpp"
#include "maxtoric/toric/lattice.hpp"
#include "maxtoric/toric/toric_model.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxtoric::maxent {

std::string to_string(Solver solver) {
    switch (solver) {
        case Solver::gis: return "gis";
        case Solver::newton: return "newton";
        case Solver::groebner: return "groebner";
    }
    return "unknown";
}

Solver parse_solver(std::string_view name) {
    if (name == "gis") return Solver::gis;
    if (name == "newton") return Solver::newton;
    if (name == "groebner") return Solver::groebner;
    throw ArgumentError("unknown solver '" + std::string(name) + "'");
}

namespace {

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

FitResult finish(const MaxEntProblem& problem, std::vector<double> xi, std::size_t iterations,
                 Solver solver) {
    const auto prior = problem.prior_weights();
    auto ev = model_distribution(problem.a, xi, prior);
    FitResult r;
    r.residual = moment_residual(problem.a, ev.p, problem.target_values());
    r.p = std::move(ev.p);
    r.log_z = ev.log_z;
    r.iterations = iterations;
    r.solver = solver;
    if (problem.empirical()) {
        std::vector<double> tilde(xi.size());
        const auto n = static_cast<double>(problem.samples().n);
        for (std::size_t i = 0; i < xi.size(); ++i) tilde[i] = xi[i] / n;
        r.xi_tilde = std::move(tilde);
    }
    r.xi = std::move(xi);
    return r;
}

[[noreturn]] void diverged(const std::string& solver, const std::string& why) {
    throw InfeasibleMomentsError(solver + ": " + why +
                                 "; the targets lie on or outside the moment polytope");
}

FitResult fit_gis(const MaxEntProblem& problem, const FitOptions& options) {
    const auto& a = problem.a;
    const std::size_t d = a.rows(), m = a.cols();
    const auto targets = problem.target_values();
    const auto prior = problem.prior_weights();
    const std::size_t max_iter = options.max_iter ? options.max_iter : 10000;

    // Shifted features f_i(j) = A[i][j] - min_j A[i][j] >= 0 and a slack
    // feature completing every column sum to the constant C.
    std::vector<std::vector<double>> features(d, std::vector<double>(m));
    std::vector<double> feature_targets(d);
    std::vector<double> column_sum(m, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        const auto row = a.row(i);
        const double lo = static_cast<double>(*std::min_element(row.begin(), row.end()));
        for (std::size_t j = 0; j < m; ++j) {
            features[i][j] = static_cast<double>(row[j]) - lo;
            column_sum[j] += features[i][j];
        }
        feature_targets[i] = targets[i] - lo;
    }
    const double c = *std::max_element(column_sum.begin(), column_sum.end());
    if (c == 0.0) {
        // Every constraint is constant; only the prior remains.
        auto r = finish(problem, std::vector<double>(d, 0.0), 0, Solver::gis);
        if (r.residual > options.tol) diverged("gis", "constant constraints with other targets");
        return r;
    }
    const bool has_slack =
        std::any_of(column_sum.begin(), column_sum.end(), [&](double s) { return s != c; });
    if (has_slack) {
        std::vector<double> slack(m);
        for (std::size_t j = 0; j < m; ++j) slack[j] = c - column_sum[j];
        features.push_back(std::move(slack));
        double slack_target = c;
        for (double t : feature_targets) slack_target -= t;
        feature_targets.push_back(slack_target);
    }

    // Features identically zero need a zero target and take no part.
    std::vector<bool> active(features.size(), true);
    for (std::size_t k = 0; k < features.size(); ++k) {
        const bool zero = std::all_of(features[k].begin(), features[k].end(),
                                      [](double f) { return f == 0.0; });
        if (zero) {
            if (std::abs(feature_targets[k]) > options.tol)
                diverged("gis", "target of a constant constraint differs from its value");
            active[k] = false;
        } else if (!(feature_targets[k] > 0.0)) {
            diverged("gis", "shifted target is not strictly positive");
        }
    }

    std::vector<double> lambda(features.size(), 0.0), logw(m), p(m), expected(features.size());
    auto current_xi = [&] {
        const double slack_lambda = has_slack ? lambda.back() : 0.0;
        std::vector<double> xi(d);
        for (std::size_t i = 0; i < d; ++i) xi[i] = slack_lambda - lambda[i];
        return xi;
    };

    for (std::size_t it = 0; it <= max_iter; ++it) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = prior.empty() ? 0.0 : std::log(prior[j]);
            for (std::size_t k = 0; k < features.size(); ++k) s += lambda[k] * features[k][j];
            logw[j] = s;
        }
        const double top = *std::max_element(logw.begin(), logw.end());
        double z = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            p[j] = std::exp(logw[j] - top);
            z += p[j];
        }
        for (auto& v : p) v /= z;

        double residual = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            double mu = 0.0;
            for (std::size_t j = 0; j < m; ++j) mu += static_cast<double>(a(i, j)) * p[j];
            residual = std::max(residual, std::abs(mu - targets[i]));
        }
        auto xi = current_xi();
        if (residual <= options.tol) {
            auto r = finish(problem, std::move(xi), it, Solver::gis);
            if (r.residual <= options.tol) return r;
        }
        if (sup_norm(xi) > options.divergence_bound) diverged("gis", "parameters diverged");
        if (it == max_iter) break;

        for (std::size_t k = 0; k < features.size(); ++k) {
            if (!active[k]) continue;
            double e = 0.0;
            for (std::size_t j = 0; j < m; ++j) e += features[k][j] * p[j];
            if (!(e > 0.0)) diverged("gis", "a feature lost all probability mass");
            lambda[k] += std::log(feature_targets[k] / e) / c;
        }
    }
    diverged("gis", "no convergence within " + std::to_string(max_iter) + " iterations");
}

// ln Z(xi) + xi·T, the convex function whose minimizer matches the moments.
double dual_value(const MaxEntProblem& problem, const std::vector<double>& xi,
                  const std::vector<double>& targets, const std::vector<double>& prior) {
    double v = model_distribution(problem.a, xi, prior).log_z;
    for (std::size_t i = 0; i < xi.size(); ++i) v += xi[i] * targets[i];
    return v;
}

FitResult fit_newton(const MaxEntProblem& problem, const FitOptions& options) {
    const auto& a = problem.a;
    const std::size_t d = a.rows(), m = a.cols();
    if (toric::rank(a.with_ones_row()) < d + 1)
        throw RankDeficiencyError(
            "newton: feature covariance is singular because the constraints are affinely "
            "dependent; remove dependent or constant constraints");
    const auto targets = problem.target_values();
    const auto prior = problem.prior_weights();
    const std::size_t max_iter = options.max_iter ? options.max_iter : 100;

    std::vector<double> xi(d, 0.0);
    for (std::size_t it = 0; it <= max_iter; ++it) {
        const auto ev = model_distribution(a, xi, prior);
        const auto mu = moments(a, ev.p);
        Eigen::VectorXd grad(d);
        double residual = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            grad[static_cast<Eigen::Index>(i)] = targets[i] - mu[i];
            residual = std::max(residual, std::abs(targets[i] - mu[i]));
        }
        if (residual <= options.tol) return finish(problem, xi, it, Solver::newton);
        if (it == max_iter) break;

        Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                                    static_cast<Eigen::Index>(d));
        Eigen::VectorXd centered(d);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < d; ++i)
                centered[static_cast<Eigen::Index>(i)] = static_cast<double>(a(i, j)) - mu[i];
            cov.noalias() += ev.p[j] * centered * centered.transpose();
        }
        const Eigen::LDLT<Eigen::MatrixXd> ldlt(cov);
        if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
            ldlt.vectorD().minCoeff() <= std::numeric_limits<double>::min())
            diverged("newton", "feature covariance collapsed");
        const Eigen::VectorXd step = ldlt.solve(-grad);
        if (!step.allFinite()) diverged("newton", "non-finite Newton step");

        const double f0 = dual_value(problem, xi, targets, prior);
        const double slope = grad.dot(step);
        std::vector<double> candidate(d);
        double scale = 1.0;
        for (int tries = 0; tries < 60; ++tries, scale *= 0.5) {
            for (std::size_t i = 0; i < d; ++i)
                candidate[i] = xi[i] + scale * step[static_cast<Eigen::Index>(i)];
            const double f1 = dual_value(problem, candidate, targets, prior);
            // Near the optimum the dual is flat to rounding; accept the step
            // then as long as it does not increase the moment error.
            if (f1 <= f0 + 1e-4 * scale * slope) break;
            const auto trial = model_distribution(a, candidate, prior);
            if (std::abs(f1 - f0) <= 1e-14 * std::max(1.0, std::abs(f0)) &&
                moment_residual(a, trial.p, targets) < residual)
                break;
        }
        xi = candidate;
        if (sup_norm(xi) > options.divergence_bound) diverged("newton", "parameters diverged");
    }
    diverged("newton", "no convergence within " + std::to_string(max_iter) + " iterations");
}

}  // namespace

FitResult fit_numeric(const MaxEntProblem& problem, Solver solver, const FitOptions& options) {
    problem.validate();
    if (!(options.tol > 0.0)) throw ArgumentError("tolerance must be positive");
    switch (solver) {
        case Solver::gis: return fit_gis(problem, options);
        case Solver::newton: return fit_newton(problem, options);
        case Solver::groebner: break;
    }
    throw ArgumentError("fit_numeric supports gis and newton; use fit_algebraic for groebner");
}

FitResult fit_algebraic(const MaxEntProblem& problem, const ratpoly::MonomialOrder& order) {
    const auto system = direct_system(problem);
    const auto solutions = solve_algebraic(system, order);
    if (solutions.empty())
        throw InfeasibleMomentsError(
            "groebner: no positive solution; the targets lie on or outside the moment polytope");

    const auto targets = problem.target_values();
    const auto prior = problem.prior_weights();
    const AlgebraicSolution* best = nullptr;
    double best_residual = std::numeric_limits<double>::infinity();
    for (const auto& s : solutions) {
        std::vector<double> xi(s.theta.size());
        for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = -std::log(s.theta[i]);
        const double r = moment_residual(problem.a, model_distribution(problem.a, xi, prior).p, targets);
        if (r < best_residual) {
            best_residual = r;
            best = &s;
        }
    }

    std::vector<double> xi(best->theta.size());
    for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = -std::log(best->theta[i]);
    auto result = finish(problem, std::move(xi), 0, Solver::groebner);
    if (best->exact) {
        result.p = toric::toric_param_exact(problem.a, *best->exact, problem.prior);
        result.residual = moment_residual(problem.a, result.p, targets);
        result.exact_theta = best->exact;
    }
    return result;
}

}  // namespace maxtoric::maxent
