#pragma once

// Random instance generators and independent oracles for the test suites.

#include "maxtoric/ratpoly/polynomial.hpp"
#include "maxtoric/toric/constraint_matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace maxtoric::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Rational small_rational(Rng& rng) {
    Rational q(static_cast<long>(uniform_int(rng, -5, 5)), static_cast<unsigned long>(uniform_int(rng, 1, 3)));
    q.canonicalize();
    return q;
}

/// Ordinary polynomial with up to `max_terms` terms of total degree <= max_degree.
inline ratpoly::Polynomial random_polynomial(Rng& rng, const std::vector<std::string>& vars,
                                             int max_degree, int max_terms) {
    ratpoly::Polynomial f(vars);
    const auto terms = uniform_int(rng, 1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
        ratpoly::ExponentVector e(vars.size(), 0);
        auto budget = uniform_int(rng, 0, max_degree);
        for (std::size_t k = 0; k < vars.size() && budget > 0; ++k) {
            const auto x = uniform_int(rng, 0, budget);
            e[k] = static_cast<std::int32_t>(x);
            budget -= x;
        }
        std::shuffle(e.begin(), e.end(), rng);
        f.add_term(e, small_rational(rng));
    }
    return f;
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t n) {
    std::vector<Rational> p;
    for (std::size_t k = 0; k < n; ++k) p.push_back(small_rational(rng));
    return p;
}

/// Uniform point on the probability simplex (normalized exponential draws).
inline std::vector<double> random_simplex_point(Rng& rng, std::size_t m) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(m);
    double s = 0.0;
    for (auto& x : p) s += (x = expo(rng));
    for (auto& x : p) x /= s;
    return p;
}

/// Orthogonal projection of q onto {x : A x = T, sum x = 1}; nullopt when the
/// projection leaves the simplex.
inline std::optional<std::vector<double>> project_feasible(const toric::ConstraintMatrix& a,
                                                           const std::vector<double>& targets,
                                                           const std::vector<double>& q) {
    const auto d = static_cast<Eigen::Index>(a.rows()), m = static_cast<Eigen::Index>(a.cols());
    Eigen::MatrixXd b(d + 1, m);
    Eigen::VectorXd rhs(d + 1), x(m);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < m; ++j)
            b(i, j) = static_cast<double>(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        rhs[i] = targets[static_cast<std::size_t>(i)];
    }
    b.row(d).setOnes();
    rhs[d] = 1.0;
    for (Eigen::Index j = 0; j < m; ++j) x[j] = q[static_cast<std::size_t>(j)];
    const Eigen::VectorXd lambda = (b * b.transpose()).ldlt().solve(b * x - rhs);
    const Eigen::VectorXd y = x - b.transpose() * lambda;
    std::vector<double> out(static_cast<std::size_t>(m));
    for (Eigen::Index j = 0; j < m; ++j) {
        if (y[j] < 0.0) return std::nullopt;
        out[static_cast<std::size_t>(j)] = y[j];
    }
    return out;
}

/// Central finite difference of f along coordinate k.
template <class F>
double central_difference(F&& f, std::vector<double> x, std::size_t k, double h) {
    const double x0 = x[k];
    x[k] = x0 + h;
    const double up = f(x);
    x[k] = x0 - h;
    const double down = f(x);
    return (up - down) / (2 * h);
}

/// Mean of t(j) = j on {1..6} under p_j ∝ exp(-xi j), inverted by bisection:
/// a fitting route independent of both library solvers.
inline double die_parameter_by_bisection(double target_mean) {
    auto mean = [](double xi) {
        double z = 0.0, s = 0.0;
        for (int j = 1; j <= 6; ++j) {
            const double w = std::exp(-xi * j);
            z += w;
            s += j * w;
        }
        return s / z;
    };
    double lo = -10.0, hi = 10.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mean(mid) > target_mean ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace maxtoric::testing
