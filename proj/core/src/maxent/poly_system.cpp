#include "maxtoric/maxent/poly_system.hpp"

#include "maxtoric/error.hpp"

#include <limits>

namespace maxtoric::maxent {

using ratpoly::ExponentVector;
using ratpoly::Polynomial;

std::string to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::direct: return "direct";
        case SystemKind::dual: return "dual";
        case SystemKind::dual_empirical: return "dual-empirical";
    }
    return "unknown";
}

namespace {

std::int32_t narrow(std::int64_t e) {
    if (e > std::numeric_limits<std::int32_t>::max() || e < std::numeric_limits<std::int32_t>::min())
        throw ArgumentError("exponent out of range");
    return static_cast<std::int32_t>(e);
}

std::vector<std::string> resolve_vars(const toric::ConstraintMatrix& a,
                                      std::vector<std::string> vars) {
    if (vars.empty()) return ratpoly::indexed_names("t", a.rows());
    if (vars.size() != a.rows()) throw DimensionError("one variable name per constraint required");
    return vars;
}

void check_prior(const toric::ConstraintMatrix& a, std::span<const Rational> prior) {
    if (!prior.empty() && prior.size() != a.cols())
        throw DimensionError("prior length does not match A");
    for (const auto& h : prior)
        if (h <= 0) throw DomainError("prior weights must be strictly positive");
}

Rational weight(std::span<const Rational> prior, std::size_t j) {
    return prior.empty() ? Rational(1) : prior[j];
}

void clear_all(PolySystem& system) {
    for (const auto& eq : system.equations) {
        auto [shift, g] = ratpoly::laurent_clear(eq);
        system.multipliers.push_back(std::move(shift));
        system.cleared.push_back(std::move(g));
    }
}

// objective = sum_j h_j theta^{exponent(:, j)}; gradient system from it.
DualSystem dual_from_exponents(const std::vector<ExponentVector>& columns,
                               std::span<const Rational> prior, std::vector<std::string> vars,
                               SystemKind kind) {
    DualSystem out;
    out.objective = Polynomial(vars, true);
    for (std::size_t j = 0; j < columns.size(); ++j) out.objective.add_term(columns[j], weight(prior, j));
    out.gradient.provenance = kind;
    out.gradient.vars = vars;
    for (std::size_t k = 0; k < vars.size(); ++k)
        out.gradient.equations.push_back(out.objective.derivative(k));
    clear_all(out.gradient);
    return out;
}

}  // namespace

PolySystem direct_system(const toric::ConstraintMatrix& a, std::span<const Rational> targets,
                         std::span<const Rational> prior, std::vector<std::string> vars) {
    if (targets.size() != a.rows()) throw DimensionError("one target per constraint required");
    check_prior(a, prior);
    PolySystem system;
    system.provenance = SystemKind::direct;
    system.vars = resolve_vars(a, std::move(vars));
    const bool laurent = a.min_entry() < 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Polynomial eq(system.vars, laurent);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            ExponentVector e(a.rows());
            for (std::size_t k = 0; k < a.rows(); ++k) e[k] = narrow(a(k, j));
            eq.add_term(e, weight(prior, j) * (Rational(static_cast<long>(a(i, j))) - targets[i]));
        }
        system.equations.push_back(std::move(eq));
    }
    clear_all(system);
    return system;
}

PolySystem direct_system(const MaxEntProblem& problem) {
    problem.validate();
    const auto targets = problem.exact_targets();
    return direct_system(problem.a, targets, problem.prior, problem.variable_names());
}

double DualSystem::objective_at(std::span<const double> theta) const {
    for (double t : theta)
        if (!(t > 0.0)) throw DomainError("dual objective needs a strictly positive point");
    return objective.eval(theta);
}

DualSystem dual_system(const toric::ConstraintMatrix& a, std::span<const Rational> targets,
                       std::span<const Rational> prior, std::vector<std::string> vars) {
    if (targets.size() != a.rows()) throw DimensionError("one target per constraint required");
    check_prior(a, prior);
    for (const auto& t : targets)
        if (!is_integer(t))
            throw DomainError("target " + t.get_str() +
                              " is not an integer: the dual is a Laurent system only for integer "
                              "targets; supply samples to use the sample-sum form");
    std::vector<ExponentVector> columns(a.cols(), ExponentVector(a.rows()));
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            columns[j][i] = narrow(targets[i].get_num().get_si() - a(i, j));
    return dual_from_exponents(columns, prior, resolve_vars(a, std::move(vars)), SystemKind::dual);
}

DualSystem dual_system(const toric::ConstraintMatrix& a, const SampleData& samples,
                       std::span<const Rational> prior, std::vector<std::string> vars) {
    if (samples.sigma.size() != a.rows()) throw DimensionError("one sample sum per constraint required");
    check_prior(a, prior);
    std::vector<ExponentVector> columns(a.cols(), ExponentVector(a.rows()));
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            columns[j][i] = narrow(samples.sigma[i] - samples.n * a(i, j));
    return dual_from_exponents(columns, prior, resolve_vars(a, std::move(vars)),
                               SystemKind::dual_empirical);
}

DualSystem dual_system(const MaxEntProblem& problem) {
    problem.validate();
    if (problem.empirical())
        return dual_system(problem.a, problem.samples(), problem.prior, problem.variable_names());
    return dual_system(problem.a, std::get<MomentTargets>(problem.targets), problem.prior,
                       problem.variable_names());
}

}  // namespace maxtoric::maxent
