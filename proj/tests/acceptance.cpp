// Acceptance suite: one line per criterion, nonzero exit status if any fails.

#include "cli/run.hpp"
#include "maxtoric/error.hpp"
#include "maxtoric/maxent/entropy.hpp"
#include "maxtoric/maxent/fit.hpp"
#include "maxtoric/maxent/poly_system.hpp"
#include "maxtoric/maxent/solve_algebraic.hpp"
#include "maxtoric/ratpoly/division.hpp"
#include "maxtoric/ratpoly/groebner.hpp"
#include "maxtoric/ratpoly/text.hpp"
#include "maxtoric/toric/lattice.hpp"
#include "maxtoric/toric/toric_model.hpp"
#include "support.hpp"

#include <json.hpp>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

using namespace maxtoric;
using namespace maxtoric::maxent;
using ratpoly::MonomialOrder;
using ratpoly::Polynomial;
using toric::ConstraintMatrix;
using toric::DistributionVector;
using testing::Rng;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Polynomial poly(const std::string& text, const std::vector<std::string>& vars, bool laurent = false) {
    return ratpoly::parse_polynomial(text, vars, laurent);
}

const ConstraintMatrix kDie = ConstraintMatrix::from_rows({{1, 2, 3, 4, 5, 6}});
const ConstraintMatrix kThree = ConstraintMatrix::from_rows({{0, 1, 2}});
const std::vector<std::string> kT1{"t1"};

Verdict dice_fit() {
    Verdict v;
    const auto problem = MaxEntProblem::with_targets(kDie, {Rational(9, 2)});
    const auto t0 = std::chrono::steady_clock::now();
    const auto gis = fit_numeric(problem, Solver::gis);
    const auto newton = fit_numeric(problem, Solver::newton);
    const double elapsed = seconds_since(t0);
    for (const auto* r : {&gis, &newton}) {
        const double mean = moments(kDie, r->p)[0];
        v.require(std::abs(mean - 4.5) <= 1e-8, to_string(r->solver) + " mean " + fmt("%.17g", mean));
    }
    const double gap = std::abs(gis.xi[0] - newton.xi[0]);
    v.require(gap <= 1e-6, "xi gap " + fmt("%.3g", gap));
    v.require(elapsed < 1.0, "runtime " + fmt("%.3g", elapsed) + " s");
    if (v.ok)
        v.detail = "xi gap " + fmt("%.2e", gap) + ", runtime " + fmt("%.4f", elapsed) + " s, GIS " +
                   std::to_string(gis.iterations) + " / Newton " + std::to_string(newton.iterations) + " iterations";
    return v;
}

Verdict exact_algebraic_path() {
    Verdict v;
    const auto problem = MaxEntProblem::with_targets(kThree, {Rational(1)});
    const auto system = direct_system(problem);
    v.require(system.cleared.size() == 1 && system.cleared[0] == poly("t1^2 - 1", kT1),
              "direct system " + ratpoly::to_string(system.cleared.at(0)));
    const auto sols = solve_algebraic(system, MonomialOrder::lex(1));
    v.require(sols.size() == 1 && sols[0].exact && (*sols[0].exact)[0] == 1, "theta is not exactly 1");
    const auto alg = fit_algebraic(problem, MonomialOrder::lex(1));
    v.require(alg.p.exact().has_value(), "no exact distribution");
    if (alg.p.exact())
        for (const auto& x : *alg.p.exact()) v.require(x == Rational(1, 3), "p_j = " + to_string(x));
    const auto num = fit_numeric(problem, Solver::newton);
    for (std::size_t j = 0; j < 3; ++j)
        v.require(std::abs(num.p[j] - alg.p[j]) <= 1e-9, "numeric disagreement");
    if (v.ok) v.detail = "t1^2 - 1, theta = 1, p = (1/3, 1/3, 1/3)";
    return v;
}

Verdict rational_target_path() {
    Verdict v;
    const auto problem = MaxEntProblem::with_targets(kThree, {Rational(1, 2)});
    const auto system = direct_system(problem);
    const auto ord = MonomialOrder::lex(1);
    v.require(system.cleared.size() == 1 &&
                  system.cleared[0].monic(ord) == poly("3*t1^2 + t1 - 1", kT1).monic(ord),
              "cleared " + ratpoly::to_string(system.cleared.at(0)));
    const double theta_star = (-1.0 + std::sqrt(13.0)) / 6.0;
    const auto sols = solve_algebraic(system, ord);
    v.require(sols.size() == 1, "expected one positive root");
    if (!sols.empty())
        v.require(std::abs(sols[0].theta[0] - theta_star) <= 1e-10,
                  "root " + fmt("%.17g", sols[0].theta[0]));
    // oracle distribution from the quadratic formula
    const double z = 1 + theta_star + theta_star * theta_star;
    const double oracle[3] = {1 / z, theta_star / z, theta_star * theta_star / z};
    const auto fit = fit_algebraic(problem, ord);
    for (std::size_t j = 0; j < 3; ++j)
        v.require(std::abs(fit.p[j] - oracle[j]) <= 1e-6, "p mismatch at " + std::to_string(j));
    if (v.ok)
        v.detail = "theta = " + fmt("%.15f", sols[0].theta[0]) + ", p = (" + fmt("%.4f", fit.p[0]) + ", " +
                   fmt("%.4f", fit.p[1]) + ", " + fmt("%.4f", fit.p[2]) + ")";
    return v;
}

Verdict empirical_dual_example() {
    Verdict v;
    const std::vector<std::size_t> obs{1, 2};
    const auto problem = MaxEntProblem::with_samples(ConstraintMatrix::from_rows({{0, 1}}), obs);
    const auto dual = dual_system(problem);
    v.require(dual.objective == poly("t1 + t1^-1", kT1, true), "objective " + ratpoly::to_string(dual.objective));
    v.require(dual.gradient.cleared.size() == 1 && dual.gradient.cleared[0] == poly("t1^2 - 1", kT1),
              "cleared gradient");
    const auto sols = solve_algebraic(dual.gradient, MonomialOrder::lex(1));
    v.require(sols.size() == 1 && sols[0].exact && (*sols[0].exact)[0] == 1, "theta~ is not exactly 1");
    const auto fit = fit_algebraic(problem, MonomialOrder::lex(1));
    v.require(fit.p.exact() && (*fit.p.exact())[0] == Rational(1, 2) && (*fit.p.exact())[1] == Rational(1, 2),
              "p is not exactly (1/2, 1/2)");
    if (v.ok) v.detail = "objective t1 + t1^-1, cleared t1^2 - 1, p = (1/2, 1/2)";
    return v;
}

Verdict toric_ideal() {
    Verdict v;
    const auto a = ConstraintMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}});
    const auto gens = toric::toric_ideal_generators(a);
    v.require(gens.binomials.size() == 1, std::to_string(gens.binomials.size()) + " generators");
    if (!v.ok) return v;
    const auto expected = poly("p1*p4 - p2*p3", gens.vars);
    v.require(gens.binomials[0] == expected || gens.binomials[0] == -expected,
              "generator " + ratpoly::to_string(gens.binomials[0]));
    Rng rng(5);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        std::vector<double> theta(4);
        for (auto& t : theta) t = testing::uniform_real(rng, 0.1, 5.0);
        const auto p = toric::toric_param(a, theta);
        worst = std::max(worst, std::abs(gens.binomials[0].eval(std::span<const double>(p.probs()))));
    }
    v.require(worst < 1e-12, "max value " + fmt("%.3g", worst));
    if (v.ok) v.detail = ratpoly::to_string(gens.binomials[0]) + ", max |value| " + fmt("%.2e", worst);
    return v;
}

Verdict groebner_suite() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(2718);
    const std::vector<std::string> names{"x", "y", "z"};
    for (int trial = 0; trial < 50 && v.ok; ++trial) {
        const auto nv = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
        const std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(nv));
        const auto ord = trial % 2 ? MonomialOrder::lex(nv) : MonomialOrder::grevlex(nv);
        std::vector<Polynomial> gens;
        const auto count = testing::uniform_int(rng, 1, 3);
        for (std::int64_t k = 0; k < count; ++k) gens.push_back(testing::random_polynomial(rng, vars, 3, 4));
        const auto gb = ratpoly::buchberger(gens, ord);
        const auto& basis = gb.basis();
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                v.require(ratpoly::normal_form(ratpoly::s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero(),
                          "S-polynomial with nonzero normal form in ideal " + std::to_string(trial));
        for (const auto& g : gens) v.require(gb.reduce(g).is_zero(), "generator not reduced to 0");
    }
    for (int trial = 0; trial < 200 && v.ok; ++trial) {
        const auto ord = trial % 2 ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3);
        const auto f = testing::random_polynomial(rng, names, 5, 6);
        std::vector<Polynomial> divisors;
        const auto count = testing::uniform_int(rng, 1, 3);
        while (static_cast<std::int64_t>(divisors.size()) < count) {
            auto g = testing::random_polynomial(rng, names, 3, 3);
            if (!g.is_zero()) divisors.push_back(std::move(g));
        }
        const auto r = ratpoly::multivariate_divide(f, divisors, ord);
        Polynomial sum = r.remainder;
        for (std::size_t i = 0; i < divisors.size(); ++i) sum += r.quotients[i] * divisors[i];
        v.require(sum == f, "division identity fails on instance " + std::to_string(trial));
    }
    const double elapsed = seconds_since(t0);
    v.require(elapsed < 60.0, "runtime " + fmt("%.3g", elapsed) + " s");
    if (v.ok) v.detail = "50 ideals, 200 divisions, " + fmt("%.3f", elapsed) + " s";
    return v;
}

struct SampledProblem {
    MaxEntProblem problem;
    std::vector<double> targets;
};

SampledProblem random_problem(Rng& rng, bool with_prior) {
    for (;;) {
        const auto d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 2));
        const auto m = static_cast<std::size_t>(testing::uniform_int(rng, d + 2, 5));
        std::vector<std::int64_t> entries(d * m);
        for (auto& e : entries) e = testing::uniform_int(rng, -2, 3);
        ConstraintMatrix a(d, m, std::move(entries));
        if (toric::rank(a.with_ones_row()) != d + 1) continue;
        const auto q = testing::random_simplex_point(rng, m);
        MomentTargets t;
        std::vector<double> td;
        for (std::size_t i = 0; i < d; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) s += static_cast<double>(a(i, j)) * q[j];
            t.emplace_back(s);
            td.push_back(t.back().get_d());
        }
        std::vector<Rational> prior;
        if (with_prior)
            for (std::size_t j = 0; j < m; ++j) prior.emplace_back(testing::uniform_int(rng, 1, 6));
        return {MaxEntProblem::with_targets(std::move(a), std::move(t), std::move(prior)), td};
    }
}

Verdict entropy_maximality() {
    Verdict v;
    Rng rng(31415);
    std::size_t sampled = 0;
    for (int pass = 0; pass < 2; ++pass) {
        const bool with_prior = pass == 1;
        for (int trial = 0; trial < 10 && v.ok; ++trial) {
            const auto [problem, targets] = random_problem(rng, with_prior);
            const auto fit = fit_numeric(problem, Solver::newton);
            const auto h = with_prior ? DistributionVector::normalized(problem.prior_weights())
                                      : DistributionVector::uniform(problem.a.cols());
            const double best_s = shannon_entropy(fit.p), best_kl = maxent::kl_divergence(fit.p, h);
            int accepted = 0;
            for (int k = 0; k < 200000 && accepted < 1000; ++k) {
                const auto q = testing::project_feasible(problem.a, targets,
                                                         testing::random_simplex_point(rng, problem.a.cols()));
                if (!q) continue;
                ++accepted;
                const DistributionVector dq(*q, 1e-9);
                if (with_prior)
                    v.require(best_kl <= maxent::kl_divergence(dq, h) + 1e-9, "sampled KL below the fit");
                else
                    v.require(best_s >= shannon_entropy(dq) - 1e-9, "sampled entropy above the fit");
            }
            v.require(accepted == 1000, "only " + std::to_string(accepted) + " feasible samples");
            sampled += static_cast<std::size_t>(accepted);
        }
    }
    if (v.ok) v.detail = "20 problems, " + std::to_string(sampled) + " feasible samples";
    return v;
}

Verdict dual_consistency() {
    Verdict v;
    Rng rng(1618);
    const auto a = ConstraintMatrix::from_rows({{1, 2, 0, 3, -1}, {0, 1, 2, -1, 1}});
    const std::vector<Rational> t{Rational(1), Rational(1)};
    const std::vector<double> td{1.0, 1.0};
    const auto dual = dual_system(a, t);
    double worst_grad = 0.0, worst_log = 0.0, worst_p = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::vector<double> theta{testing::uniform_real(rng, 0.3, 3.0), testing::uniform_real(rng, 0.3, 3.0)};
        for (std::size_t i = 0; i < 2; ++i) {
            const double g = dual.gradient.equations[i].eval(std::span<const double>(theta));
            const double fd = testing::central_difference(
                [&](const std::vector<double>& x) { return dual.objective_at(x); }, theta, i, 1e-5);
            worst_grad = std::max(worst_grad, std::abs(fd - g) / std::max(1.0, std::abs(g)));
        }
        const std::vector<double> xi{std::log(theta[0]), std::log(theta[1])};
        const auto model = model_distribution(a, xi);
        worst_log = std::max(worst_log, std::abs(std::log(dual.objective_at(theta)) -
                                                 (model.log_z + xi[0] * td[0] + xi[1] * td[1])));
        const std::vector<double> primal{std::exp(-xi[0]), std::exp(-xi[1])};
        const auto p = toric::toric_param(a, primal);
        for (std::size_t j = 0; j < a.cols(); ++j) worst_p = std::max(worst_p, std::abs(p[j] - model.p[j]));
    }
    v.require(worst_grad <= 1e-6, "gradient error " + fmt("%.3g", worst_grad));
    v.require(worst_log <= 1e-12, "log identity error " + fmt("%.3g", worst_log));
    v.require(worst_p <= 1e-12, "parametrization error " + fmt("%.3g", worst_p));
    if (v.ok)
        v.detail = "gradient " + fmt("%.1e", worst_grad) + ", log identity " + fmt("%.1e", worst_log) +
                   ", parametrization " + fmt("%.1e", worst_p);
    return v;
}

struct Scratch {
    std::filesystem::path dir;
    Scratch() {
        dir = std::filesystem::temp_directory_path() / ("maxtoric_acceptance_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~Scratch() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name, const std::string& text) const {
        const auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

int invoke(const std::vector<std::string>& args, std::string* out = nullptr, std::string* err = nullptr) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    if (out) *out = o.str();
    if (err) *err = e.str();
    return code;
}

Verdict infeasibility() {
    Verdict v;
    const auto problem = MaxEntProblem::with_targets(kDie, {Rational(13, 2)});
    for (auto solver : {Solver::gis, Solver::newton}) {
        try {
            fit_numeric(problem, solver);
            v.require(false, to_string(solver) + " returned a fit");
        } catch (const InfeasibleMomentsError&) {
        } catch (const std::exception& e) {
            v.require(false, to_string(solver) + " threw " + e.what());
        }
    }
    Scratch s;
    const auto spec = s.file("inf.json", R"({"m":6,"constraints":[{"values":[1,2,3,4,5,6],"target":6.5}]})");
    for (const char* solver : {"gis", "newton"}) {
        std::string out;
        const int code = invoke({"fit", spec, "--solver", solver}, &out);
        v.require(code == 1 && out.empty(), std::string("cli exit ") + std::to_string(code) + " with " + solver);
    }
    if (v.ok) v.detail = "both solvers raise the infeasible-moments error, exit code 1";
    return v;
}

Verdict cli_round_trip() {
    Verdict v;
    Scratch s;
    const std::vector<std::pair<std::string, std::string>> specs{
        {"dice", R"({"m":6,"constraints":[{"name":"mean","values":[1,2,3,4,5,6],"target":"9/2"}]})"},
        {"half", R"({"m":3,"constraints":[{"name":"t","values":[0,1,2],"target":0.5}]})"},
        {"samples", R"({"m":2,"constraints":[{"name":"t","values":[0,1]}],"samples":[1,2]})"},
        {"laurent", R"({"m":4,"constraints":[{"values":[-1,0,2,3],"target":1},{"values":[1,-2,0,1],"target":0}]})"},
        {"prior", R"({"m":4,"constraints":[{"values":[0,1,2,3],"target":"3/2"}],"prior":[1,2,"1/2",0.25]})"},
    };
    std::size_t polys = 0;
    for (const auto& [name, text] : specs) {
        const auto spec = s.file(name + ".json", text);
        for (const char* solver : {"gis", "newton", "groebner"}) {
            std::string fit, again, check;
            v.require(invoke({"fit", spec, "--solver", solver}, &fit) == 0, name + ": fit failed");
            invoke({"fit", spec, "--solver", solver}, &again);
            v.require(fit == again, name + ": fit output differs between runs");
            const auto dist = s.file("fit.json", fit);
            v.require(invoke({"check", spec, "--dist", dist}, &check) == 0, name + ": check failed\n" + check);
        }
        const auto doc = nlohmann::json::parse(text);
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < doc["constraints"].size(); ++i) vars.push_back("t" + std::to_string(i + 1));
        for (const char* cmd : {"system", "dual", "ideal"}) {
            std::string out, again;
            const int code = invoke({cmd, spec, "--format", "json"}, &out);
            if (code != 0) continue;  // dual needs integer targets or samples
            invoke({cmd, spec, "--format", "json"}, &again);
            v.require(out == again, name + ": " + cmd + " output differs between runs");
            const auto emitted = nlohmann::json::parse(out);
            const auto ring = std::string(cmd) == "ideal" ? ratpoly::indexed_names("p", doc["m"].get<std::size_t>())
                                                          : vars;
            for (const auto& [key, value] : emitted.items()) {
                if (key == "vars" || key == "provenance" || key == "multipliers") continue;
                std::vector<std::string> texts;
                if (value.is_string()) texts.push_back(value.get<std::string>());
                else
                    for (const auto& e : value) texts.push_back(e.get<std::string>());
                for (const auto& t : texts) {
                    const auto f = ratpoly::parse_polynomial(t, ring, true);
                    v.require(ratpoly::to_string(f) == t, name + ": " + t + " does not reparse");
                    ++polys;
                }
            }
        }
    }
    if (v.ok) v.detail = "15 fit/check round trips, " + std::to_string(polys) + " polynomials reparsed";
    return v;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"dice fit: GIS and Newton agree", dice_fit},
        {"exact algebraic path, T = 1", exact_algebraic_path},
        {"rational-target algebraic path, T = 1/2", rational_target_path},
        {"empirical dual example", empirical_dual_example},
        {"toric ideal of the 2x2 independence model", toric_ideal},
        {"Groebner engine suite", groebner_suite},
        {"entropy maximality and minimum divergence", entropy_maximality},
        {"dual consistency", dual_consistency},
        {"infeasibility handling", infeasibility},
        {"CLI round trip", cli_round_trip},
    };
    int failed = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s [%d] %s: %s\n", v.ok ? "PASS" : "FAIL", index, name, v.detail.c_str());
        failed += v.ok ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
