#include "cli/run.hpp"

#include "cli/json_writer.hpp"
#include "cli/problem_spec.hpp"
#include "maxtoric/error.hpp"
#include "maxtoric/maxent/entropy.hpp"
#include "maxtoric/maxent/fit.hpp"
#include "maxtoric/maxent/poly_system.hpp"
#include "maxtoric/ratpoly/text.hpp"
#include "maxtoric/toric/lattice.hpp"
#include "maxtoric/toric/toric_model.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>

namespace maxtoric::cli {
namespace {

struct Options {
    std::string command;
    std::vector<std::string> files;
    std::string solver = "newton";
    double tol = 1e-10;
    std::size_t max_iter = 0;
    std::string order = "lex";
    std::string format;
    std::string dist;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> polys_text(const std::vector<ratpoly::Polynomial>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(ratpoly::to_string(f));
    return out;
}

std::vector<std::string> rationals_text(const std::vector<Rational>& qs) {
    std::vector<std::string> out;
    for (const auto& q : qs) out.push_back(to_string(q));
    return out;
}

template <class Int>
std::string int_array(const std::vector<Int>& xs) {
    std::vector<std::string> items;
    for (auto x : xs) items.push_back(std::to_string(x));
    return json_array(items, false);
}

std::string joined(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? " " : "") + json_number(xs[k]);
    return out;
}

ratpoly::MonomialOrder order_for(const Options& opt, std::size_t nvars) {
    return opt.order == "grevlex" ? ratpoly::MonomialOrder::grevlex(nvars)
                                  : ratpoly::MonomialOrder::lex(nvars);
}

void emit_fit(const Options& opt, const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
    const auto problem = spec.problem();
    const auto solver = maxent::parse_solver(opt.solver);
    maxent::FitOptions fo;
    fo.tol = opt.tol;
    fo.max_iter = opt.max_iter;

    maxent::FitResult r;
    if (solver == maxent::Solver::groebner) {
        try {
            r = maxent::fit_algebraic(problem, order_for(opt, problem.a.rows()));
        } catch (const UnsupportedStructureError& e) {
            err << "warning: " << e.what() << "; falling back to newton\n";
            r = maxent::fit_numeric(problem, maxent::Solver::newton, fo);
        }
    } else {
        r = maxent::fit_numeric(problem, solver, fo);
    }

    if (opt.format == "text") {
        out << "solver: " << maxent::to_string(r.solver) << "\n";
        out << "xi: " << joined(r.xi) << "\n";
        if (r.xi_tilde) out << "xi_tilde: " << joined(*r.xi_tilde) << "\n";
        out << "p: " << joined(r.p.probs()) << "\n";
        out << "logZ: " << json_number(r.log_z) << "\n";
        out << "residual: " << json_number(r.residual) << "\n";
        out << "iterations: " << r.iterations << "\n";
        return;
    }
    JsonObject obj;
    obj.add("solver", maxent::to_string(r.solver));
    obj.add_raw("xi", json_array(r.xi));
    if (r.xi_tilde) obj.add_raw("xi_tilde", json_array(*r.xi_tilde));
    obj.add_raw("p", json_array(r.p.probs()));
    if (r.exact_theta) obj.add_raw("theta_exact", json_array(rationals_text(*r.exact_theta)));
    if (r.p.exact()) obj.add_raw("p_exact", json_array(rationals_text(*r.p.exact())));
    obj.add("logZ", r.log_z);
    obj.add("residual", r.residual);
    obj.add("iterations", r.iterations);
    out << obj.pretty_text() << "\n";
}

void emit_system(const Options& opt, const ProblemSpec& spec, std::ostream& out) {
    const auto s = maxent::direct_system(spec.problem());
    if (opt.format != "json") {
        for (const auto& line : polys_text(s.cleared)) out << line << "\n";
        return;
    }
    std::vector<std::string> mult;
    for (const auto& e : s.multipliers) mult.push_back(int_array(e));
    JsonObject obj;
    obj.add("provenance", maxent::to_string(s.provenance));
    obj.add_raw("vars", json_array(s.vars));
    obj.add_raw("equations", json_array(polys_text(s.equations)));
    obj.add_raw("cleared", json_array(polys_text(s.cleared)));
    obj.add_raw("multipliers", json_array(mult, false));
    out << obj.pretty_text() << "\n";
}

void emit_dual(const Options& opt, const ProblemSpec& spec, std::ostream& out) {
    const auto d = maxent::dual_system(spec.problem());
    const auto& g = d.gradient;
    if (opt.format != "json") {
        out << "objective: " << ratpoly::to_string(d.objective) << "\n";
        for (const auto& line : polys_text(g.equations)) out << "gradient: " << line << "\n";
        for (const auto& line : polys_text(g.cleared)) out << "cleared: " << line << "\n";
        return;
    }
    JsonObject obj;
    obj.add("provenance", maxent::to_string(g.provenance));
    obj.add_raw("vars", json_array(g.vars));
    obj.add("objective", ratpoly::to_string(d.objective));
    obj.add_raw("gradient", json_array(polys_text(g.equations)));
    obj.add_raw("cleared", json_array(polys_text(g.cleared)));
    out << obj.pretty_text() << "\n";
}

void emit_ideal(const Options& opt, const ProblemSpec& spec, std::ostream& out) {
    const auto gens = toric::toric_ideal_generators(spec.matrix());
    if (opt.format != "json") {
        for (const auto& line : polys_text(gens.binomials)) out << line << "\n";
        return;
    }
    JsonObject obj;
    obj.add_raw("vars", json_array(gens.vars));
    obj.add_raw("generators", json_array(polys_text(gens.binomials)));
    out << obj.pretty_text() << "\n";
}

toric::DistributionVector load_distribution(const Options& opt, std::size_t m) {
    if (opt.dist.empty()) throw InputError("--dist: a distribution is required");
    auto p = parse_distribution(read_input(opt.dist));
    if (p.size() != m)
        throw InputError(opt.dist + ": expected " + std::to_string(m) + " probabilities, got " +
                         std::to_string(p.size()));
    return p;
}

// Returns false when the distribution fails the check.
bool emit_check(const Options& opt, const ProblemSpec& spec, std::ostream& out) {
    const auto problem = spec.problem();
    const auto p = load_distribution(opt, spec.m);
    // the model is the toric variety of A, homogenized when (1,...,1) is
    // outside the row span
    const auto a = toric::check_ones_in_rowspan(problem.a) ? problem.a : problem.a.with_ones_row();
    const auto gens = toric::toric_ideal_generators(a);
    const auto h = problem.prior_weights();
    const auto membership = toric::verify_model_membership(p, gens, opt.tol, h);
    const auto targets = problem.target_values();
    const double moment_residual = maxent::moment_residual(problem.a, p, targets);
    const bool pass = membership.member && moment_residual <= opt.tol;

    if (opt.format == "text") {
        out << "member: " << (membership.member ? "true" : "false") << "\n";
        out << "generator_residual: " << json_number(membership.max_residual) << "\n";
        out << "moment_residual: " << json_number(moment_residual) << "\n";
        out << "pass: " << (pass ? "true" : "false") << "\n";
        return pass;
    }
    JsonObject obj;
    obj.add("member", membership.member);
    if (membership.exact_member) obj.add("exact_member", *membership.exact_member);
    obj.add("generators", gens.binomials.size());
    obj.add("generator_residual", membership.max_residual);
    obj.add_raw("moments", json_array(maxent::moments(problem.a, p)));
    obj.add_raw("targets", json_array(targets));
    obj.add("moment_residual", moment_residual);
    obj.add("tol", opt.tol);
    obj.add("pass", pass);
    out << obj.pretty_text() << "\n";
    return pass;
}

void emit_entropy(const Options& opt, const ProblemSpec& spec, std::ostream& out) {
    const auto p = load_distribution(opt, spec.m);
    const auto weights = spec.problem().prior_weights();
    const auto h = weights.empty() ? toric::DistributionVector::uniform(spec.m)
                                   : toric::DistributionVector::normalized(weights);
    const double s = maxent::shannon_entropy(p);
    const double kl = maxent::kl_divergence(p, h);
    if (opt.format == "text") {
        out << "entropy: " << json_number(s) << "\n";
        out << "kl_to_prior: " << json_number(kl) << "\n";
        return;
    }
    JsonObject obj;
    obj.add("entropy", s);
    obj.add("kl_to_prior", kl);
    out << obj.pretty_text() << "\n";
}

int process(const Options& opt, const std::string& file, std::ostream& out, std::ostream& err) {
    try {
        const auto spec = parse_problem(read_input(file));
        if (opt.command == "fit") emit_fit(opt, spec, out, err);
        else if (opt.command == "system") emit_system(opt, spec, out);
        else if (opt.command == "dual") emit_dual(opt, spec, out);
        else if (opt.command == "ideal") emit_ideal(opt, spec, out);
        else if (opt.command == "check") return emit_check(opt, spec, out) ? kOk : kSolverFailure;
        else emit_entropy(opt, spec, out);
        return kOk;
    } catch (const InputError& e) {
        err << "error: " << (file == "-" ? "<stdin>" : file) << ": " << e.what() << "\n";
        return kInputError;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kSizeLimit;
    } catch (const InfeasibleMomentsError& e) {
        err << "error: " << e.what() << "\n";
        return kSolverFailure;
    } catch (const RankDeficiencyError& e) {
        err << "error: " << e.what() << "\n";
        return kSolverFailure;
    } catch (const UnsupportedStructureError& e) {
        err << "error: " << e.what() << "\n";
        return kSolverFailure;
    } catch (const Error& e) {
        err << "error: " << (file == "-" ? "<stdin>" : file) << ": " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum-entropy fitting, toric ideals and moment polynomial systems"};
    app.require_subcommand(1);
    Options opt;

    const std::pair<const char*, const char*> commands[] = {
        {"fit", "fit the model numerically or algebraically"},
        {"system", "print the moment-matching polynomial system"},
        {"dual", "print the dual objective and its gradient system"},
        {"ideal", "print generators of the toric ideal of the constraint matrix"},
        {"check", "verify a distribution against the model and the targets"},
        {"entropy", "entropy of a distribution and its divergence from the prior"},
    };
    for (const auto& [name, description] : commands) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("files", opt.files, "problem documents (- for stdin)")->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--tol", opt.tol, "tolerance on moment and generator residuals")
            ->check(CLI::PositiveNumber);
        if (std::string_view(name) == "fit") {
            sub->add_option("--solver", opt.solver, "gis, newton or groebner")
                ->check(CLI::IsMember({"gis", "newton", "groebner"}));
            sub->add_option("--max-iter", opt.max_iter, "iteration limit (0 = solver default)");
            sub->add_option("--order", opt.order, "variable order for the algebraic solver")
                ->check(CLI::IsMember({"lex", "grevlex"}));
        }
        if (std::string_view(name) == "check" || std::string_view(name) == "entropy")
            sub->add_option("--dist", opt.dist, "distribution document (- for stdin)")->required();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    opt.command = app.get_subcommands().front()->get_name();
    if (opt.format.empty())
        opt.format = opt.command == "system" || opt.command == "dual" || opt.command == "ideal" ? "text" : "json";
    const auto stdin_uses = std::count(opt.files.begin(), opt.files.end(), "-") + (opt.dist == "-" ? 1 : 0);
    if (stdin_uses > 1) {
        err << "error: standard input can be read only once\n";
        return kInputError;
    }

    int status = kOk;
    for (const auto& file : opt.files) status = std::max(status, process(opt, file, out, err));
    return status;
}

}  // namespace maxtoric::cli
