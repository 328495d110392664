#include "maxtoric/maxent/fit.hpp"
#include "maxtoric/maxent/solve_algebraic.hpp"
#include "maxtoric/ratpoly/groebner.hpp"
#include "maxtoric/toric/toric_model.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace maxtoric;

namespace {

std::vector<ratpoly::Polynomial> random_ideal(std::mt19937_64& rng, std::size_t nvars, int gens) {
    const std::vector<std::string> names{"x", "y", "z"};
    const std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(nvars));
    std::uniform_int_distribution<int> coef(-5, 5), exp(0, 3), terms(2, 4);
    std::vector<ratpoly::Polynomial> out;
    for (int g = 0; g < gens; ++g) {
        ratpoly::Polynomial f(vars);
        for (int t = terms(rng); t > 0; --t) {
            ratpoly::ExponentVector e(nvars);
            int budget = 3;
            for (auto& x : e) {
                x = std::min(exp(rng), budget);
                budget -= x;
            }
            f.add_term(e, Rational(coef(rng)));
        }
        out.push_back(std::move(f));
    }
    return out;
}

void BM_BuchbergerRandom(benchmark::State& state) {
    const auto nvars = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(42);
    std::vector<std::vector<ratpoly::Polynomial>> ideals;
    for (int k = 0; k < 16; ++k) ideals.push_back(random_ideal(rng, nvars, 3));
    const auto ord = ratpoly::MonomialOrder::grevlex(nvars);
    std::size_t k = 0;
    for (auto _ : state) {
        auto gb = ratpoly::buchberger(ideals[k++ % ideals.size()], ord);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_BuchbergerRandom)->Arg(2)->Arg(3);

void BM_ToricIdealTwistedCurve(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::vector<std::int64_t> powers;
    for (std::size_t j = 0; j < m; ++j) powers.push_back(static_cast<std::int64_t>(j));
    const auto a = toric::ConstraintMatrix::from_rows({std::vector<std::int64_t>(m, 1), powers});
    for (auto _ : state) {
        auto gens = toric::toric_ideal_generators(a);
        benchmark::DoNotOptimize(gens);
    }
}
BENCHMARK(BM_ToricIdealTwistedCurve)->DenseRange(4, 6);

void BM_FitDice(benchmark::State& state) {
    const auto solver = static_cast<maxent::Solver>(state.range(0));
    const auto problem = maxent::MaxEntProblem::with_targets(
        toric::ConstraintMatrix::from_rows({{1, 2, 3, 4, 5, 6}}), {Rational(9, 2)});
    for (auto _ : state) {
        auto r = maxent::fit_numeric(problem, solver);
        benchmark::DoNotOptimize(r);
    }
    state.SetLabel(maxent::to_string(solver));
}
BENCHMARK(BM_FitDice)
    ->Arg(static_cast<int>(maxent::Solver::gis))
    ->Arg(static_cast<int>(maxent::Solver::newton));

void BM_FitAlgebraicQuadratic(benchmark::State& state) {
    const auto problem = maxent::MaxEntProblem::with_targets(toric::ConstraintMatrix::from_rows({{0, 1, 2}}),
                                                             {Rational(1, 2)});
    for (auto _ : state) {
        auto r = maxent::fit_algebraic(problem, ratpoly::MonomialOrder::lex(1));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FitAlgebraicQuadratic);

}  // namespace

BENCHMARK_MAIN();
