#include <benchmark/benchmark.h>

#include <random>

#include "rabin/count.hpp"
#include "rabin/eliminate.hpp"
#include "rabin/resultant.hpp"

namespace {

using namespace rabin;

MultiPoly random_pair_member(std::mt19937_64& rng, std::uint32_t arity, std::uint32_t var,
                             std::uint32_t deg, std::uint32_t terms, const PrimeModulus& m) {
    MultiPoly out = MultiPoly::zero(arity, m);
    for (std::uint32_t k = 0; k <= deg; ++k) {
        for (std::uint32_t j = 0; j < terms; ++j) {
            std::vector<std::uint32_t> e(arity, 0);
            e[var] = k;
            for (std::uint32_t v = 0; v < arity; ++v)
                if (v != var) e[v] = static_cast<std::uint32_t>(rng() % (deg + 1));
            const std::uint64_t c = 1 + rng() % (m.value() - 1);
            out = out + MultiPoly::monomial(arity, m, c, e);
        }
    }
    return out;
}

void bm_resultant(benchmark::State& state, Strategy strategy) {
    const PrimeModulus m(31);
    std::mt19937_64 rng(7);
    const std::uint32_t deg = static_cast<std::uint32_t>(state.range(0));
    const MultiPoly a = random_pair_member(rng, 2, 1, deg, 2, m);
    const MultiPoly b = random_pair_member(rng, 2, 1, deg, 2, m);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(a, b, 1, strategy));
}

void bm_res_leibniz(benchmark::State& state) { bm_resultant(state, Strategy::Leibniz); }
void bm_res_propagate(benchmark::State& state) { bm_resultant(state, Strategy::Propagate); }
void bm_res_interp(benchmark::State& state) { bm_resultant(state, Strategy::Interp); }

BENCHMARK(bm_res_leibniz)->DenseRange(1, 4);
BENCHMARK(bm_res_propagate)->DenseRange(1, 6);
BENCHMARK(bm_res_interp)->DenseRange(1, 6);

void bm_eea(benchmark::State& state) {
    const PrimeModulus m(31);
    std::mt19937_64 rng(7);
    const std::uint32_t deg = static_cast<std::uint32_t>(state.range(0));
    const MultiPoly a = random_pair_member(rng, 2, 1, deg, 2, m);
    const MultiPoly b = random_pair_member(rng, 2, 1, deg, 2, m);
    for (auto _ : state) benchmark::DoNotOptimize(eea_parametric_gcd(a, b, 1, 100000));
}

BENCHMARK(bm_eea)->DenseRange(1, 5);

void bm_build_g(benchmark::State& state) {
    const PrimeModulus m(static_cast<std::uint64_t>(state.range(0)));
    const MultiPoly f = MultiPoly::parse("x1^2 - x0", 2, m);
    const BivariateInstance inst = BivariateInstance::make(f);
    for (auto _ : state) benchmark::DoNotOptimize(build_g(inst, GRoute::Product));
}

BENCHMARK(bm_build_g)->Arg(31)->Arg(101)->Arg(1009);

void bm_per_degree(benchmark::State& state) {
    const PrimeModulus m(31);
    const MultiPoly f = MultiPoly::parse("x1^2 - (x0^3 + 2*x0 + 1)", 2, m);
    const BivariateInstance inst = BivariateInstance::make(f);
    for (auto _ : state) benchmark::DoNotOptimize(per_degree_counts(inst, 3));
}

BENCHMARK(bm_per_degree);

}  // namespace

BENCHMARK_MAIN();
