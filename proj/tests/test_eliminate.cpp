#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "rabin/eliminate.hpp"
#include "rabin/oracle.hpp"
#include "rabin/resultant.hpp"

using namespace rabin;

TEST_CASE("single reduction step fixtures") {
    const PrimeModulus m(5);
    const MultiPoly a = MultiPoly::parse("x2 - x0", 3, m);
    const MultiPoly b = MultiPoly::parse("x2 - x1", 3, m);
    CHECK(rabin_step(a, b, 2) == MultiPoly::parse("x0 - x1", 3, m));
    CHECK(rabin_step(MultiPoly::parse("x0 - x2", 3, m), MultiPoly::parse("x2 + x0 - 2", 3, m),
                     2) == MultiPoly::parse("2 - 2*x0", 3, m));
    CHECK(rabin_step(a, a, 2).is_zero());
}

TEST_CASE("basis of the worked system eliminates down to one variable") {
    const PrimeModulus m(5);
    const std::vector<MultiPoly> sys = {MultiPoly::parse("x2 - x0", 3, m),
                                        MultiPoly::parse("x2 - x1", 3, m),
                                        MultiPoly::parse("x0 + x1 - 2", 3, m)};
    EliminationPlan plan;
    plan.variable_order = {2, 1};
    const RabinBasis basis = rabin_basis(sys, plan);
    REQUIRE(basis.size() == 1);
    CHECK(basis.generator(0).to_string() == "3*x0 + 2");  // = 2 - 2*x0 mod 5
    CHECK(basis.generator(0).degree_in(1) == 0);
    CHECK(basis.generator(0).degree_in(2) == 0);
    // the generator's root extends to the system's unique zero
    const auto zeros = brute_system_zeros(sys, m, 3);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0] == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(eval_partial(basis.generator(0), {{0, 1}}).constant_value() == 0);
    // provenance: three inputs, two derived nodes
    REQUIRE(basis.nodes.size() == 5);
    CHECK(basis.nodes[0].is_input());
    CHECK(basis.nodes[3].parent_a == 0);
    CHECK(basis.nodes[3].parent_b == 1);
    CHECK(basis.nodes[3].var == 2);
    CHECK(basis.nodes[4].var == 1);
    // log carries one tagged row per reduction
    REQUIRE(basis.log.rows.size() == 2);
    CHECK(basis.log.rows[0].method == "rabin-step");
    CHECK(basis.log.rows[0].step == 0);
    CHECK(basis.log.rows[1].step == 1);
    CHECK(basis.shared_factors.empty());
}

TEST_CASE("degenerate systems") {
    const PrimeModulus m(5);
    const MultiPoly f = MultiPoly::parse("x1^2 + x0", 2, m);
    // single polynomial: no pairs, echoed back
    const RabinBasis one = rabin_basis({f}, EliminationPlan::defaults(2));
    REQUIRE(one.size() == 1);
    CHECK(one.generator(0) == f);
    // identical pair: zero resultant reported, second element retained
    const RabinBasis dup = rabin_basis({f, f}, EliminationPlan::defaults(2));
    REQUIRE(dup.shared_factors.size() == 1);
    CHECK(dup.shared_factors[0].var == 1);
    REQUIRE(dup.size() == 1);
    CHECK(dup.generator(0) == f);
    CHECK_THROWS_AS(rabin_basis({}, EliminationPlan::defaults(2)), EmptySystem);
}

TEST_CASE("plan validation") {
    const PrimeModulus m(5);
    const std::vector<MultiPoly> sys = {MultiPoly::parse("x1 + x0", 2, m),
                                        MultiPoly::parse("x1 - x0", 2, m)};
    EliminationPlan bad_var;
    bad_var.variable_order = {7};
    CHECK_THROWS_AS(rabin_basis(sys, bad_var), VarOutOfRange);
    EliminationPlan repeated;
    repeated.variable_order = {1, 1};
    CHECK_THROWS_AS(rabin_basis(sys, repeated), ConfigOutOfRange);
    CHECK_THROWS_AS(rabin_basis({sys[0], MultiPoly::parse("x0", 1, m)},
                                EliminationPlan::defaults(2)),
                    ArityMismatch);
    CHECK_THROWS_AS(rabin_basis({sys[0], MultiPoly::parse("x1 + x0", 2, PrimeModulus(7))},
                                EliminationPlan::defaults(2)),
                    ModulusMismatch);
    CHECK(EliminationPlan::defaults(3).variable_order == std::vector<std::uint32_t>{2, 1, 0});
}

TEST_CASE("pair strategy reorders provenance but keeps the zero set") {
    const PrimeModulus m(7);
    const std::vector<MultiPoly> sys = {MultiPoly::parse("x1^3 + x0", 2, m),
                                        MultiPoly::parse("x1 + 2*x0", 2, m),
                                        MultiPoly::parse("x1^2 + 3", 2, m)};
    EliminationPlan in_order;
    in_order.variable_order = {1};
    EliminationPlan by_degree = in_order;
    by_degree.pair_strategy = PairStrategy::MinDegreeFirst;
    const RabinBasis b1 = rabin_basis(sys, in_order);
    const RabinBasis b2 = rabin_basis(sys, by_degree);
    // input-order pairs the degree-3 poly first; min-degree starts at degree 1
    CHECK(b1.nodes[3].parent_a == 0);
    CHECK(b2.nodes[3].parent_a == 1);
    // both bases vanish on every zero of the original system
    const auto zeros = brute_system_zeros(sys, m, 2);
    for (const RabinBasis* basis : {&b1, &b2}) {
        for (std::size_t i = 0; i < basis->size(); ++i) {
            for (const auto& z : zeros) {
                const MultiPoly v = eval_partial(basis->generator(i), {{0, z[0]}, {1, z[1]}});
                CHECK(v.constant_value() == 0);
            }
        }
    }
}

TEST_CASE("growth log serializes to csv") {
    TermGrowthLog log;
    log.rows.push_back({0, "rabin-step", 2, 5, 3, 0});
    log.rows.push_back({1, "expansion", 1, 12, 7, 42});
    const std::string csv = log.to_csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "step,method,var,terms,maxdeg,micros");
    std::getline(in, line);
    CHECK(line == "0,rabin-step,2,5,3,0");
    std::getline(in, line);
    CHECK(line == "1,expansion,1,12,7,42");
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("pseudo-remainder chain recovers planted common factors") {
    const PrimeModulus m(7);
    // (x - t)(x + 1) and (x - t)(x + 2) share exactly (x - t)
    const MultiPoly common = MultiPoly::parse("x1 - x0", 2, m);
    const MultiPoly a = common * MultiPoly::parse("x1 + 1", 2, m);
    const MultiPoly b = common * MultiPoly::parse("x1 + 2", 2, m);
    const auto [g, log] = eea_parametric_gcd(a, b, 1);
    CHECK_FALSE(g.is_zero());
    CHECK(g.degree_in(1) == 1);
    // the gcd-like output vanishes on the common factor's zero set x = t
    for (std::uint64_t t = 0; t < 7; ++t)
        CHECK(eval_partial(g, {{0, t}, {1, t}}).constant_value() == 0);
    // log: both inputs, each remainder, terminating zero, all tagged
    REQUIRE(log.rows.size() >= 3);
    for (const auto& r : log.rows) CHECK(r.method == "expansion");
    CHECK(log.rows[0].terms == a.term_count());
    CHECK(log.rows.back().terms == 0);
    CHECK(log.rows.back().maxdeg == -1);
}

TEST_CASE("pseudo-remainder chain endpoints") {
    const PrimeModulus m(7);
    const MultiPoly a = MultiPoly::parse("x1^2 + x0", 2, m);
    const MultiPoly b = MultiPoly::parse("x1 + 1", 2, m);
    // coprime pair: last nonzero remainder is free of the variable
    const auto [g1, log1] = eea_parametric_gcd(a, b, 1);
    CHECK(g1.degree_in(1) == 0);
    CHECK_FALSE(g1.is_zero());
    // divisor case: chain stops at the divisor itself
    const MultiPoly prod = a * b;
    const auto [g2, log2] = eea_parametric_gcd(prod, b, 1);
    CHECK(g2 == b);
    CHECK_THROWS_AS(eea_parametric_gcd(a, MultiPoly::zero(2, m), 1), ZeroDivisor);
    CHECK_THROWS_AS(eea_parametric_gcd(b, a, 1), ConfigOutOfRange);  // degree order
}

TEST_CASE("pseudo-remainder of linear pairs matches the resultant") {
    const PrimeModulus m(11);
    const MultiPoly a = MultiPoly::parse("(x0^2 + 3)*x1 + 2*x0", 2, m);
    const MultiPoly b = MultiPoly::parse("4*x0*x1 + x0 + 5", 2, m);
    const auto [g, log] = eea_parametric_gcd(a, b, 1);
    CHECK(g == -resultant(a, b, 1));
    CHECK(g.degree_in(1) == 0);
}

TEST_CASE("term cap truncates the chain") {
    const PrimeModulus m(31);
    const MultiPoly a =
        MultiPoly::parse("(x0^3 + x0 + 1)*x1^3 + (x0^2 + 2)*x1 + x0 + 5", 2, m);
    const MultiPoly b = MultiPoly::parse("(x0^2 + 3*x0)*x1^2 + (x0 + 7)*x1 + 2", 2, m);
    const auto [unbounded, full_log] = eea_parametric_gcd(a, b, 1);
    std::size_t peak = 0;
    for (const auto& r : full_log.rows) peak = std::max(peak, r.terms);
    REQUIRE(peak > 4);
    const auto [capped, capped_log] = eea_parametric_gcd(a, b, 1, 4);
    CHECK(capped_log.rows.back().method == "eea-capped");
    CHECK(capped_log.rows.size() < full_log.rows.size());
    CHECK(capped_log.rows.back().terms > 4);
}

TEST_CASE("timed chains fill the duration column") {
    const PrimeModulus m(31);
    const MultiPoly a = MultiPoly::parse("(x0^2 + 1)*x1^2 + x0*x1 + 3", 2, m);
    const MultiPoly b = MultiPoly::parse("(x0 + 2)*x1 + x0", 2, m);
    const auto [g0, plain] = eea_parametric_gcd(a, b, 1);
    for (const auto& r : plain.rows) CHECK(r.micros == 0);
    const auto [g1, timed] = eea_parametric_gcd(a, b, 1, 0, true);
    CHECK(g0 == g1);
    CHECK(timed.rows.size() == plain.rows.size());
}

TEST_CASE("growth benchmark is deterministic and complete") {
    GrowthBenchConfig cfg;
    cfg.degree = 2;
    cfg.terms = 2;
    cfg.arity = 2;
    cfg.p = 31;
    cfg.seed = 1;
    cfg.trials = 3;
    const TermGrowthLog log1 = bench_growth(cfg);
    const TermGrowthLog log2 = bench_growth(cfg);
    CHECK(log1.to_csv() == log2.to_csv());
    cfg.seed = 2;
    CHECK_FALSE(bench_growth(cfg).to_csv() == log1.to_csv());

    // every trial contributes expansion rows plus both resultant methods
    int expansion = 0, propagate = 0, interp = 0;
    for (const auto& r : log1.rows) {
        if (r.method == "expansion") ++expansion;
        if (r.method == "res-propagate") ++propagate;
        if (r.method == "res-interp") ++interp;
    }
    CHECK(expansion >= 3 * 3);
    CHECK(propagate == 3);
    CHECK(interp == 3);  // arity 2 admits interpolation
    // steps are globally renumbered
    for (std::size_t i = 0; i < log1.rows.size(); ++i) CHECK(log1.rows[i].step == i);

    // arity 3 drops the interpolation rows
    cfg.seed = 1;
    cfg.arity = 3;
    int interp3 = 0;
    for (const auto& r : bench_growth(cfg).rows)
        if (r.method == "res-interp") ++interp3;
    CHECK(interp3 == 0);
}

TEST_CASE("single-step benchmark agrees across methods") {
    // degree 1 in the eliminated variable: one pseudo-remainder equals the
    // resultant up to sign, so final term counts coincide
    GrowthBenchConfig cfg;
    cfg.degree = 1;
    cfg.terms = 2;
    cfg.arity = 2;
    cfg.p = 31;
    cfg.seed = 5;
    cfg.trials = 4;
    const TermGrowthLog log = bench_growth(cfg);
    std::size_t last_nonzero = 0, res_terms = 0;
    bool in_trial = false;
    for (const auto& r : log.rows) {
        if (r.method == "expansion" && r.terms > 0) last_nonzero = r.terms;
        if (r.method == "res-propagate") {
            res_terms = r.terms;
            CHECK(last_nonzero == res_terms);
            in_trial = true;
        }
        if (r.method == "res-interp" && in_trial) CHECK(r.terms == res_terms);
    }
}

TEST_CASE("benchmark configuration guards") {
    GrowthBenchConfig cfg;
    cfg.degree = 7;
    CHECK_THROWS_AS(bench_growth(cfg), ConfigOutOfRange);
    cfg.degree = 0;
    CHECK_THROWS_AS(bench_growth(cfg), ConfigOutOfRange);
    cfg.degree = 2;
    cfg.arity = 4;
    CHECK_THROWS_AS(bench_growth(cfg), ConfigOutOfRange);
    cfg.arity = 2;
    cfg.trials = 0;
    CHECK_THROWS_AS(bench_growth(cfg), ConfigOutOfRange);
    cfg.trials = 1;
    cfg.terms = 0;
    CHECK_THROWS_AS(bench_growth(cfg), ConfigOutOfRange);
}
