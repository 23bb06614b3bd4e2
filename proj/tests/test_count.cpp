#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rabin/count.hpp"
#include "rabin/oracle.hpp"

using namespace rabin;

namespace {

// monic-in-x instance with random coefficients a_i(t), deg a_i <= m
BivariateInstance random_instance(std::mt19937_64& rng, const PrimeModulus& m,
                                  std::uint32_t n, std::uint32_t mm) {
    MultiPoly f = MultiPoly::monomial(2, m, 1, {0, n});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t k = 0; k <= mm; ++k)
            f = f + MultiPoly::monomial(2, m, rng() % m.value(), {k, i});
    return BivariateInstance::make(f);
}

}  // namespace

TEST_CASE("instance validation") {
    const PrimeModulus m(5);
    const BivariateInstance inst = BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, m));
    CHECK(inst.n == 2);
    CHECK(inst.m == 1);
    CHECK_FALSE(inst.strict);
    CHECK_THROWS_AS(BivariateInstance::make(MultiPoly::parse("x0", 1, m)), ArityMismatch);
    CHECK_THROWS_AS(BivariateInstance::make(MultiPoly::zero(2, m)), ZeroPolynomial);
    // not monic in x
    CHECK_THROWS_AS(BivariateInstance::make(MultiPoly::parse("2*x1^2 + 1", 2, m)), NotMonic);
    CHECK_THROWS_AS(BivariateInstance::make(MultiPoly::parse("x0*x1^2 + 1", 2, m)), NotMonic);
    // no x at all
    CHECK_THROWS_AS(BivariateInstance::make(MultiPoly::parse("x0^2 + 1", 2, m)), NotMonic);
    // strict requires every a_i nonzero with exactly one of degree m
    CHECK(BivariateInstance::make(MultiPoly::parse("x1^2 + x1 + x0^2 + 1", 2, m), true).strict);
    CHECK_THROWS_AS(
        BivariateInstance::make(MultiPoly::parse("x1^2 + x0^2 + 1", 2, m), true),
        ConditionViolated);  // a_1 = 0
    CHECK_THROWS_AS(
        BivariateInstance::make(MultiPoly::parse("x1^2 + x0^2*x1 + x0^2 + 1", 2, m), true),
        ConditionViolated);  // two coefficients of degree m
}

TEST_CASE("eliminant fixtures") {
    const PrimeModulus m(5);
    const BivariateInstance inst = BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, m));
    const UniPoly g = build_g(inst, GRoute::Product);
    CHECK(g.degree() == 5);  // m*p exactly
    // +-t(1-t)^2(4-t)^2: vanishes exactly at the squares 0, 1, 4
    const UniPoly t = UniPoly::monomial(m, 1, 1);
    const UniPoly shape = t * (UniPoly::constant(m, 1) - t) * (UniPoly::constant(m, 1) - t) *
                          (UniPoly::constant(m, 4) - t) * (UniPoly::constant(m, 4) - t);
    CHECK((g == shape || g == -shape));
    CHECK(build_g(inst, GRoute::Sylvester) == g);

    const BivariateInstance quad =
        BivariateInstance::make(MultiPoly::parse("x1 - (x0^2 - 2)", 2, m));
    CHECK(build_g(quad, GRoute::Product).degree() == 10);  // five degree-2 factors
}

TEST_CASE("routes agree exactly on random instances") {
    std::mt19937_64 rng(30);
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
        const PrimeModulus m(p);
        for (int i = 0; i < 8; ++i) {
            const std::uint32_t n = 1 + rng() % 4;
            const BivariateInstance inst = random_instance(rng, m, n, 1 + rng() % 2);
            CHECK(build_g(inst, GRoute::Sylvester) == build_g(inst, GRoute::Product));
        }
    }
}

TEST_CASE("route guards") {
    const PrimeModulus m(31);
    const BivariateInstance inst = BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, m));
    CHECK_THROWS_AS(build_g(inst, GRoute::Sylvester), DimensionTooLarge);  // 31 + 2 > 16
    const PrimeModulus big(8209);
    const BivariateInstance inst2 =
        BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, big));
    CHECK_THROWS_AS(build_g(inst2, GRoute::Product), ConfigOutOfRange);
}

TEST_CASE("distinct parameter counting fixtures") {
    const PrimeModulus m5(5), m7(7);
    CHECK(count_distinct_t(BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, m5)))
              .distinct_t == 3);
    CHECK(count_distinct_t(BivariateInstance::make(MultiPoly::parse("x1 - x0", 2, m5)))
              .distinct_t == 5);
    CHECK(count_distinct_t(BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, m7)))
              .distinct_t == 4);
}

TEST_CASE("per-degree counts and moebius inversion") {
    const PrimeModulus m(5);
    const BivariateInstance inst =
        BivariateInstance::make(MultiPoly::parse("x1 - (x0^2 - 2)", 2, m));
    const CountReport r = per_degree_counts(inst, 2);
    CHECK(r.cumulative.at(1) == 5);
    CHECK(r.cumulative.at(2) == 9);
    CHECK(r.exact.at(1) == 5);
    CHECK(r.exact.at(2) == 4);
    CHECK(r.distinct_t == 9);
    // E_1 = C_1 always
    const CountReport s =
        per_degree_counts(BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, m)), 1);
    CHECK(s.exact.at(1) == s.cumulative.at(1));
    CHECK(s.cumulative.at(1) == 3);
    CHECK_THROWS_AS(per_degree_counts(inst, 0), ConfigOutOfRange);
}

TEST_CASE("constant eliminant yields empty counts") {
    const PrimeModulus m(5);
    // no t anywhere: g is a nonzero constant, no parameter values at all
    const BivariateInstance inst =
        BivariateInstance::make(MultiPoly::parse("x1^2 + x1 + 1", 2, m));
    const CountReport r = per_degree_counts(inst, 2);
    CHECK(r.distinct_t == 0);
    CHECK(r.cumulative.at(1) == 0);
    CHECK(r.exact.at(2) == 0);
}

TEST_CASE("zero eliminant propagates") {
    const PrimeModulus m(5);
    // f(t, 0) = 0 identically makes the product vanish
    const BivariateInstance inst = BivariateInstance::make(MultiPoly::parse("x1", 2, m));
    CHECK(build_g(inst, GRoute::Product).is_zero());
    CHECK_THROWS_AS(count_distinct_t(inst), ZeroPolynomial);
    // the decision procedure instead reports a zero directly
    const DecideResult d = decide_no_zero(inst);
    CHECK_FALSE(d.no_zero);
    CHECK_FALSE(d.transcript.has_value());
}

TEST_CASE("counts match the exhaustive oracle") {
    std::mt19937_64 rng(31);
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        const PrimeModulus m(p);
        for (int i = 0; i < 6; ++i) {
            const std::uint32_t n = 1 + rng() % 3;
            const std::uint32_t mm = 1 + rng() % 2;
            const BivariateInstance inst = random_instance(rng, m, n, mm);
            UniPoly g = build_g(inst, GRoute::Product);
            if (g.is_zero()) continue;  // every t works; counting is undefined
            const long dmax = std::max(1L, inst.m);
            const CountReport r = per_degree_counts(inst, dmax);
            const BivariateRootReport oracle =
                brute_bivariate_roots(inst.f, static_cast<std::uint32_t>(dmax));
            CHECK(r.distinct_t == oracle.distinct_t);
            long seen = 0;
            for (long d = 1; d <= dmax; ++d) {
                const auto it = oracle.exact.find(static_cast<std::uint32_t>(d));
                const long want = it == oracle.exact.end() ? 0 : it->second;
                CHECK(r.exact.at(d) == want);
                seen += want;
            }
            CHECK(r.distinct_t == seen);
        }
    }
}

TEST_CASE("decision fixtures") {
    const PrimeModulus m(5);
    CHECK_FALSE(
        decide_no_zero(BivariateInstance::make(MultiPoly::parse("x1^2 - x0", 2, m))).no_zero);
    CHECK_FALSE(decide_no_zero(BivariateInstance::make(MultiPoly::parse("x1 - x0", 2, m)))
                    .no_zero);
    const DecideResult yes = decide_no_zero(
        BivariateInstance::make(MultiPoly::parse("x1^2 + x1 + 1 + x0^5 - x0", 2, m)));
    CHECK(yes.no_zero);
    REQUIRE(yes.transcript.has_value());
    CHECK(verify_gcd_derivation(*yes.transcript));
    // exhaustive cross-check of the three fixtures
    for (const char* text : {"x1^2 - x0", "x1 - x0", "x1^2 + x1 + 1 + x0^5 - x0"}) {
        const MultiPoly f = MultiPoly::parse(text, 2, m);
        bool found = false;
        for (std::uint64_t t = 0; t < 5 && !found; ++t)
            for (std::uint64_t x = 0; x < 5 && !found; ++x)
                found = eval_partial(f, {{0, t}, {1, x}}).constant_value() == 0;
        CHECK(decide_no_zero(BivariateInstance::make(f)).no_zero == !found);
    }
    const PrimeModulus big(103);
    CHECK_THROWS_AS(
        decide_no_zero(BivariateInstance::make(MultiPoly::parse("x1^2 + 1", 2, big))),
        ConfigOutOfRange);
}

TEST_CASE("derivation transcript fixtures") {
    const PrimeModulus m(7);
    // x^2 + 1 over GF(7): squarings are the constants -1 and 1, x^7 = 6x
    const GcdDerivation d = emit_gcd_derivation(UniPoly(m, {1, 0, 1}));
    REQUIRE(d.frobenius.rounds.size() == 1);
    REQUIRE(d.frobenius.rounds[0].squarings.size() == 2);
    CHECK(d.frobenius.rounds[0].squarings[0] == UniPoly::constant(m, 6));
    CHECK(d.frobenius.rounds[0].squarings[1] == UniPoly::constant(m, 1));
    CHECK(d.frobenius.rounds[0].result == UniPoly(m, {0, 6}));
    CHECK(d.gcd == UniPoly::constant(m, 1));
    CHECK(verify_gcd_derivation(d));
    // x^7 - x: the gcd is the modulus itself
    const UniPoly xpx = UniPoly::monomial(m, 1, 7) - UniPoly::monomial(m, 1, 1);
    const GcdDerivation d2 = emit_gcd_derivation(xpx);
    CHECK(d2.gcd == xpx.monic());
    CHECK(verify_gcd_derivation(d2));
    CHECK(d2.element_count() > 0);
}

TEST_CASE("verification rejects tampering") {
    const PrimeModulus m(11);
    GcdDerivation d = emit_gcd_derivation(UniPoly(m, {3, 1, 0, 0, 1}));
    REQUIRE(verify_gcd_derivation(d));
    GcdDerivation bad = d;
    bad.gcd = bad.gcd + UniPoly::constant(m, 1);
    CHECK_FALSE(verify_gcd_derivation(bad));
    bad = d;
    REQUIRE_FALSE(bad.frobenius.rounds.empty());
    bad.frobenius.rounds[0].result = bad.frobenius.rounds[0].result + UniPoly::constant(m, 1);
    CHECK_FALSE(verify_gcd_derivation(bad));
    bad = d;
    REQUIRE(bad.frobenius.rounds[0].squarings.size() >= 2);
    std::swap(bad.frobenius.rounds[0].squarings[0], bad.frobenius.rounds[0].squarings[1]);
    CHECK_FALSE(verify_gcd_derivation(bad));
    bad = d;
    bad.euclid.pop_back();  // drop the terminating zero
    CHECK_FALSE(verify_gcd_derivation(bad));
    bad = d;
    bad.p = 13;
    CHECK_FALSE(verify_gcd_derivation(bad));
}

TEST_CASE("moebius values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(3) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(moebius(210) == 1);
}

TEST_CASE("report serialization") {
    const PrimeModulus m(5);
    const BivariateInstance inst =
        BivariateInstance::make(MultiPoly::parse("x1 - (x0^2 - 2)", 2, m));
    const CountReport r = per_degree_counts(inst, 2);
    const std::string plain = r.to_json(false);
    CHECK(plain.find("\"schema\":\"1\"") != std::string::npos);
    CHECK(plain.find("\"distinct_t\":9") != std::string::npos);
    CHECK(plain.find("transcript\"") == std::string::npos);
    const std::string full = r.to_json(true);
    CHECK(full.find("\"transcript\"") != std::string::npos);
    CHECK(full.size() > plain.size());
    // transcripts embedded in the report re-verify
    for (const auto& t : r.transcripts) CHECK(verify_gcd_derivation(t));
    CHECK(r.transcript_len() > 0);
}
