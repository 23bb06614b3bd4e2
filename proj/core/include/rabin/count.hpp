#pragma once

// Root counting for bivariate f(t, x) over GF(p): eliminate x against
// x^p - x, read distinct parameter values off the squarefree part, count per
// extension degree through Frobenius gcds, and decide nonvanishing on the
// full affine plane.  Every gcd computation can be emitted as a checkable
// step-by-step derivation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rabin/mpoly.hpp"

namespace rabin {

// f = a_0(t) + a_1(t) x + ... + x^n with t = x0, x = x1; monic in x, n >= 1.
// m is the largest t-degree among the a_i.  strict additionally requires
// every a_i nonzero and exactly one of degree m.
struct BivariateInstance {
    MultiPoly f;
    long n;
    long m;
    bool strict;

    static BivariateInstance make(const MultiPoly& f, bool strict = false);
};

enum class GRoute { Product, Sylvester };

// Resultant of f and x^p - x in x, as a polynomial in t.  The product route
// multiplies the p specializations f(t, c) and applies the determinant sign
// (-1)^(n*p); the sylvester route evaluates the (p+n)-dimensional determinant
// directly.  Both return identical polynomials.
UniPoly build_g(const BivariateInstance& inst, GRoute route = GRoute::Product);

// Step list for gcd(phi, x^(p^d) - x): the repeated-squaring residues and
// assembled result per round, then the Euclidean remainder chain down to the
// terminating zero.
struct GcdDerivation {
    std::uint64_t p;
    std::uint32_t rounds;
    UniPoly modulus_poly;
    FrobeniusTranscript frobenius;
    std::vector<UniPoly> euclid;  // r0 = phi, r1 = x^(p^d) - x mod phi, ..., 0
    UniPoly gcd;                  // monic form of the last nonzero remainder

    // total stored field elements (coefficient count over all steps)
    std::size_t element_count() const;
};

GcdDerivation frobenius_gcd_derivation(const UniPoly& phi, std::uint32_t d);

// the d = 1 chain: gcd(f, x^p - x)
GcdDerivation emit_gcd_derivation(const UniPoly& f);

// Recomputes every step of the derivation from its predecessors and checks
// it against the recorded value.
bool verify_gcd_derivation(const GcdDerivation& t);

// JSON object with the modulus, per-round squarings and results, the
// remainder chain, and the gcd, all in canonical polynomial text.
std::string to_json(const GcdDerivation& t);

int moebius(std::uint64_t k);

struct CountReport {
    std::uint64_t p;
    long n;
    long m;
    UniPoly g;
    UniPoly squarefree;
    long distinct_t;
    std::map<long, long> cumulative;  // d -> C_d, values of t in GF(p^d)
    std::map<long, long> exact;       // d -> E_d, values of minimal degree d
    std::vector<GcdDerivation> transcripts;

    std::size_t transcript_len() const;
    std::string to_json(bool include_transcript = false) const;
};

// g, its squarefree part, and the number of distinct t (over the algebraic
// closure) admitting x in GF(p) with f(t, x) = 0.
CountReport count_distinct_t(const BivariateInstance& inst, GRoute route = GRoute::Product);

// Adds C_d = deg gcd(squarefree, t^(p^d) - t) for d = 1..dmax and the exact
// counts E_d by Moebius inversion, with one derivation transcript per d.
CountReport per_degree_counts(const BivariateInstance& inst, long dmax,
                              GRoute route = GRoute::Product);

struct DecideResult {
    bool no_zero;
    UniPoly g;
    // absent when g is constant (or zero): there is no gcd chain to show
    std::optional<GcdDerivation> transcript;
};

// Whether f(t, x) != 0 for all (t, x) in GF(p)^2: build g, then test
// gcd(g, t^p - t) constant.
DecideResult decide_no_zero(const BivariateInstance& inst);

}  // namespace rabin
