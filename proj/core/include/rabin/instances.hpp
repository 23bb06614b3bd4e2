#pragma once

// Constructions of provably (or plausibly) nonvanishing sparse polynomials
// over GF(p), and the pairwise nonvanishing decision procedures.

#include <cstdint>
#include <utility>
#include <vector>

#include "rabin/upoly.hpp"

namespace rabin {

// One factor gamma * x^r - delta.
struct SparseFactor {
    std::uint64_t gamma;
    std::uint64_t delta;
    std::uint64_t r;
};

struct SparsePolySpec {
    PrimeModulus p;
    std::vector<SparseFactor> factors;
};

// Expanded product of the factors with every positive exponent reduced into
// [1, p-1] (the reduction preserves values on all of GF(p), zero included).
// Each factor must satisfy gcd(r, p-1) > 1 and (gamma^-1 delta)^((p-1)/gcd)
// != 1, which makes the factor rootless on GF(p)*; the constant term
// prod(-delta) keeps it nonzero at 0.
UniPoly gen_nonresidue_product(const SparsePolySpec& spec);

// Integer-coefficient sparse polynomial plus its mod-p reduction.  The
// integer view satisfies the classical irreducibility test at pi; nothing is
// claimed about roots of the mod-p view.
struct EisensteinPoly {
    // (exponent, coefficient), ascending exponents; the leading coefficient
    // is 1, interior ones are multiples of pi, the constant term is pi times
    // a unit mod pi
    std::vector<std::pair<std::uint32_t, std::int64_t>> z_terms;
    UniPoly mod_p;
};

EisensteinPoly gen_eisenstein_sparse(std::uint64_t p, std::uint64_t pi,
                                     const std::vector<std::uint32_t>& exponents,
                                     std::uint64_t seed);

// pi does not divide the leading coefficient, divides every other one, and
// its square does not divide the (nonzero) constant term.
bool eisenstein_holds(const std::vector<std::pair<std::uint32_t, std::int64_t>>& z_terms,
                      std::uint64_t pi);

// h(x^r) with exponents reduced into [1, p-1]; requires gcd(r, p-1) = 1 and
// h rootless on GF(p).  x -> x^r then permutes GF(p)*, so the output is
// rootless too.
UniPoly gen_substitution(const UniPoly& h, std::uint64_t r);

// true iff f and g share no root in GF(p)
bool decide_pair_nonvanishing(const UniPoly& f, const UniPoly& g);

// true iff f has no root in the order-nu subgroup of GF(p)*; nu must divide
// p-1
bool check_nonvanishing(const UniPoly& f, std::uint64_t nu);

}  // namespace rabin
