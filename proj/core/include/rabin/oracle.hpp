#pragma once

// Brute-force ground truth: extension fields GF(p^d) as polynomial residues
// modulo a random monic irreducible, and exhaustive root searches used to
// cross-check the algebraic pipeline.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rabin/mpoly.hpp"
#include "rabin/upoly.hpp"

namespace rabin {

// Element of GF(p^d): residue coefficients, lowest degree first, length d.
using ExtElem = std::vector<std::uint64_t>;

class ExtField {
  public:
    // Searches seed-deterministically for a monic irreducible of degree d;
    // BudgetExhausted after 64*d failed candidates, EnumerationTooLarge when
    // p^d > 10^6.
    ExtField(const PrimeModulus& m, std::uint32_t d, std::uint64_t seed);

    const PrimeModulus& modulus() const { return mod_; }
    std::uint32_t ext_degree() const { return d_; }
    const UniPoly& modulus_poly() const { return modpoly_; }
    std::uint64_t size() const { return size_; }

    ExtElem zero() const { return ExtElem(d_, 0); }
    ExtElem one() const { return from_base(1); }
    ExtElem from_base(std::uint64_t c) const;
    // index in [0, p^d): base-p digits become coefficients
    ExtElem element_at(std::uint64_t index) const;

    bool is_zero(const ExtElem& a) const;
    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem inv(const ExtElem& a) const;
    ExtElem pow(const ExtElem& a, std::uint64_t e) const;

    // f with base-field coefficients evaluated at an extension point
    ExtElem eval_base_poly(const UniPoly& f, const ExtElem& x) const;

    // smallest e with a^(p^e) = a; divides d
    std::uint32_t minimal_degree(const ExtElem& a) const;

    std::string to_string(const ExtElem& a) const;

  private:
    PrimeModulus mod_;
    std::uint32_t d_;
    std::uint64_t size_;
    UniPoly modpoly_;
};

struct BivariateRootReport {
    long distinct_t = 0;
    // degree of the extension -> count of t-values of exactly that degree
    std::map<std::uint32_t, long> exact;
    // one witness (t rendered as text, x0) per counted t-value
    std::vector<std::pair<std::string, std::uint64_t>> witnesses;
};

// Count t in GF(p^d), d <= dmax, of exact degree d, admitting x0 in GF(p)
// with f(t, x0) = 0.  f must be bivariate (arity 2, t = x0, x = x1).
BivariateRootReport brute_bivariate_roots(const MultiPoly& f, std::uint32_t dmax,
                                          std::uint64_t seed = 1);

struct CommonRootWitness {
    std::uint32_t ext_degree;
    std::string root;
};

// Smallest-degree extension element zeroing both polynomials, if any exists
// with degree <= kmax.
std::optional<CommonRootWitness> brute_common_root(const UniPoly& a, const UniPoly& b,
                                                   std::uint32_t kmax, std::uint64_t seed = 1);

// All common zeros of a polynomial system over GF(p)^n by full enumeration;
// requires p^n <= 10^6.  An empty system constrains nothing, so every point
// qualifies; arity fixes n (system members must match it).
std::vector<std::vector<std::uint64_t>> brute_system_zeros(const std::vector<MultiPoly>& system,
                                                           const PrimeModulus& m,
                                                           std::uint32_t arity);

}  // namespace rabin
