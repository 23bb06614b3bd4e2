#pragma once

// Dense univariate polynomials over a prime field.  Coefficients are stored
// as least nonnegative residues, index = exponent, leading coefficient
// nonzero (the zero polynomial has an empty coefficient vector, degree -1).

#include <cstdint>
#include <utility>
#include <vector>

#include "rabin/ff.hpp"

namespace rabin {

class UniPoly {
  public:
    explicit UniPoly(const PrimeModulus& m) : mod_(m) {}
    UniPoly(const PrimeModulus& m, std::vector<std::uint64_t> coeffs);

    static UniPoly zero(const PrimeModulus& m) { return UniPoly(m); }
    static UniPoly constant(const PrimeModulus& m, std::uint64_t c);
    // c * x^e
    static UniPoly monomial(const PrimeModulus& m, std::uint64_t c, std::size_t e);

    const PrimeModulus& modulus() const { return mod_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const;
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return mod_ == o.mod_ && c_ == o.c_; }

    UniPoly scaled(std::uint64_t c) const;
    // self * x^e
    UniPoly shifted(std::size_t e) const;
    UniPoly monic() const;

    FieldElement eval(const FieldElement& x) const;  // Horner
    std::string to_string(const std::string& var = "x0") const;

  private:
    void trim();
    void check(const UniPoly& o) const {
        if (!(mod_ == o.mod_)) throw ModulusMismatch("polynomials over different moduli");
    }

    PrimeModulus mod_;
    std::vector<std::uint64_t> c_;
};

// quotient/remainder with deg(rem) < deg(den); DivisionByZero on den == 0
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

// monic gcd; gcd(f, 0) = monic(f); BothZero when both vanish
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly derivative(const UniPoly& f);

// Largest squarefree divisor (same root set, every root simple).  Handles the
// characteristic-p collapse g' == 0 by taking p-th roots of the exponents.
UniPoly squarefree_part(const UniPoly& g);

// One round of the repeated-squaring ladder: the residues base^(2^i) mod phi
// and the assembled base^p mod phi.
struct FrobeniusRound {
    std::vector<UniPoly> squarings;
    UniPoly result;
};
struct FrobeniusTranscript {
    std::vector<FrobeniusRound> rounds;
};

// x^(p^d) mod phi via d rounds of p-th powering, each by square-and-multiply.
UniPoly frobenius_power(const UniPoly& phi, unsigned d, FrobeniusTranscript* transcript = nullptr);

// base^e mod phi
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& phi);

// Determinant of the univariate Sylvester matrix; convention pinned by
// resultant(x - a, x - b) = a - b.
UniPoly resultant(const UniPoly& f, const UniPoly& g);
FieldElement resultant_value(const UniPoly& f, const UniPoly& g);

// Unique interpolant of degree < #points; DuplicateAbscissa on repeats.
UniPoly interpolate(const PrimeModulus& m,
                    const std::vector<std::pair<FieldElement, FieldElement>>& points);

// Irreducibility over GF(p): no factor of degree <= deg(f)/2, detected via
// gcd(f, x^(p^k) - x).  Requires f monic, deg >= 1.
bool is_irreducible(const UniPoly& f);

}  // namespace rabin
