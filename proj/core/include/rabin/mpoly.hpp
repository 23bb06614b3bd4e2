#pragma once

// Sparse multivariate polynomials over a prime field.  Terms map an exponent
// vector (one entry per variable) to a nonzero residue and are kept in
// descending graded-lex order, so begin() is the leading term and rendering
// is canonical.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rabin/ff.hpp"
#include "rabin/upoly.hpp"

namespace rabin {

inline constexpr std::uint32_t kMaxExponent = 0x7fffffff;

using ExponentVec = std::vector<std::uint32_t>;

// a before b when deg(a) > deg(b), ties broken lexicographically from x0.
struct GradedLexDesc {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

class MultiPoly {
  public:
    using TermMap = std::map<ExponentVec, std::uint64_t, GradedLexDesc>;

    MultiPoly(std::uint32_t arity, const PrimeModulus& m);

    static MultiPoly zero(std::uint32_t arity, const PrimeModulus& m) {
        return MultiPoly(arity, m);
    }
    static MultiPoly constant(std::uint32_t arity, const PrimeModulus& m, std::uint64_t c);
    static MultiPoly monomial(std::uint32_t arity, const PrimeModulus& m, std::uint64_t c,
                              const ExponentVec& e);
    // Text grammar: sum of terms, each a '*'-joined product of an optional
    // integer coefficient, variables x<k> ('t' = x0, bare 'x' = x1) with
    // optional '^' powers, and parenthesized subexpressions; '-' allowed as
    // term connective and leading sign.
    static MultiPoly parse(const std::string& text, std::uint32_t arity, const PrimeModulus& m);

    std::uint32_t arity() const { return arity_; }
    const PrimeModulus& modulus() const { return mod_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term as a residue (the value of a constant polynomial)
    std::uint64_t constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    long degree_in(std::uint32_t var) const;
    long total_degree() const;
    std::uint64_t coeff(const ExponentVec& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly scaled(std::uint64_t c) const;
    // self * c * prod x_i^{e_i}
    MultiPoly times_monomial(std::uint64_t c, const ExponentVec& e) const;

    std::string to_string() const;

  private:
    void add_term(const ExponentVec& e, std::uint64_t c);

    std::uint32_t arity_;
    PrimeModulus mod_;
    TermMap terms_;

    friend MultiPoly eval_partial(const MultiPoly&, const std::map<std::uint32_t, std::uint64_t>&);
};

// Coefficient view in one variable: element i is the coefficient of var^i, a
// polynomial of the same arity with exponent 0 at var.  Size = degree_in + 1
// (empty for the zero polynomial).
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::uint32_t var);

// Substitute values for a subset of variables; arity is preserved.
MultiPoly eval_partial(const MultiPoly& f, const std::map<std::uint32_t, std::uint64_t>& bindings);

// Conversions for polynomials that are univariate in `var`.
UniPoly to_unipoly(const MultiPoly& f, std::uint32_t var);
MultiPoly from_unipoly(const UniPoly& f, std::uint32_t arity, std::uint32_t var);

}  // namespace rabin
