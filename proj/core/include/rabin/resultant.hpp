#pragma once

// Parametric resultants: the Sylvester matrix of two multivariate polynomials
// read as univariate in one variable, and three determinant strategies that
// agree exactly (expansion, incremental propagation, evaluation/interpolation).

#include <cstdint>
#include <vector>

#include "rabin/mpoly.hpp"

namespace rabin {

class SylvesterMatrix {
  public:
    // Layout: deg_var(b) rows of a's coefficients (highest first), then
    // deg_var(a) rows of b's, each block shifted right by its row index.
    // The convention makes resultant(x - a, x - b) = a - b.
    static SylvesterMatrix build(const MultiPoly& a, const MultiPoly& b, std::uint32_t var);

    std::size_t dim() const { return dim_; }
    std::uint32_t var() const { return var_; }
    long deg_a() const { return deg_a_; }
    long deg_b() const { return deg_b_; }
    const MultiPoly& entry(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    const std::vector<std::vector<MultiPoly>>& rows() const { return rows_; }

  private:
    SylvesterMatrix() = default;
    std::size_t dim_ = 0;
    std::uint32_t var_ = 0;
    long deg_a_ = 0, deg_b_ = 0;
    std::vector<std::vector<MultiPoly>> rows_;
};

// num/den over the polynomial ring; den never zero.  Reduction cancels only
// the common monomial content and normalizes the denominator's leading
// coefficient to 1; no polynomial gcd is attempted.
class PolyFraction {
  public:
    PolyFraction(MultiPoly num, MultiPoly den);
    static PolyFraction from_poly(const MultiPoly& p);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    PolyFraction operator+(const PolyFraction& o) const;
    PolyFraction operator-(const PolyFraction& o) const;
    PolyFraction operator*(const PolyFraction& o) const;
    PolyFraction operator/(const PolyFraction& o) const;

    PolyFraction reduced() const;
    // cross-multiplied equality over the fraction field
    bool equals(const PolyFraction& o) const;

  private:
    MultiPoly num_;
    MultiPoly den_;
};

// Snapshot after the k-th successful extension of the propagation method: an
// invertible k x k submatrix (rows/columns listed in selection order), its
// determinant, and its inverse over the fraction field.
struct PropagationState {
    std::size_t k = 0;
    std::vector<std::size_t> row_ids;
    std::vector<std::size_t> col_ids;
    PolyFraction det;
    std::vector<std::vector<PolyFraction>> inv;
};

enum class Strategy { Auto, Leibniz, Propagate, Interp };

// Determinant by expansion into signed products; DimensionTooLarge past 8.
MultiPoly resultant_leibniz(const SylvesterMatrix& s);

// Determinant by growing an invertible submatrix one row/column at a time.
// Candidate search order: lowest unselected column, then lowest unselected
// row; a candidate is accepted when its bordered determinant is nonzero.  A
// rank stall before full size means the determinant vanishes.  When `trace`
// is given, the state after each accepted extension is appended.
MultiPoly resultant_propagate(const SylvesterMatrix& s,
                              std::vector<PropagationState>* trace = nullptr);

// Bivariate only: evaluate the free variable at D*delta + 1 points (lifting
// to an extension field when GF(p) is too small), take univariate resultants,
// interpolate.  Sample points where either leading coefficient vanishes are
// skipped, with a replacement budget of 4N attempts.
MultiPoly resultant_interp(const MultiPoly& a, const MultiPoly& b, std::uint32_t var);

// Auto picks Leibniz for dim <= 5, Interp for arity 2, Propagate otherwise;
// explicit strategies pass through.
Strategy resolve_strategy(const MultiPoly& a, const MultiPoly& b, std::uint32_t var,
                          Strategy strategy);

// Strategy dispatch through resolve_strategy.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::uint32_t var,
                    Strategy strategy = Strategy::Auto);

// Exact quotient; throws NotDivisor when the division leaves a remainder.
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

}  // namespace rabin
