#include "rabin/resultant.hpp"

#include <algorithm>

#include "rabin/oracle.hpp"

namespace rabin {

SylvesterMatrix SylvesterMatrix::build(const MultiPoly& a, const MultiPoly& b, std::uint32_t var) {
    if (a.arity() != b.arity()) throw ArityMismatch("inputs of different arity");
    if (!(a.modulus() == b.modulus())) throw ModulusMismatch("inputs over different moduli");
    if (var >= a.arity()) throw VarOutOfRange("eliminated variable out of range");
    if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant input is zero");
    const long da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 && db == 0) throw BothConstantInVar("both inputs constant in the variable");

    const auto ca = coefficients_in(a, var);
    const auto cb = coefficients_in(b, var);
    const std::size_t D = static_cast<std::size_t>(da + db);
    SylvesterMatrix s;
    s.dim_ = D;
    s.var_ = var;
    s.deg_a_ = da;
    s.deg_b_ = db;
    s.rows_.assign(D, std::vector<MultiPoly>(D, MultiPoly::zero(a.arity(), a.modulus())));
    for (long r = 0; r < db; ++r)
        for (long j = 0; j <= da; ++j)
            s.rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                ca[static_cast<std::size_t>(da - j)];
    for (long r = 0; r < da; ++r)
        for (long j = 0; j <= db; ++j)
            s.rows_[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + j)] =
                cb[static_cast<std::size_t>(db - j)];
    return s;
}

// ---------------------------------------------------------------------------
// fractions

PolyFraction::PolyFraction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
}

PolyFraction PolyFraction::from_poly(const MultiPoly& p) {
    return PolyFraction(p, MultiPoly::constant(p.arity(), p.modulus(), 1));
}

PolyFraction PolyFraction::operator+(const PolyFraction& o) const {
    return PolyFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_).reduced();
}

PolyFraction PolyFraction::operator-(const PolyFraction& o) const {
    return PolyFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_).reduced();
}

PolyFraction PolyFraction::operator*(const PolyFraction& o) const {
    return PolyFraction(num_ * o.num_, den_ * o.den_).reduced();
}

PolyFraction PolyFraction::operator/(const PolyFraction& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero fraction");
    return PolyFraction(num_ * o.den_, den_ * o.num_).reduced();
}

namespace {

ExponentVec monomial_content(const MultiPoly& p) {
    ExponentVec c(p.arity(), 0);
    bool first = true;
    for (const auto& [e, x] : p.terms()) {
        (void)x;
        if (first) {
            c = e;
            first = false;
            continue;
        }
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(c[i], e[i]);
    }
    return c;
}

MultiPoly strip_monomial(const MultiPoly& p, const ExponentVec& c) {
    MultiPoly r(p.arity(), p.modulus());
    for (const auto& [e, x] : p.terms()) {
        ExponentVec s(e);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= c[i];
        r = r + MultiPoly::monomial(p.arity(), p.modulus(), x, s);
    }
    return r;
}

}  // namespace

PolyFraction PolyFraction::reduced() const {
    if (num_.is_zero())
        return PolyFraction(MultiPoly::zero(num_.arity(), num_.modulus()),
                            MultiPoly::constant(num_.arity(), num_.modulus(), 1));
    ExponentVec cn = monomial_content(num_);
    ExponentVec cd = monomial_content(den_);
    for (std::size_t i = 0; i < cn.size(); ++i) cn[i] = std::min(cn[i], cd[i]);
    MultiPoly n = strip_monomial(num_, cn);
    MultiPoly d = strip_monomial(den_, cn);
    // scalar normalization: leading coefficient of the denominator becomes 1
    const std::uint64_t lc = d.terms().begin()->second;
    const std::uint64_t inv = fp::inv(lc, d.modulus().value());
    return PolyFraction(n.scaled(inv), d.scaled(inv));
}

bool PolyFraction::equals(const PolyFraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

// ---------------------------------------------------------------------------
// expansion strategy

namespace {

// Laplace expansion along the top remaining row, memoized on the set of
// still-unused columns; computes the same signed sum of dim! products as the
// direct expansion with shared subproducts.
class LaplaceDet {
  public:
    explicit LaplaceDet(const SylvesterMatrix& s)
        : s_(s),
          memo_(std::size_t{1} << s.dim(),
                MultiPoly::zero(s.entry(0, 0).arity(), s.entry(0, 0).modulus())),
          seen_(std::size_t{1} << s.dim(), false) {}

    MultiPoly run() {
        const std::uint32_t mask = static_cast<std::uint32_t>((1u << s_.dim()) - 1);
        return minor_det(0, mask);
    }

  private:
    MultiPoly minor_det(std::size_t row, std::uint32_t cols) {
        const MultiPoly zero = MultiPoly::zero(s_.entry(0, 0).arity(), s_.entry(0, 0).modulus());
        if (cols == 0) return MultiPoly::constant(zero.arity(), zero.modulus(), 1);
        if (seen_[cols]) return memo_[cols];
        MultiPoly acc = zero;
        bool negate = false;
        for (std::size_t c = 0; c < s_.dim(); ++c) {
            if (!(cols & (1u << c))) continue;
            const MultiPoly& e = s_.entry(row, c);
            if (!e.is_zero()) {
                MultiPoly sub = e * minor_det(row + 1, cols & ~(1u << c));
                acc = negate ? acc - sub : acc + sub;
            }
            negate = !negate;
        }
        seen_[cols] = true;
        memo_[cols] = acc;
        return acc;
    }

    const SylvesterMatrix& s_;
    std::vector<MultiPoly> memo_;
    std::vector<bool> seen_;
};

}  // namespace

MultiPoly resultant_leibniz(const SylvesterMatrix& s) {
    if (s.dim() > 8) throw DimensionTooLarge("expansion strategy capped at dimension 8");
    return LaplaceDet(s).run();
}

// ---------------------------------------------------------------------------
// propagation strategy

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw DivisionByZero("exact division by zero");
    MultiPoly r = num;
    MultiPoly q(num.arity(), num.modulus());
    const auto& lead = *den.terms().begin();
    while (!r.is_zero()) {
        const auto& lt = *r.terms().begin();
        ExponentVec e(lt.first.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (lt.first[i] < lead.first[i]) throw NotDivisor("division is not exact");
            e[i] = lt.first[i] - lead.first[i];
        }
        const std::uint64_t c =
            fp::mul(lt.second, fp::inv(lead.second, num.modulus().value()), num.modulus().value());
        const MultiPoly t = MultiPoly::monomial(num.arity(), num.modulus(), c, e);
        q = q + t;
        r = r - t * den;
    }
    return q;
}

namespace {

int permutation_sign(std::vector<std::size_t> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            sign = -sign;
        }
    }
    return sign;
}

// Internal propagation state in adjugate form: det is the submatrix
// determinant (a polynomial, minors always are) and adj = det * inverse, so
// every division performed is exact.
struct AdjState {
    std::vector<std::size_t> rows, cols;
    MultiPoly det;
    std::vector<std::vector<MultiPoly>> adj;

    explicit AdjState(const MultiPoly& zero) : det(zero) {}
};

}  // namespace

MultiPoly resultant_propagate(const SylvesterMatrix& s, std::vector<PropagationState>* trace) {
    const std::size_t D = s.dim();
    const MultiPoly zero = MultiPoly::zero(s.entry(0, 0).arity(), s.entry(0, 0).modulus());
    const MultiPoly one = MultiPoly::constant(zero.arity(), zero.modulus(), 1);

    auto emit = [&](const AdjState& st) {
        if (!trace) return;
        PropagationState out{st.rows.size(),
                             st.rows,
                             st.cols,
                             PolyFraction(st.det, one),
                             {}};
        out.inv.assign(st.rows.size(), {});
        for (std::size_t i = 0; i < st.rows.size(); ++i)
            for (std::size_t j = 0; j < st.rows.size(); ++j)
                out.inv[i].push_back(PolyFraction(st.adj[i][j], st.det));
        trace->push_back(std::move(out));
    };

    std::vector<bool> row_used(D, false), col_used(D, false);
    AdjState st(zero);

    // seed with the first nonzero entry, lowest column then lowest row
    {
        bool found = false;
        for (std::size_t c = 0; c < D && !found; ++c)
            for (std::size_t r = 0; r < D && !found; ++r)
                if (!s.entry(r, c).is_zero()) {
                    st.rows = {r};
                    st.cols = {c};
                    st.det = s.entry(r, c);
                    st.adj = {{one}};
                    row_used[r] = col_used[c] = true;
                    found = true;
                }
        if (!found) return zero;  // zero matrix
        emit(st);
    }

    while (st.rows.size() < D) {
        const std::size_t k = st.rows.size();
        bool extended = false;
        for (std::size_t c = 0; c < D && !extended; ++c) {
            if (col_used[c]) continue;
            // u = new column restricted to the selected rows; A*u is shared
            // across the row candidates for this column
            std::vector<MultiPoly> u;
            u.reserve(k);
            for (std::size_t i = 0; i < k; ++i) u.push_back(s.entry(st.rows[i], c));
            std::vector<MultiPoly> au(k, zero);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (!st.adj[i][j].is_zero() && !u[j].is_zero())
                        au[i] = au[i] + st.adj[i][j] * u[j];

            for (std::size_t r = 0; r < D && !extended; ++r) {
                if (row_used[r]) continue;
                std::vector<MultiPoly> v;
                v.reserve(k);
                for (std::size_t j = 0; j < k; ++j) v.push_back(s.entry(r, st.cols[j]));
                // bordered determinant: det' = corner*det - v . (adj u)
                MultiPoly vau = zero;
                for (std::size_t j = 0; j < k; ++j)
                    if (!v[j].is_zero() && !au[j].is_zero()) vau = vau + v[j] * au[j];
                MultiPoly det2 = s.entry(r, c) * st.det - vau;
                if (det2.is_zero()) continue;

                // block inverse, scaled by det': all entries stay polynomial
                std::vector<MultiPoly> va(k, zero);
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t i = 0; i < k; ++i)
                        if (!v[i].is_zero() && !st.adj[i][j].is_zero())
                            va[j] = va[j] + v[i] * st.adj[i][j];

                AdjState next(zero);
                next.rows = st.rows;
                next.rows.push_back(r);
                next.cols = st.cols;
                next.cols.push_back(c);
                next.det = det2;
                next.adj.assign(k + 1, std::vector<MultiPoly>(k + 1, zero));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        next.adj[i][j] = divide_exact(det2 * st.adj[i][j] + au[i] * va[j], st.det);
                for (std::size_t i = 0; i < k; ++i) {
                    next.adj[i][k] = -au[i];
                    next.adj[k][i] = -va[i];
                }
                next.adj[k][k] = st.det;

                row_used[r] = col_used[c] = true;
                st = std::move(next);
                emit(st);
                extended = true;
            }
        }
        if (!extended) return zero;  // rank stall: no bordered minor survives
    }

    // selection order is a pair of permutations of 0..D-1; undo their signs
    const int sign = permutation_sign(st.rows) * permutation_sign(st.cols);
    return sign == 1 ? st.det : -st.det;
}

// ---------------------------------------------------------------------------
// evaluation / interpolation strategy

namespace {

long coeff_degree_bound(const MultiPoly& f, std::uint32_t var, std::uint32_t free_var) {
    long d = 0;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        (void)var;
        d = std::max(d, static_cast<long>(e[free_var]));
    }
    return d;
}

}  // namespace

MultiPoly resultant_interp(const MultiPoly& a, const MultiPoly& b, std::uint32_t var) {
    if (a.arity() != 2 || b.arity() != 2)
        throw ArityMismatch("interpolation strategy requires arity 2");
    if (var >= 2) throw VarOutOfRange("eliminated variable out of range");
    if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant input is zero");
    const PrimeModulus& m = a.modulus();
    if (!(m == b.modulus())) throw ModulusMismatch("inputs over different moduli");
    const std::uint32_t free_var = 1 - var;
    const long da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 && db == 0) throw BothConstantInVar("both inputs constant in the variable");
    const std::uint64_t p = m.value();

    const long D = da + db;
    const long delta = std::max(coeff_degree_bound(a, var, free_var),
                                coeff_degree_bound(b, var, free_var));
    const std::uint64_t N = static_cast<std::uint64_t>(D) * static_cast<std::uint64_t>(delta) + 1;

    // coefficient views are univariate in the free variable
    auto lift = [&](const MultiPoly& f) {
        std::vector<UniPoly> out;
        for (const auto& c : coefficients_in(f, var)) out.push_back(to_unipoly(c, free_var));
        return out;
    };
    const std::vector<UniPoly> ca = lift(a), cb = lift(b);
    const UniPoly& lca = ca.back();
    const UniPoly& lcb = cb.back();

    if (N <= p) {
        // enough base-field points
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        std::uint64_t budget = 4 * N;
        for (std::uint64_t x = 0; x < p && pts.size() < N; ++x) {
            if (budget == 0) break;
            --budget;
            FieldElement tau(x, m);
            if ((da > 0 && lca.eval(tau).is_zero()) || (db > 0 && lcb.eval(tau).is_zero()))
                continue;  // degree would drop; pick another point
            auto specialize = [&](const std::vector<UniPoly>& cs) {
                std::vector<std::uint64_t> c(cs.size());
                for (std::size_t i = 0; i < cs.size(); ++i) c[i] = cs[i].eval(tau).value();
                return UniPoly(m, std::move(c));
            };
            pts.emplace_back(tau, resultant_value(specialize(ca), specialize(cb)));
        }
        if (pts.size() < N) {
            if (budget == 0) throw DegenerateSpecialization("replacement budget exhausted");
            throw FieldTooSmall("not enough usable sample points in GF(p)");
        }
        const UniPoly r = interpolate(m, pts);
        return from_unipoly(r, 2, free_var);
    }

    // Lift to GF(p^e), smallest e with p^e > D*delta; samples, univariate
    // resultants (Gaussian elimination on the Sylvester matrix), and the
    // Newton interpolation all run in the extension.
    std::uint32_t e = 1;
    std::uint64_t size = p;
    while (size < N) {
        ++e;
        size *= p;
        if (size > 1'000'000) throw EnumerationTooLarge("extension lift beyond desk scale");
    }
    ExtField F(m, e, 1);

    auto ext_resultant = [&](const std::vector<ExtElem>& fa, const std::vector<ExtElem>& fb) {
        const std::size_t dfa = fa.size() - 1, dfb = fb.size() - 1;
        const std::size_t dim = dfa + dfb;
        std::vector<std::vector<ExtElem>> g(dim, std::vector<ExtElem>(dim, F.zero()));
        for (std::size_t r = 0; r < dfb; ++r)
            for (std::size_t j = 0; j <= dfa; ++j) g[r][r + j] = fa[dfa - j];
        for (std::size_t r = 0; r < dfa; ++r)
            for (std::size_t j = 0; j <= dfb; ++j) g[dfb + r][r + j] = fb[dfb - j];
        ExtElem det = F.one();
        bool negate = false;
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t piv = col;
            while (piv < dim && F.is_zero(g[piv][col])) ++piv;
            if (piv == dim) return F.zero();
            if (piv != col) {
                std::swap(g[piv], g[col]);
                negate = !negate;
            }
            det = F.mul(det, g[col][col]);
            const ExtElem inv = F.inv(g[col][col]);
            for (std::size_t r = col + 1; r < dim; ++r) {
                if (F.is_zero(g[r][col])) continue;
                const ExtElem q = F.mul(g[r][col], inv);
                for (std::size_t j = col; j < dim; ++j)
                    g[r][j] = F.sub(g[r][j], F.mul(q, g[col][j]));
            }
        }
        return negate ? F.neg(det) : det;
    };

    std::vector<ExtElem> xs, ys;
    std::uint64_t budget = 4 * N;
    for (std::uint64_t idx = 0; idx < F.size() && xs.size() < N; ++idx) {
        if (budget == 0) break;
        --budget;
        ExtElem tau = F.element_at(idx);
        if ((da > 0 && F.is_zero(F.eval_base_poly(lca, tau))) ||
            (db > 0 && F.is_zero(F.eval_base_poly(lcb, tau))))
            continue;
        auto specialize = [&](const std::vector<UniPoly>& cs) {
            std::vector<ExtElem> c;
            c.reserve(cs.size());
            for (const auto& ci : cs) c.push_back(F.eval_base_poly(ci, tau));
            return c;
        };
        xs.push_back(tau);
        ys.push_back(ext_resultant(specialize(ca), specialize(cb)));
    }
    if (xs.size() < N) {
        if (budget == 0) throw DegenerateSpecialization("replacement budget exhausted");
        throw FieldTooSmall("not enough usable sample points in the extension");
    }

    // Newton interpolation over the extension
    const std::size_t n = xs.size();
    std::vector<ExtElem> coef;
    coef.reserve(n);
    std::vector<ExtElem> col = ys;
    coef.push_back(col[0]);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i)
            col[i] = F.mul(F.sub(col[i + 1], col[i]), F.inv(F.sub(xs[i + level], xs[i])));
        col.resize(n - level);
        coef.push_back(col[0]);
    }
    std::vector<ExtElem> poly;  // coefficients in the extension, low to high
    for (std::size_t i = n; i-- > 0;) {
        // poly <- poly*(x - xs[i]) + coef[i]
        std::vector<ExtElem> next(poly.size() + 1, F.zero());
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = F.add(next[j + 1], poly[j]);
            next[j] = F.sub(next[j], F.mul(poly[j], xs[i]));
        }
        next[0] = F.add(next[0], coef[i]);
        while (next.size() > 1 && F.is_zero(next.back())) next.pop_back();
        poly = std::move(next);
    }

    // the true resultant lives in the base field
    std::vector<std::uint64_t> base(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        for (std::size_t j = 1; j < poly[i].size(); ++j)
            if (poly[i][j] != 0)
                throw Error("interpolated coefficient escaped the base field");
        base[i] = poly[i][0];
    }
    return from_unipoly(UniPoly(m, std::move(base)), 2, free_var);
}

Strategy resolve_strategy(const MultiPoly& a, const MultiPoly& b, std::uint32_t var,
                          Strategy strategy) {
    if (strategy != Strategy::Auto) return strategy;
    const long da = a.degree_in(var), db = b.degree_in(var);
    if (da + db <= 5) return Strategy::Leibniz;
    if (a.arity() == 2) return Strategy::Interp;
    return Strategy::Propagate;
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::uint32_t var, Strategy strategy) {
    strategy = resolve_strategy(a, b, var, strategy);
    switch (strategy) {
        case Strategy::Leibniz:
            return resultant_leibniz(SylvesterMatrix::build(a, b, var));
        case Strategy::Propagate:
            return resultant_propagate(SylvesterMatrix::build(a, b, var));
        case Strategy::Interp:
            return resultant_interp(a, b, var);
        default:
            throw ConfigOutOfRange("unknown strategy");
    }
}

}  // namespace rabin
