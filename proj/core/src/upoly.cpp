#include "rabin/upoly.hpp"

#include <algorithm>
#include <string>

namespace rabin {

UniPoly::UniPoly(const PrimeModulus& m, std::vector<std::uint64_t> coeffs)
    : mod_(m), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= mod_.value();
    trim();
}

UniPoly UniPoly::constant(const PrimeModulus& m, std::uint64_t c) {
    return UniPoly(m, {c});
}

UniPoly UniPoly::monomial(const PrimeModulus& m, std::uint64_t c, std::size_t e) {
    std::vector<std::uint64_t> v(e + 1, 0);
    v[e] = c;
    return UniPoly(m, std::move(v));
}

std::uint64_t UniPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    check(o);
    const std::uint64_t p = mod_.value();
    UniPoly r(mod_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = fp::add(coeff(i), o.coeff(i), p);
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    check(o);
    const std::uint64_t p = mod_.value();
    UniPoly r(mod_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = fp::sub(coeff(i), o.coeff(i), p);
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return UniPoly(mod_);
    const std::uint64_t p = mod_.value();
    UniPoly r(mod_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = fp::add(r.c_[i + j], fp::mul(c_[i], o.c_[j], p), p);
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = fp::neg(c, mod_.value());
    return r;
}

UniPoly UniPoly::scaled(std::uint64_t c) const {
    const std::uint64_t p = mod_.value();
    c %= p;
    UniPoly r(mod_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = fp::mul(x, c, p);
    return r;
}

UniPoly UniPoly::shifted(std::size_t e) const {
    if (is_zero()) return *this;
    UniPoly r(mod_);
    r.c_.assign(c_.size() + e, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(e));
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic of zero polynomial");
    return scaled(fp::inv(leading(), mod_.value()));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    if (x.modulus() != mod_.value()) throw ModulusMismatch("evaluation point from different modulus");
    const std::uint64_t p = mod_.value();
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = fp::add(fp::mul(acc, x.value(), p), c_[i], p);
    return FieldElement(acc, mod_);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    const PrimeModulus& m = num.modulus();
    if (!(m == den.modulus())) throw ModulusMismatch("divmod over different moduli");
    const std::uint64_t p = m.value();
    if (num.degree() < den.degree()) return {UniPoly::zero(m), num};

    std::vector<std::uint64_t> r(num.coeffs());
    const auto& d = den.coeffs();
    const std::size_t dn = r.size(), dd = d.size();
    const std::uint64_t lcinv = fp::inv(den.leading(), p);
    std::vector<std::uint64_t> q(dn - dd + 1, 0);
    for (std::size_t i = dn; i-- > 0;) {
        if (i + 1 < dd) break;  // what is left is the remainder
        const std::uint64_t c = fp::mul(r[i], lcinv, p);
        if (c == 0) continue;
        q[i + 1 - dd] = c;
        for (std::size_t j = 0; j < dd; ++j)
            r[i + 1 - dd + j] = fp::sub(r[i + 1 - dd + j], fp::mul(c, d[j], p), p);
    }
    return {UniPoly(m, std::move(q)), UniPoly(m, std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0)");
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly derivative(const UniPoly& f) {
    const std::uint64_t p = f.modulus().value();
    if (f.degree() < 1) return UniPoly::zero(f.modulus());
    std::vector<std::uint64_t> d(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        d[i - 1] = fp::mul(f.coeffs()[i], i % p, p);
    return UniPoly(f.modulus(), std::move(d));
}

namespace {

/// g with derivative zero is a p-th power: g(x) = u(x^p) and, since c^p = c in
// GF(p), u's coefficients are read off directly from g's.
UniPoly pth_root(const UniPoly& g) {
    const std::uint64_t p = g.modulus().value();
    std::vector<std::uint64_t> u(static_cast<std::size_t>(g.degree()) / p + 1);
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = g.coeff(i * static_cast<std::size_t>(p));
    return UniPoly(g.modulus(), std::move(u));
}

}  // namespace

UniPoly squarefree_part(const UniPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
    if (g.degree() == 0) return UniPoly::constant(g.modulus(), 1);
    UniPoly f = g.monic();
    UniPoly df = derivative(f);
    if (df.is_zero()) return squarefree_part(pth_root(f));
    UniPoly h = gcd(f, df);
    UniPoly w = divmod(f, h).first;  // factors whose multiplicity p does not divide
    // strip w's factors from h; what survives is the p-th-power part
    UniPoly v = h;
    while (true) {
        UniPoly c = gcd(v, w);
        if (c.degree() == 0) break;
        v = divmod(v, c).first;
    }
    if (v.degree() == 0) return w.monic();
    return (w * squarefree_part(v)).monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& phi) {
    if (phi.degree() < 1) throw ConstantModulus("powmod modulus must have positive degree");
    UniPoly r = divmod(UniPoly::constant(phi.modulus(), 1), phi).second;
    UniPoly s = divmod(base, phi).second;
    while (e) {
        if (e & 1) r = divmod(r * s, phi).second;
        s = divmod(s * s, phi).second;
        e >>= 1;
    }
    return r;
}

UniPoly frobenius_power(const UniPoly& phi, unsigned d, FrobeniusTranscript* transcript) {
    if (phi.degree() < 1) throw ConstantModulus("frobenius modulus must have positive degree");
    const std::uint64_t p = phi.modulus().value();
    UniPoly r = divmod(UniPoly::monomial(phi.modulus(), 1, 1), phi).second;  // x mod phi
    for (unsigned round = 0; round < d; ++round) {
        FrobeniusRound rec{{}, UniPoly::zero(phi.modulus())};
        UniPoly acc = UniPoly::constant(phi.modulus(), 1);
        UniPoly s = r;
        std::uint64_t e = p;
        while (true) {
            if (e & 1) acc = divmod(acc * s, phi).second;
            e >>= 1;
            if (e == 0) break;
            s = divmod(s * s, phi).second;
            if (transcript) rec.squarings.push_back(s);
        }
        r = acc;
        if (transcript) {
            rec.result = r;
            transcript->rounds.push_back(std::move(rec));
        }
    }
    return r;
}

UniPoly resultant(const UniPoly& f, const UniPoly& g) {
    return UniPoly::constant(f.modulus(), resultant_value(f, g).value());
}

FieldElement resultant_value(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of zero polynomial");
    const PrimeModulus& m = f.modulus();
    if (!(m == g.modulus())) throw ModulusMismatch("resultant over different moduli");
    const long df = f.degree(), dg = g.degree();
    if (df == 0 && dg == 0) throw BothConstantInVar("resultant of two constants");
    const std::uint64_t p = m.value();
    const std::size_t D = static_cast<std::size_t>(df + dg);

    // Sylvester layout: dg rows of f's coefficients (highest first), then df
    // rows of g's, each block shifted right by its row index.
    std::vector<std::vector<std::uint64_t>> a(D, std::vector<std::uint64_t>(D, 0));
    for (long r = 0; r < dg; ++r)
        for (long j = 0; j <= df; ++j)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                f.coeff(static_cast<std::size_t>(df - j));
    for (long r = 0; r < df; ++r)
        for (long j = 0; j <= dg; ++j)
            a[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + j)] =
                g.coeff(static_cast<std::size_t>(dg - j));

    // Gaussian elimination, tracking the sign of row swaps.
    std::uint64_t det = 1;
    bool negate = false;
    for (std::size_t col = 0; col < D; ++col) {
        std::size_t piv = col;
        while (piv < D && a[piv][col] == 0) ++piv;
        if (piv == D) return FieldElement(0, m);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            negate = !negate;
        }
        det = fp::mul(det, a[col][col], p);
        const std::uint64_t inv = fp::inv(a[col][col], p);
        for (std::size_t r = col + 1; r < D; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t q = fp::mul(a[r][col], inv, p);
            for (std::size_t j = col; j < D; ++j)
                a[r][j] = fp::sub(a[r][j], fp::mul(q, a[col][j], p), p);
        }
    }
    if (negate) det = fp::neg(det, p);
    return FieldElement(det, m);
}

UniPoly interpolate(const PrimeModulus& m,
                    const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    if (points.empty()) throw ConfigOutOfRange("interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissa("repeated interpolation abscissa");

    // Newton form: divided differences, then backward expansion.
    const std::size_t n = points.size();
    std::vector<FieldElement> coef;
    coef.reserve(n);
    std::vector<FieldElement> col;
    for (auto& pt : points) col.push_back(pt.second);
    coef.push_back(col[0]);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i)
            col[i] = (col[i + 1] - col[i]) / (points[i + level].first - points[i].first);
        col.pop_back();
        coef.push_back(col[0]);
    }
    UniPoly r = UniPoly::zero(m);
    for (std::size_t i = n; i-- > 0;) {
        // r <- r*(x - x_i) + coef[i]
        r = r.shifted(1) + r.scaled(fp::neg(points[i].first.value(), m.value())) +
            UniPoly::constant(m, coef[i].value());
    }
    return r;
}

bool is_irreducible(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("irreducibility of zero polynomial");
    if (f.degree() < 1) throw ConstantModulus("irreducibility of a constant");
    if (f.leading() != 1) throw NotMonic("irreducibility test requires monic input");
    const long n = f.degree();
    const UniPoly x = UniPoly::monomial(f.modulus(), 1, 1);
    UniPoly fr = divmod(x, f).second;
    for (long k = 1; 2 * k <= n; ++k) {
        fr = powmod(fr, f.modulus().value(), f);  // x^(p^k) mod f
        UniPoly d = gcd(f, fr - x);
        if (d.degree() != 0) return false;
    }
    return true;
}

}  // namespace rabin
