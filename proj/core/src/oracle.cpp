#include "rabin/oracle.hpp"

#include <random>

namespace rabin {

namespace {

std::uint64_t ipow_checked(std::uint64_t b, std::uint32_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

}  // namespace

ExtField::ExtField(const PrimeModulus& m, std::uint32_t d, std::uint64_t seed)
    : mod_(m), d_(d), size_(0), modpoly_(UniPoly::zero(m)) {
    if (d == 0) throw ConfigOutOfRange("extension degree must be at least 1");
    size_ = ipow_checked(m.value(), d, 1'000'000);
    if (size_ > 1'000'000) throw EnumerationTooLarge("p^d beyond desk scale");

    const std::uint64_t p = m.value();
    std::mt19937_64 rng(seed);
    const std::uint64_t budget = 64ULL * d;
    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::uint64_t> c(d + 1);
        for (std::uint32_t i = 0; i < d; ++i) c[i] = rng() % p;
        c[d] = 1;
        UniPoly cand(m, std::move(c));
        if (is_irreducible(cand)) {
            modpoly_ = cand;
            return;
        }
    }
    throw BudgetExhausted("no irreducible modulus found within candidate budget");
}

ExtElem ExtField::from_base(std::uint64_t c) const {
    ExtElem e(d_, 0);
    e[0] = c % mod_.value();
    return e;
}

ExtElem ExtField::element_at(std::uint64_t index) const {
    if (index >= size_) throw ConfigOutOfRange("element index out of range");
    ExtElem e(d_, 0);
    const std::uint64_t p = mod_.value();
    for (std::uint32_t i = 0; i < d_; ++i) {
        e[i] = index % p;
        index /= p;
    }
    return e;
}

bool ExtField::is_zero(const ExtElem& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(d_);
    for (std::uint32_t i = 0; i < d_; ++i) r[i] = fp::add(a[i], b[i], mod_.value());
    return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(d_);
    for (std::uint32_t i = 0; i < d_; ++i) r[i] = fp::sub(a[i], b[i], mod_.value());
    return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
    ExtElem r(d_);
    for (std::uint32_t i = 0; i < d_; ++i) r[i] = fp::neg(a[i], mod_.value());
    return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
    const std::uint64_t p = mod_.value();
    // schoolbook product, then reduction by the monic modulus
    std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < d_; ++j)
            prod[i + j] = fp::add(prod[i + j], fp::mul(a[i], b[j], p), p);
    }
    const auto& md = modpoly_.coeffs();
    for (std::size_t i = prod.size(); i-- > d_;) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < d_; ++j)
            prod[i - d_ + j] = fp::sub(prod[i - d_ + j], fp::mul(c, md[j], p), p);
    }
    prod.resize(d_);
    return prod;
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (is_zero(a)) throw DivisionByZero("inverse of zero extension element");
    // extended Euclid over GF(p)[x] against the modulus polynomial
    UniPoly r0 = modpoly_;
    UniPoly r1(mod_, std::vector<std::uint64_t>(a));
    UniPoly s0 = UniPoly::zero(mod_);
    UniPoly s1 = UniPoly::constant(mod_, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd = nonzero constant (modulus irreducible); scale s0 by its inverse
    UniPoly u = s0.scaled(fp::inv(r0.coeff(0), mod_.value()));
    ExtElem out(d_, 0);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) out[i] = u.coeffs()[i];
    return out;
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t e) const {
    ExtElem r = one();
    ExtElem s = a;
    while (e) {
        if (e & 1) r = mul(r, s);
        s = mul(s, s);
        e >>= 1;
    }
    return r;
}

ExtElem ExtField::eval_base_poly(const UniPoly& f, const ExtElem& x) const {
    ExtElem acc = zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = mul(acc, x);
        acc[0] = fp::add(acc[0], f.coeffs()[i], mod_.value());
    }
    return acc;
}

std::uint32_t ExtField::minimal_degree(const ExtElem& a) const {
    for (std::uint32_t e = 1; e < d_; ++e) {
        if (d_ % e != 0) continue;
        ExtElem frob = a;
        for (std::uint32_t i = 0; i < e; ++i) frob = pow(frob, mod_.value());
        if (frob == a) return e;
    }
    return d_;
}

std::string ExtField::to_string(const ExtElem& a) const {
    return UniPoly(mod_, std::vector<std::uint64_t>(a)).to_string("w");
}

BivariateRootReport brute_bivariate_roots(const MultiPoly& f, std::uint32_t dmax,
                                          std::uint64_t seed) {
    if (f.arity() != 2) throw ArityMismatch("bivariate root search requires arity 2");
    const PrimeModulus& m = f.modulus();
    const std::uint64_t p = m.value();

    // f(t, x0) as a polynomial in t, for each candidate x0
    std::vector<UniPoly> slices;
    slices.reserve(p);
    for (std::uint64_t x0 = 0; x0 < p; ++x0)
        slices.push_back(to_unipoly(eval_partial(f, {{1, x0}}), 0));

    BivariateRootReport rep;
    for (std::uint32_t d = 1; d <= dmax; ++d) {
        ExtField F(m, d, seed);
        long count = 0;
        for (std::uint64_t idx = 0; idx < F.size(); ++idx) {
            ExtElem tau = F.element_at(idx);
            if (d > 1 && F.minimal_degree(tau) != d) continue;
            for (std::uint64_t x0 = 0; x0 < p; ++x0) {
                if (F.is_zero(F.eval_base_poly(slices[x0], tau))) {
                    ++count;
                    rep.witnesses.emplace_back(F.to_string(tau), x0);
                    break;
                }
            }
        }
        rep.exact[d] = count;
        rep.distinct_t += count;
    }
    return rep;
}

std::optional<CommonRootWitness> brute_common_root(const UniPoly& a, const UniPoly& b,
                                                   std::uint32_t kmax, std::uint64_t seed) {
    if (!(a.modulus() == b.modulus())) throw ModulusMismatch("inputs over different moduli");
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        ExtField F(a.modulus(), k, seed);
        for (std::uint64_t idx = 0; idx < F.size(); ++idx) {
            ExtElem theta = F.element_at(idx);
            if (k > 1 && F.minimal_degree(theta) != k) continue;  // seen at a smaller k
            if (F.is_zero(F.eval_base_poly(a, theta)) && F.is_zero(F.eval_base_poly(b, theta)))
                return CommonRootWitness{k, F.to_string(theta)};
        }
    }
    return std::nullopt;
}

std::vector<std::vector<std::uint64_t>> brute_system_zeros(const std::vector<MultiPoly>& system,
                                                           const PrimeModulus& m,
                                                           std::uint32_t arity) {
    if (arity == 0) throw ArityMismatch("arity must be at least 1");
    for (const auto& f : system) {
        if (f.arity() != arity) throw ArityMismatch("system member arity differs");
        if (!(f.modulus() == m)) throw ModulusMismatch("system member over different modulus");
    }
    const std::uint64_t p = m.value();
    const std::uint64_t total = ipow_checked(p, arity, 1'000'000);
    if (total > 1'000'000) throw EnumerationTooLarge("p^n beyond desk scale");

    std::vector<std::vector<std::uint64_t>> zeros;
    std::vector<std::uint64_t> point(arity, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < arity; ++i) {
            point[i] = v % p;
            v /= p;
        }
        std::map<std::uint32_t, std::uint64_t> bind;
        for (std::uint32_t i = 0; i < arity; ++i) bind[i] = point[i];
        bool all = true;
        for (const auto& f : system) {
            if (eval_partial(f, bind).constant_value() != 0) {
                all = false;
                break;
            }
        }
        if (all) zeros.push_back(point);
    }
    return zeros;
}

}  // namespace rabin
