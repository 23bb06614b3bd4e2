#include "rabin/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace rabin {

namespace {

// representative of e mod (p-1) in [1, p-1] for e > 0; exponent 0 stays 0
std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t p) {
    if (e == 0) return 0;
    const std::uint64_t m = e % (p - 1);
    return m == 0 ? p - 1 : m;
}

UniPoly reduce_exponents(const UniPoly& f) {
    const std::uint64_t p = f.modulus().value();
    UniPoly r = UniPoly::zero(f.modulus());
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        if (f.coeff(e) == 0) continue;
        r = r + UniPoly::monomial(f.modulus(), f.coeff(e),
                                  static_cast<std::size_t>(reduce_exponent(e, p)));
    }
    return r;
}

}  // namespace

UniPoly gen_nonresidue_product(const SparsePolySpec& spec) {
    const std::uint64_t p = spec.p.value();
    UniPoly f = UniPoly::constant(spec.p, 1);
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const auto& fac = spec.factors[i];
        const std::string tag = "factor " + std::to_string(i);
        if (fac.gamma % p == 0 || fac.delta % p == 0)
            throw ConditionViolated(tag + ": gamma and delta must be nonzero");
        if (fac.r == 0) throw ConditionViolated(tag + ": exponent must be positive");
        const std::uint64_t g = std::gcd(fac.r, p - 1);
        if (g <= 1) throw ConditionViolated(tag + ": gcd(r, p-1) must exceed 1");
        const std::uint64_t ratio = fp::mul(fp::inv(fac.gamma % p, p), fac.delta % p, p);
        if (fp::pow(ratio, (p - 1) / g, p) == 1)
            throw ConditionViolated(tag + ": delta/gamma is an r-th power residue");
        UniPoly factor =
            UniPoly::monomial(spec.p, fac.gamma % p,
                              static_cast<std::size_t>(reduce_exponent(fac.r, p))) -
            UniPoly::constant(spec.p, fac.delta % p);
        f = reduce_exponents(f * factor);
    }
    // reduction keeps every positive exponent positive, so the constant term
    // is prod(-delta); still, the rootless claim includes x = 0, so check it
    if (f.eval(FieldElement(0, spec.p)).is_zero())
        throw ConditionViolated("product vanishes at 0");
    return f;
}

EisensteinPoly gen_eisenstein_sparse(std::uint64_t p, std::uint64_t pi,
                                     const std::vector<std::uint32_t>& exponents,
                                     std::uint64_t seed) {
    const PrimeModulus mod(p);
    if (pi >= (1ULL << 31) || !fp::is_prime(pi)) throw BadPrime("pi must be a prime below 2^31");
    if (pi == p) throw BadPrime("pi must differ from the field characteristic");
    if (exponents.size() < 2 || exponents.front() != 0)
        throw ConfigOutOfRange("exponent list must start at 0 and name a leading term");
    for (std::size_t i = 1; i < exponents.size(); ++i)
        if (exponents[i] <= exponents[i - 1])
            throw ConfigOutOfRange("exponents must be strictly increasing");
    if (static_cast<std::uint64_t>(exponents.back()) >= p - 1)
        throw ConfigOutOfRange("leading exponent must be below p-1");

    std::mt19937_64 rng(seed);
    EisensteinPoly out{{}, UniPoly::zero(mod)};
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        std::int64_t c;
        if (i + 1 == exponents.size()) {
            c = 1;
        } else if (i == 0) {
            std::uint64_t u = 1 + rng() % 9;
            while (u % pi == 0) u = 1 + rng() % 9;
            c = static_cast<std::int64_t>(pi * u);
        } else {
            c = static_cast<std::int64_t>(pi * (1 + rng() % 9));
        }
        out.z_terms.emplace_back(exponents[i], c);
    }
    for (const auto& [e, c] : out.z_terms)
        out.mod_p = out.mod_p + UniPoly::monomial(mod, static_cast<std::uint64_t>(c) % p, e);
    return out;
}

bool eisenstein_holds(const std::vector<std::pair<std::uint32_t, std::int64_t>>& z_terms,
                      std::uint64_t pi) {
    if (z_terms.empty()) return false;
    const std::int64_t q = static_cast<std::int64_t>(pi);
    const auto& lead = z_terms.back();
    if (lead.second == 0 || lead.second % q == 0) return false;
    bool constant_seen = false;
    for (const auto& [e, c] : z_terms) {
        if (e == lead.first) continue;
        if (c % q != 0) return false;
        if (e == 0) {
            constant_seen = true;
            if (c == 0 || (c / q) % q == 0) return false;
        }
    }
    return constant_seen;
}

UniPoly gen_substitution(const UniPoly& h, std::uint64_t r) {
    if (h.is_zero()) throw ZeroPolynomial("substitution into the zero polynomial");
    const std::uint64_t p = h.modulus().value();
    if (r == 0 || std::gcd(r, p - 1) != 1)
        throw NotCoprime("substitution exponent must be coprime to p-1");
    if (h.degree() >= 1) {
        const UniPoly x = UniPoly::monomial(h.modulus(), 1, 1);
        const UniPoly fr = powmod(x, p, h);
        if (gcd(h, fr - x).degree() != 0)
            throw PreconditionGcd("substitution base has a root in GF(p)");
    } else if (h.coeff(0) == 0) {
        throw ZeroPolynomial("substitution into the zero polynomial");
    }

    UniPoly f = UniPoly::zero(h.modulus());
    for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
        if (h.coeff(k) == 0) continue;
        std::uint64_t e = 0;
        if (k > 0) {
            e = fp::mul(static_cast<std::uint64_t>(k) % (p - 1), r % (p - 1), p - 1);
            if (e == 0) e = p - 1;
        }
        f = f + UniPoly::monomial(h.modulus(), h.coeff(k), static_cast<std::size_t>(e));
    }
    return f;
}

bool decide_pair_nonvanishing(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("nonvanishing decision on zero input");
    const UniPoly u = gcd(f, g);
    if (u.degree() == 0) return true;
    const UniPoly x = UniPoly::monomial(f.modulus(), 1, 1);
    const UniPoly fr = powmod(x, f.modulus().value(), u);
    return gcd(u, fr - x).degree() == 0;
}

bool check_nonvanishing(const UniPoly& f, std::uint64_t nu) {
    if (f.is_zero()) throw ZeroPolynomial("nonvanishing check on zero input");
    const std::uint64_t p = f.modulus().value();
    if (nu == 0 || (p - 1) % nu != 0) throw NotDivisor("subgroup order must divide p-1");
    if (f.degree() == 0) return true;
    const UniPoly x = UniPoly::monomial(f.modulus(), 1, 1);
    const UniPoly xr = powmod(x, nu, f);  // x^nu mod f
    return gcd(f, xr - UniPoly::constant(f.modulus(), 1)).degree() == 0;
}

}  // namespace rabin
