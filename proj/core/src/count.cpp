#include "rabin/count.hpp"

#include <algorithm>

#include "json.hpp"
#include "rabin/resultant.hpp"

namespace rabin {

BivariateInstance BivariateInstance::make(const MultiPoly& f, bool strict) {
    if (f.arity() != 2) throw ArityMismatch("bivariate instance requires arity 2");
    if (f.is_zero()) throw ZeroPolynomial("bivariate instance is zero");
    const long n = f.degree_in(1);
    if (n < 1) throw NotMonic("instance must have positive degree in x");
    const auto coeffs = coefficients_in(f, 1);
    if (!(coeffs.back() == MultiPoly::constant(2, f.modulus(), 1)))
        throw NotMonic("leading x coefficient must be 1");
    long m = 0;
    long at_m = 0;
    long nonzero = 0;
    for (long i = 0; i < n; ++i) {
        const long d = coeffs[static_cast<std::size_t>(i)].degree_in(0);
        if (d < 0) continue;
        ++nonzero;
        if (d > m) {
            m = d;
            at_m = 1;
        } else if (d == m) {
            ++at_m;
        }
    }
    if (strict) {
        if (nonzero != n) throw ConditionViolated("strict instance has a zero coefficient");
        if (at_m != 1)
            throw ConditionViolated("strict instance needs exactly one coefficient of degree m");
    }
    return BivariateInstance{f, n, m, strict};
}

UniPoly build_g(const BivariateInstance& inst, GRoute route) {
    const PrimeModulus& mod = inst.f.modulus();
    const std::uint64_t p = mod.value();
    const bool negate = (static_cast<std::uint64_t>(inst.n) * p) % 2 == 1;

    if (route == GRoute::Sylvester) {
        if (p + static_cast<std::uint64_t>(inst.n) > 16)
            throw DimensionTooLarge("sylvester route capped at dimension 16");
        MultiPoly xp_minus_x = MultiPoly::monomial(2, mod, 1, {0, static_cast<std::uint32_t>(p)}) -
                               MultiPoly::monomial(2, mod, 1, {0, 1});
        MultiPoly r = resultant(inst.f, xp_minus_x, 1, Strategy::Propagate);
        return to_unipoly(r, 0);
    }

    if (p > 8192) throw ConfigOutOfRange("product route capped at p <= 8192");
    UniPoly g = UniPoly::constant(mod, 1);
    for (std::uint64_t c = 0; c < p; ++c) {
        const MultiPoly slice = eval_partial(inst.f, {{1, c}});
        if (slice.is_zero()) return UniPoly::zero(mod);
        g = g * to_unipoly(slice, 0);
    }
    return negate ? -g : g;
}

std::size_t GcdDerivation::element_count() const {
    std::size_t count = 0;
    auto add = [&](const UniPoly& f) { count += f.coeffs().size(); };
    for (const auto& round : frobenius.rounds) {
        for (const auto& s : round.squarings) add(s);
        add(round.result);
    }
    for (const auto& r : euclid) add(r);
    add(gcd);
    return count;
}

GcdDerivation frobenius_gcd_derivation(const UniPoly& phi, std::uint32_t d) {
    if (d < 1) throw ConfigOutOfRange("at least one frobenius round required");
    FrobeniusTranscript ft;
    const UniPoly fr = frobenius_power(phi, d, &ft);
    const UniPoly x = UniPoly::monomial(phi.modulus(), 1, 1);

    std::vector<UniPoly> chain;
    chain.push_back(phi);
    chain.push_back(divmod(fr - x, phi).second);
    while (!chain.back().is_zero())
        chain.push_back(divmod(chain[chain.size() - 2], chain.back()).second);

    UniPoly g = chain[chain.size() - 2].monic();
    return GcdDerivation{phi.modulus().value(), d, phi, std::move(ft), std::move(chain),
                         std::move(g)};
}

GcdDerivation emit_gcd_derivation(const UniPoly& f) { return frobenius_gcd_derivation(f, 1); }

bool verify_gcd_derivation(const GcdDerivation& t) {
    try {
        const PrimeModulus& m = t.modulus_poly.modulus();
        if (m.value() != t.p) return false;
        if (t.modulus_poly.degree() < 1) return false;
        if (t.rounds < 1 || t.frobenius.rounds.size() != t.rounds) return false;

        unsigned bits = 0;
        for (std::uint64_t e = t.p; e; e >>= 1) ++bits;

        const UniPoly x = UniPoly::monomial(m, 1, 1);
        auto reduce = [&](const UniPoly& f) { return divmod(f, t.modulus_poly).second; };
        UniPoly base = reduce(x);
        for (const auto& round : t.frobenius.rounds) {
            if (round.squarings.size() != bits - 1) return false;
            UniPoly s = base;
            for (const auto& sq : round.squarings) {
                s = reduce(s * s);
                if (!(s == sq)) return false;
            }
            UniPoly acc = UniPoly::constant(m, 1);
            for (unsigned i = 0; i < bits; ++i) {
                if (!((t.p >> i) & 1)) continue;
                acc = reduce(acc * (i == 0 ? base : round.squarings[i - 1]));
            }
            if (!(acc == round.result)) return false;
            base = round.result;
        }

        if (t.euclid.size() < 2) return false;
        if (!(t.euclid.front() == t.modulus_poly)) return false;
        if (!(t.euclid[1] == reduce(base - x))) return false;
        if (!t.euclid.back().is_zero()) return false;
        for (std::size_t k = 2; k < t.euclid.size(); ++k) {
            if (t.euclid[k - 1].is_zero()) return false;
            if (!(t.euclid[k] == divmod(t.euclid[k - 2], t.euclid[k - 1]).second)) return false;
        }
        const UniPoly& last = t.euclid[t.euclid.size() - 2];
        if (last.is_zero()) return false;
        return t.gcd == last.monic();
    } catch (const Error&) {
        return false;
    }
}

int moebius(std::uint64_t k) {
    if (k < 1) throw ConfigOutOfRange("moebius argument must be positive");
    int factors = 0;
    for (std::uint64_t q = 2; q * q <= k; ++q) {
        if (k % q) continue;
        k /= q;
        if (k % q == 0) return 0;
        ++factors;
    }
    if (k > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

CountReport count_distinct_t(const BivariateInstance& inst, GRoute route) {
    UniPoly g = build_g(inst, route);
    UniPoly h = squarefree_part(g);
    const long distinct = h.degree();
    return CountReport{inst.f.modulus().value(), inst.n, inst.m, std::move(g), std::move(h),
                       distinct,                 {},     {},     {}};
}

CountReport per_degree_counts(const BivariateInstance& inst, long dmax, GRoute route) {
    if (dmax < 1) throw ConfigOutOfRange("dmax must be at least 1");
    CountReport report = count_distinct_t(inst, route);
    if (report.squarefree.degree() < 1) {
        for (long d = 1; d <= dmax; ++d) {
            report.cumulative[d] = 0;
            report.exact[d] = 0;
        }
        return report;
    }
    for (long d = 1; d <= dmax; ++d) {
        GcdDerivation deriv =
            frobenius_gcd_derivation(report.squarefree, static_cast<std::uint32_t>(d));
        report.cumulative[d] = deriv.gcd.degree();
        report.transcripts.push_back(std::move(deriv));
    }
    for (long d = 1; d <= dmax; ++d) {
        long e_d = 0;
        for (long e = 1; e <= d; ++e) {
            if (d % e) continue;
            e_d += moebius(static_cast<std::uint64_t>(d / e)) * report.cumulative[e];
        }
        report.exact[d] = e_d;
    }
    return report;
}

DecideResult decide_no_zero(const BivariateInstance& inst) {
    if (inst.f.modulus().value() > 101)
        throw ConfigOutOfRange("decision procedure capped at p <= 101");
    UniPoly g = build_g(inst, GRoute::Product);
    if (g.is_zero()) return DecideResult{false, std::move(g), std::nullopt};
    if (g.degree() == 0) return DecideResult{true, std::move(g), std::nullopt};
    GcdDerivation deriv = frobenius_gcd_derivation(g, 1);
    const bool no_zero = deriv.gcd.degree() == 0;
    return DecideResult{no_zero, std::move(g), std::move(deriv)};
}

std::size_t CountReport::transcript_len() const {
    std::size_t total = 0;
    for (const auto& t : transcripts) total += t.element_count();
    return total;
}

namespace {

nlohmann::json derivation_json(const GcdDerivation& t) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& round : t.frobenius.rounds) {
        nlohmann::json squarings = nlohmann::json::array();
        for (const auto& s : round.squarings) squarings.push_back(s.to_string());
        rounds.push_back({{"squarings", squarings}, {"result", round.result.to_string()}});
    }
    nlohmann::json euclid = nlohmann::json::array();
    for (const auto& r : t.euclid) euclid.push_back(r.to_string());
    return {{"p", t.p},
            {"rounds", t.rounds},
            {"modulus", t.modulus_poly.to_string()},
            {"frobenius", rounds},
            {"euclid", euclid},
            {"gcd", t.gcd.to_string()}};
}

}  // namespace

std::string to_json(const GcdDerivation& t) { return derivation_json(t).dump(); }

std::string CountReport::to_json(bool include_transcript) const {
    nlohmann::json j;
    j["schema"] = "1";
    j["p"] = p;
    j["n"] = n;
    j["m"] = m;
    j["deg_g"] = g.degree();
    j["distinct_t"] = distinct_t;
    nlohmann::json cum = nlohmann::json::object();
    for (const auto& [d, c] : cumulative) cum[std::to_string(d)] = c;
    j["cumulative"] = cum;
    nlohmann::json ex = nlohmann::json::object();
    for (const auto& [d, c] : exact) ex[std::to_string(d)] = c;
    j["exact"] = ex;
    j["transcript_len"] = transcript_len();
    if (include_transcript) {
        nlohmann::json ts = nlohmann::json::array();
        for (const auto& t : transcripts) ts.push_back(derivation_json(t));
        j["transcript"] = ts;
    }
    return j.dump();
}

}  // namespace rabin
