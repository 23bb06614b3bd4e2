#include "rabin/eliminate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace rabin {

EliminationPlan EliminationPlan::defaults(std::uint32_t arity) {
    EliminationPlan plan;
    for (std::uint32_t v = arity; v-- > 0;) plan.variable_order.push_back(v);
    return plan;
}

void TermGrowthLog::write_csv(std::ostream& out) const {
    out << "step,method,var,terms,maxdeg,micros\n";
    for (const auto& r : rows)
        out << r.step << ',' << r.method << ',' << r.var << ',' << r.terms << ',' << r.maxdeg
            << ',' << r.micros << '\n';
}

std::string TermGrowthLog::to_csv() const {
    std::ostringstream out;
    write_csv(out);
    return out.str();
}

namespace {

long max_var_degree(const MultiPoly& f) {
    long d = -1;
    for (std::uint32_t v = 0; v < f.arity(); ++v) d = std::max(d, f.degree_in(v));
    return d;
}

}  // namespace

MultiPoly rabin_step(const MultiPoly& a, const MultiPoly& b, std::uint32_t var,
                     Strategy strategy) {
    return resultant(a, b, var, strategy);
}

RabinBasis rabin_basis(const std::vector<MultiPoly>& system, const EliminationPlan& plan,
                       Strategy strategy) {
    if (system.empty()) throw EmptySystem("elimination needs at least one polynomial");
    const std::uint32_t arity = system.front().arity();
    for (const auto& f : system) {
        if (f.arity() != arity) throw ArityMismatch("system members differ in arity");
        if (!(f.modulus() == system.front().modulus()))
            throw ModulusMismatch("system members differ in modulus");
    }
    std::vector<bool> named(arity, false);
    for (std::uint32_t v : plan.variable_order) {
        if (v >= arity) throw VarOutOfRange("elimination order names a variable out of range");
        if (named[v]) throw ConfigOutOfRange("elimination order repeats a variable");
        named[v] = true;
    }

    RabinBasis basis;
    for (const auto& f : system) basis.nodes.push_back({f, -1, -1, 0});
    std::vector<std::size_t> active(system.size());
    std::iota(active.begin(), active.end(), std::size_t{0});

    std::size_t step = 0;
    for (std::uint32_t var : plan.variable_order) {
        std::vector<std::size_t> pos;  // positions in `active` that involve var
        for (std::size_t i = 0; i < active.size(); ++i)
            if (basis.nodes[active[i]].poly.degree_in(var) >= 1) pos.push_back(i);
        if (pos.size() <= 1) continue;

        std::vector<std::size_t> order = pos;
        if (plan.pair_strategy == PairStrategy::MinDegreeFirst)
            std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                return basis.nodes[active[x]].poly.degree_in(var) <
                       basis.nodes[active[y]].poly.degree_in(var);
            });

        std::vector<std::size_t> out;  // node id per adjacent pair
        for (std::size_t j = 0; j + 1 < order.size(); ++j) {
            const std::size_t na = active[order[j]];
            const std::size_t nb = active[order[j + 1]];
            MultiPoly r = rabin_step(basis.nodes[na].poly, basis.nodes[nb].poly, var, strategy);
            basis.log.rows.push_back(
                {step++, "rabin-step", var, r.term_count(), max_var_degree(r), 0});
            if (r.is_zero()) {
                basis.shared_factors.push_back({na, nb, var});
                out.push_back(nb);
            } else {
                basis.nodes.push_back(
                    {std::move(r), static_cast<long>(na), static_cast<long>(nb), var});
                out.push_back(basis.nodes.size() - 1);
            }
        }

        // Outputs fill the first pos.size()-1 involved positions, the last
        // involved position is dropped, everything else keeps its place.
        std::vector<bool> involved(active.size(), false);
        for (std::size_t i : pos) involved[i] = true;
        std::vector<std::size_t> next;
        std::size_t oi = 0;
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (!involved[i])
                next.push_back(active[i]);
            else if (oi < out.size())
                next.push_back(out[oi++]);
        }
        active = std::move(next);
    }

    basis.generators = active;
    return basis;
}

namespace {

// coefficient of var^k with the var exponent stripped, arity preserved
MultiPoly coeff_of(const MultiPoly& f, std::uint32_t var, long k) {
    MultiPoly r(f.arity(), f.modulus());
    for (const auto& [e, c] : f.terms()) {
        if (static_cast<long>(e[var]) != k) continue;
        ExponentVec s(e);
        s[var] = 0;
        r = r + MultiPoly::monomial(f.arity(), f.modulus(), c, s);
    }
    return r;
}

// one fraction-free division step: lc(b)*r - lc(r)*var^(dr-db)*b
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::uint32_t var) {
    const long db = b.degree_in(var);
    const MultiPoly lcb = coeff_of(b, var, db);
    MultiPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const long dr = r.degree_in(var);
        const MultiPoly lcr = coeff_of(r, var, dr);
        ExponentVec shift(a.arity(), 0);
        shift[var] = static_cast<std::uint32_t>(dr - db);
        r = lcb * r - (lcr * b).times_monomial(1, shift);
    }
    return r;
}

}  // namespace

std::pair<MultiPoly, TermGrowthLog> eea_parametric_gcd(const MultiPoly& a, const MultiPoly& b,
                                                       std::uint32_t var, std::size_t term_cap,
                                                       bool timings) {
    if (a.arity() != b.arity()) throw ArityMismatch("inputs of different arity");
    if (!(a.modulus() == b.modulus())) throw ModulusMismatch("inputs over different moduli");
    if (var >= a.arity()) throw VarOutOfRange("variable index out of range");
    if (b.is_zero()) throw ZeroDivisor("divisor chain starts at zero");
    if (a.degree_in(var) < b.degree_in(var))
        throw ConfigOutOfRange("first input must have the larger degree in the variable");

    TermGrowthLog log;
    std::size_t step = 0;
    auto row = [&](const std::string& tag, const MultiPoly& f, std::uint64_t micros) {
        log.rows.push_back({step++, tag, var, f.term_count(), max_var_degree(f), micros});
    };
    row("expansion", a, 0);
    row("expansion", b, 0);

    MultiPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        const auto t0 = std::chrono::steady_clock::now();
        MultiPoly r2 = pseudo_remainder(r0, r1, var);
        const auto t1 = std::chrono::steady_clock::now();
        const std::uint64_t micros =
            timings ? static_cast<std::uint64_t>(
                          std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count())
                    : 0;
        if (term_cap != 0 && r2.term_count() > term_cap) {
            row("eea-capped", r2, micros);
            return {std::move(r2), std::move(log)};
        }
        row("expansion", r2, micros);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return {std::move(r0), std::move(log)};
}

namespace {

MultiPoly random_dense_in_var(std::uint32_t arity, const PrimeModulus& m, std::uint32_t var,
                              std::uint32_t degree, std::uint32_t terms, std::mt19937_64& rng) {
    const std::uint64_t p = m.value();
    const std::uint32_t emax = std::max(degree, terms - 1);
    MultiPoly f(arity, m);
    for (std::uint32_t k = 0; k <= degree; ++k) {
        // coefficient of var^k: exactly `terms` distinct monomials in the
        // other variables
        std::set<ExponentVec> chosen;
        while (chosen.size() < terms) {
            ExponentVec e(arity, 0);
            for (std::uint32_t v = 0; v < arity; ++v)
                if (v != var) e[v] = static_cast<std::uint32_t>(rng() % (emax + 1));
            chosen.insert(e);
        }
        MultiPoly c(arity, m);
        for (const auto& e : chosen)
            c = c + MultiPoly::monomial(arity, m, 1 + rng() % (p - 1), e);
        ExponentVec shift(arity, 0);
        shift[var] = k;
        f = f + c.times_monomial(1, shift);
    }
    return f;
}

}  // namespace

TermGrowthLog bench_growth(const GrowthBenchConfig& config) {
    if (config.degree < 1 || config.degree > 6)
        throw ConfigOutOfRange("degree must be between 1 and 6");
    if (config.arity < 2 || config.arity > 3)
        throw ConfigOutOfRange("arity must be 2 or 3");
    if (config.trials < 1) throw ConfigOutOfRange("at least one trial required");
    if (config.terms < 1) throw ConfigOutOfRange("coefficient term budget must be positive");
    const PrimeModulus m(config.p);
    const std::uint32_t var = config.arity - 1;

    std::mt19937_64 rng(config.seed);
    TermGrowthLog log;
    std::size_t step = 0;
    auto timed = [&](auto&& fn) -> std::pair<MultiPoly, std::uint64_t> {
        const auto t0 = std::chrono::steady_clock::now();
        MultiPoly r = fn();
        const auto t1 = std::chrono::steady_clock::now();
        const std::uint64_t micros =
            config.timings
                ? static_cast<std::uint64_t>(
                      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count())
                : 0;
        return {std::move(r), micros};
    };

    for (std::uint32_t trial = 0; trial < config.trials; ++trial) {
        const MultiPoly a =
            random_dense_in_var(config.arity, m, var, config.degree, config.terms, rng);
        const MultiPoly b =
            random_dense_in_var(config.arity, m, var, config.degree, config.terms, rng);

        auto [gcd_like, eea_log] =
            eea_parametric_gcd(a, b, var, config.term_cap, config.timings);
        (void)gcd_like;
        for (auto& r : eea_log.rows) {
            r.step = step++;
            log.rows.push_back(r);
        }

        auto [rp, rp_micros] = timed([&] { return resultant(a, b, var, Strategy::Propagate); });
        log.rows.push_back(
            {step++, "res-propagate", var, rp.term_count(), max_var_degree(rp), rp_micros});

        if (config.arity == 2) {
            auto [ri, ri_micros] = timed([&] { return resultant(a, b, var, Strategy::Interp); });
            log.rows.push_back(
                {step++, "res-interp", var, ri.term_count(), max_var_degree(ri), ri_micros});
        }
    }
    return log;
}

}  // namespace rabin
