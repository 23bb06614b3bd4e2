#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rabin/count.hpp"
#include "rabin/eliminate.hpp"
#include "rabin/instances.hpp"
#include "rabin/oracle.hpp"
#include "rabin/resultant.hpp"

namespace {

using nlohmann::json;

std::uint32_t parse_var_name(const std::string& s, std::uint32_t arity) {
    std::uint64_t index = 0;
    if (s == "t") {
        index = 0;
    } else if (s == "x") {
        index = 1;
    } else {
        std::size_t at = 0;
        if (!s.empty() && s[0] == 'x') at = 1;
        if (at >= s.size()) throw rabin::UnknownVariable("unknown variable '" + s + "'", 0);
        for (std::size_t i = at; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw rabin::UnknownVariable("unknown variable '" + s + "'", i);
            index = index * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (index > 0xffffffffULL)
                throw rabin::UnknownVariable("variable index too large", i);
        }
    }
    if (index >= arity)
        throw rabin::UnknownVariable("variable '" + s + "' outside arity " + std::to_string(arity),
                                     0);
    return static_cast<std::uint32_t>(index);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty()) throw rabin::SyntaxError("empty number", 0);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw rabin::SyntaxError("bad number '" + s + "'", i);
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
    }
    return v;
}

// Largest variable index mentioned in the texts, as a fallback arity.
std::uint32_t infer_arity(const std::vector<std::string>& texts) {
    std::uint32_t arity = 1;
    for (const auto& s : texts) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 't') arity = std::max(arity, 1u);
            if (s[i] != 'x') continue;
            std::size_t j = i + 1;
            std::uint64_t index = 1;  // bare x is x1
            if (j < s.size() && s[j] >= '0' && s[j] <= '9') {
                index = 0;
                while (j < s.size() && s[j] >= '0' && s[j] <= '9')
                    index = index * 10 + static_cast<std::uint64_t>(s[j++] - '0');
            }
            if (index < 0xffffffffULL)
                arity = std::max(arity, static_cast<std::uint32_t>(index + 1));
        }
    }
    return arity;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw rabin::Error("cannot open output file: " + path);
    f << text;
}

rabin::Strategy strategy_from(const std::string& s) {
    if (s == "auto") return rabin::Strategy::Auto;
    if (s == "leibniz") return rabin::Strategy::Leibniz;
    if (s == "propagate") return rabin::Strategy::Propagate;
    if (s == "interp") return rabin::Strategy::Interp;
    throw rabin::ConfigOutOfRange("unknown strategy '" + s + "'");
}

std::string strategy_name(rabin::Strategy s) {
    switch (s) {
        case rabin::Strategy::Leibniz:
            return "leibniz";
        case rabin::Strategy::Propagate:
            return "propagate";
        case rabin::Strategy::Interp:
            return "interp";
        default:
            return "auto";
    }
}

json log_json(const rabin::TermGrowthLog& log) {
    json rows = json::array();
    for (const auto& r : log.rows)
        rows.push_back({{"step", r.step},
                        {"method", r.method},
                        {"var", r.var},
                        {"terms", r.terms},
                        {"maxdeg", r.maxdeg},
                        {"micros", r.micros}});
    return rows;
}

struct ResArgs {
    std::uint64_t p = 0;
    std::uint32_t arity = 0;
    std::string var, strategy = "auto", format = "text", out;
    bool timings = false;
    std::vector<std::string> polys;
};

void run_res(const ResArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const std::uint32_t arity = a.arity ? a.arity : infer_arity(a.polys);
    const rabin::MultiPoly f = rabin::MultiPoly::parse(a.polys[0], arity, m);
    const rabin::MultiPoly g = rabin::MultiPoly::parse(a.polys[1], arity, m);
    const std::uint32_t var = a.var.empty() ? arity - 1 : parse_var_name(a.var, arity);
    const rabin::Strategy strategy =
        rabin::resolve_strategy(f, g, var, strategy_from(a.strategy));

    const auto t0 = std::chrono::steady_clock::now();
    const rabin::MultiPoly r = rabin::resultant(f, g, var, strategy);
    const auto t1 = std::chrono::steady_clock::now();
    const std::uint64_t micros =
        a.timings ? static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count())
                  : 0;

    const long dim = f.degree_in(var) + g.degree_in(var);
    std::vector<long> deg;
    for (std::uint32_t v = 0; v < arity; ++v) deg.push_back(r.degree_in(v));

    if (a.format == "json") {
        json j;
        j["schema"] = "1";
        j["resultant"] = r.to_string();
        j["D"] = dim;
        j["strategy"] = strategy_name(strategy);
        j["terms"] = r.term_count();
        j["deg"] = deg;
        j["micros"] = micros;
        emit(a.out, j.dump() + "\n");
        return;
    }
    std::ostringstream text;
    text << r.to_string() << "\n# D=" << dim << " strategy=" << strategy_name(strategy)
         << " terms=" << r.term_count() << " deg=";
    for (std::size_t i = 0; i < deg.size(); ++i) text << (i ? "," : "") << deg[i];
    text << " micros=" << micros << "\n";
    emit(a.out, text.str());
}

struct EliminateArgs {
    std::uint64_t p = 0;
    std::uint32_t arity = 0;
    std::string order, pair_strategy = "input-order", strategy = "auto", out;
    std::vector<std::string> polys;
};

void run_eliminate(const EliminateArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const std::uint32_t arity = a.arity ? a.arity : infer_arity(a.polys);
    std::vector<rabin::MultiPoly> system;
    for (const auto& s : a.polys) system.push_back(rabin::MultiPoly::parse(s, arity, m));

    rabin::EliminationPlan plan = rabin::EliminationPlan::defaults(arity);
    if (!a.order.empty()) {
        plan.variable_order.clear();
        for (const auto& name : split_commas(a.order))
            plan.variable_order.push_back(parse_var_name(name, arity));
    }
    if (a.pair_strategy == "min-degree-first")
        plan.pair_strategy = rabin::PairStrategy::MinDegreeFirst;
    else if (a.pair_strategy != "input-order")
        throw rabin::ConfigOutOfRange("unknown pair strategy '" + a.pair_strategy + "'");

    const rabin::RabinBasis basis =
        rabin::rabin_basis(system, plan, strategy_from(a.strategy));

    json j;
    j["schema"] = "1";
    json gens = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) gens.push_back(basis.generator(i).to_string());
    j["generators"] = gens;
    json prov = json::array();
    for (std::size_t i = 0; i < basis.nodes.size(); ++i) {
        const auto& node = basis.nodes[i];
        json entry;
        entry["id"] = i;
        entry["poly"] = node.poly.to_string();
        if (node.is_input()) {
            entry["input"] = true;
        } else {
            entry["parents"] = {node.parent_a, node.parent_b};
            entry["var"] = node.var;
        }
        prov.push_back(entry);
    }
    j["provenance"] = prov;
    json shared = json::array();
    for (const auto& e : basis.shared_factors)
        shared.push_back({{"a", e.node_a}, {"b", e.node_b}, {"var", e.var}});
    j["shared_factors"] = shared;
    j["log"] = log_json(basis.log);
    emit(a.out, j.dump() + "\n");
}

struct CountArgs {
    std::uint64_t p = 0;
    long dmax = 0;  // 0 = default to max(1, m)
    std::string route = "product", out;
    bool strict = false, transcript = false;
    std::vector<std::string> polys;
};

void run_count(const CountArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const rabin::BivariateInstance inst =
        rabin::BivariateInstance::make(rabin::MultiPoly::parse(a.polys[0], 2, m), a.strict);
    const rabin::GRoute route =
        a.route == "sylvester" ? rabin::GRoute::Sylvester : rabin::GRoute::Product;
    if (a.route != "sylvester" && a.route != "product")
        throw rabin::ConfigOutOfRange("unknown route '" + a.route + "'");
    const long dmax = a.dmax > 0 ? a.dmax : std::max(1L, inst.m);
    const rabin::CountReport report = rabin::per_degree_counts(inst, dmax, route);
    emit(a.out, report.to_json(a.transcript) + "\n");
}

struct DecideArgs {
    std::uint64_t p = 0;
    std::string out;
    bool transcript = false;
    std::vector<std::string> polys;
};

void run_decide(const DecideArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const rabin::BivariateInstance inst =
        rabin::BivariateInstance::make(rabin::MultiPoly::parse(a.polys[0], 2, m));
    const rabin::DecideResult result = rabin::decide_no_zero(inst);
    json j;
    j["schema"] = "1";
    j["no_zero"] = result.no_zero;
    j["deg_g"] = result.g.degree();
    j["transcript_len"] =
        result.transcript ? result.transcript->element_count() : std::size_t{0};
    if (a.transcript && result.transcript)
        j["transcript"] = json::parse(rabin::to_json(*result.transcript));
    emit(a.out, j.dump() + "\n");
}

struct GenNonresidueArgs {
    std::uint64_t p = 0;
    std::string format = "text", out;
    std::vector<std::string> factors;
};

void run_gen_nonresidue(const GenNonresidueArgs& a) {
    rabin::SparsePolySpec spec{rabin::PrimeModulus(a.p), {}};
    for (const auto& triple : a.factors) {
        const auto parts = split_commas(triple);
        if (parts.size() != 3)
            throw rabin::ConfigOutOfRange("factor must be gamma,delta,r: '" + triple + "'");
        spec.factors.push_back(
            {parse_u64(parts[0]), parse_u64(parts[1]), parse_u64(parts[2])});
    }
    const rabin::UniPoly f = rabin::gen_nonresidue_product(spec);
    if (a.format == "json") {
        json j;
        j["schema"] = "1";
        j["poly"] = f.to_string();
        emit(a.out, j.dump() + "\n");
        return;
    }
    emit(a.out, f.to_string() + "\n");
}

std::string z_poly_text(const std::vector<std::pair<std::uint32_t, std::int64_t>>& terms) {
    std::ostringstream out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "x0";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

struct GenEisensteinArgs {
    std::uint64_t p = 0, pi = 0, seed = 1;
    std::string exponents, format = "text", out;
};

void run_gen_eisenstein(const GenEisensteinArgs& a) {
    std::vector<std::uint32_t> exps;
    for (const auto& s : split_commas(a.exponents)) {
        const std::uint64_t e = parse_u64(s);
        if (e > 0xffffffffULL) throw rabin::ConfigOutOfRange("exponent too large");
        exps.push_back(static_cast<std::uint32_t>(e));
    }
    const rabin::EisensteinPoly e = rabin::gen_eisenstein_sparse(a.p, a.pi, exps, a.seed);
    const bool holds = rabin::eisenstein_holds(e.z_terms, a.pi);
    // paired with itself: true iff the mod-p view is rootless on GF(p)
    const bool nonvanishing = rabin::decide_pair_nonvanishing(e.mod_p, e.mod_p);
    if (a.format == "json") {
        json j;
        j["schema"] = "1";
        j["z"] = z_poly_text(e.z_terms);
        j["mod_p"] = e.mod_p.to_string();
        j["eisenstein"] = holds;
        j["nonvanishing_mod_p"] = nonvanishing;
        emit(a.out, j.dump() + "\n");
        return;
    }
    std::ostringstream text;
    text << "z: " << z_poly_text(e.z_terms) << "\n";
    text << "mod_p: " << e.mod_p.to_string() << "\n";
    text << "eisenstein: " << (holds ? "true" : "false") << "\n";
    text << "nonvanishing_mod_p: " << (nonvanishing ? "true" : "false") << "\n";
    emit(a.out, text.str());
}

struct GenSubstArgs {
    std::uint64_t p = 0, r = 0;
    std::string format = "text", out;
    std::vector<std::string> polys;
};

void run_gen_subst(const GenSubstArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const rabin::UniPoly h =
        rabin::to_unipoly(rabin::MultiPoly::parse(a.polys[0], 1, m), 0);
    const rabin::UniPoly f = rabin::gen_substitution(h, a.r);
    if (a.format == "json") {
        json j;
        j["schema"] = "1";
        j["poly"] = f.to_string();
        emit(a.out, j.dump() + "\n");
        return;
    }
    emit(a.out, f.to_string() + "\n");
}

struct BenchArgs {
    std::uint64_t p = 31, seed = 1;
    std::uint32_t degree = 2, terms = 2, arity = 2, trials = 5;
    bool timings = false;
    std::string out;
};

void run_bench(const BenchArgs& a) {
    rabin::GrowthBenchConfig cfg;
    cfg.p = a.p;
    cfg.seed = a.seed;
    cfg.degree = a.degree;
    cfg.terms = a.terms;
    cfg.arity = a.arity;
    cfg.trials = a.trials;
    cfg.timings = a.timings;
    emit(a.out, rabin::bench_growth(cfg).to_csv());
}

struct OracleRootsArgs {
    std::uint64_t p = 0, seed = 1;
    std::uint32_t dmax = 1;
    std::string out;
    std::vector<std::string> polys;
};

void run_oracle_roots(const OracleRootsArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const rabin::MultiPoly f = rabin::MultiPoly::parse(a.polys[0], 2, m);
    const rabin::BivariateRootReport rep = rabin::brute_bivariate_roots(f, a.dmax, a.seed);
    json j;
    j["schema"] = "1";
    j["distinct_t"] = rep.distinct_t;
    json exact = json::object();
    for (const auto& [d, c] : rep.exact) exact[std::to_string(d)] = c;
    j["exact"] = exact;
    json witnesses = json::array();
    for (const auto& [t, x] : rep.witnesses) witnesses.push_back({t, x});
    j["witnesses"] = witnesses;
    emit(a.out, j.dump() + "\n");
}

struct OracleZerosArgs {
    std::uint64_t p = 0;
    std::uint32_t arity = 0;
    std::string out;
    std::vector<std::string> polys;
};

void run_oracle_zeros(const OracleZerosArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const std::uint32_t arity = a.arity ? a.arity : infer_arity(a.polys);
    std::vector<rabin::MultiPoly> system;
    for (const auto& s : a.polys) system.push_back(rabin::MultiPoly::parse(s, arity, m));
    const auto zeros = rabin::brute_system_zeros(system, m, arity);
    json j;
    j["schema"] = "1";
    json pts = json::array();
    for (const auto& z : zeros) pts.push_back(z);
    j["zeros"] = pts;
    emit(a.out, j.dump() + "\n");
}

struct OracleCommonArgs {
    std::uint64_t p = 0, seed = 1;
    std::uint32_t kmax = 2;
    std::string out;
    std::vector<std::string> polys;
};

void run_oracle_common(const OracleCommonArgs& a) {
    const rabin::PrimeModulus m(a.p);
    const rabin::UniPoly f = rabin::to_unipoly(rabin::MultiPoly::parse(a.polys[0], 1, m), 0);
    const rabin::UniPoly g = rabin::to_unipoly(rabin::MultiPoly::parse(a.polys[1], 1, m), 0);
    const auto witness = rabin::brute_common_root(f, g, a.kmax, a.seed);
    json j;
    j["schema"] = "1";
    j["found"] = witness.has_value();
    if (witness) {
        j["ext_degree"] = witness->ext_degree;
        j["root"] = witness->root;
    }
    emit(a.out, j.dump() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resultant elimination and finite-field root counting"};
    app.require_subcommand(1);

    ResArgs res_args;
    auto* res = app.add_subcommand("res", "resultant of two polynomials in one variable");
    res->add_option("-p", res_args.p, "prime modulus")->required();
    res->add_option("-n,--arity", res_args.arity, "number of variables");
    res->add_option("--var", res_args.var, "variable to eliminate (default: highest)");
    res->add_option("--strategy", res_args.strategy, "auto|leibniz|propagate|interp")
        ->check(CLI::IsMember({"auto", "leibniz", "propagate", "interp"}));
    res->add_option("--format", res_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    res->add_option("-o,--out", res_args.out, "output file (default stdout)");
    res->add_flag("--timings", res_args.timings, "measure wall-clock durations");
    res->add_option("polys", res_args.polys, "two polynomials")->expected(2)->required();

    EliminateArgs elim_args;
    auto* elim = app.add_subcommand("eliminate", "pairwise resultant basis of a system");
    elim->add_option("-p", elim_args.p, "prime modulus")->required();
    elim->add_option("-n,--arity", elim_args.arity, "number of variables");
    elim->add_option("--order", elim_args.order,
                     "comma-separated elimination order (default: highest first)");
    elim->add_option("--pair-strategy", elim_args.pair_strategy,
                     "input-order|min-degree-first")
        ->check(CLI::IsMember({"input-order", "min-degree-first"}));
    elim->add_option("--strategy", elim_args.strategy, "per-step resultant strategy")
        ->check(CLI::IsMember({"auto", "leibniz", "propagate", "interp"}));
    elim->add_option("-o,--out", elim_args.out, "output file (default stdout)");
    elim->add_option("polys", elim_args.polys, "system polynomials")->required();

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "distinct parameter values with a root in x");
    count->add_option("-p", count_args.p, "prime modulus")->required();
    count->add_option("--dmax", count_args.dmax, "largest extension degree (default: m)");
    count->add_option("--route", count_args.route, "product|sylvester")
        ->check(CLI::IsMember({"product", "sylvester"}));
    count->add_flag("--strict", count_args.strict, "require the strict coefficient shape");
    count->add_flag("--transcript", count_args.transcript, "include gcd derivations");
    count->add_option("-o,--out", count_args.out, "output file (default stdout)");
    count->add_option("polys", count_args.polys, "f(t, x), monic in x")->expected(1)->required();

    DecideArgs decide_args;
    auto* decide = app.add_subcommand("decide", "whether f(t, x) never vanishes on GF(p)^2");
    decide->add_option("-p", decide_args.p, "prime modulus")->required();
    decide->add_flag("--transcript", decide_args.transcript, "include the gcd derivation");
    decide->add_option("-o,--out", decide_args.out, "output file (default stdout)");
    decide->add_option("polys", decide_args.polys, "f(t, x), monic in x")
        ->expected(1)
        ->required();

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);

    GenNonresidueArgs nr_args;
    auto* nr = gen->add_subcommand("nonresidue", "rootless product of gamma*x^r - delta factors");
    nr->add_option("-p", nr_args.p, "prime modulus")->required();
    nr->add_option("--factors", nr_args.factors, "factor as gamma,delta,r (repeatable)")
        ->required();
    nr->add_option("--format", nr_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    nr->add_option("-o,--out", nr_args.out, "output file (default stdout)");

    GenEisensteinArgs ei_args;
    auto* ei = gen->add_subcommand("eisenstein", "sparse integer polynomial, Eisenstein at pi");
    ei->add_option("-p", ei_args.p, "prime modulus")->required();
    ei->add_option("--pi", ei_args.pi, "auxiliary prime")->required();
    ei->add_option("--exponents", ei_args.exponents, "comma-separated support, starting at 0")
        ->required();
    ei->add_option("--seed", ei_args.seed, "rng seed");
    ei->add_option("--format", ei_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    ei->add_option("-o,--out", ei_args.out, "output file (default stdout)");

    GenSubstArgs su_args;
    auto* su = gen->add_subcommand("subst", "h(x^r) with exponents reduced mod p-1");
    su->add_option("-p", su_args.p, "prime modulus")->required();
    su->add_option("--r", su_args.r, "substitution exponent, coprime to p-1")->required();
    su->add_option("--format", su_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    su->add_option("-o,--out", su_args.out, "output file (default stdout)");
    su->add_option("polys", su_args.polys, "rootless base polynomial in t")
        ->expected(1)
        ->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "term-growth comparison CSV");
    bench->add_option("-p", bench_args.p, "prime modulus");
    bench->add_option("-d,--degree", bench_args.degree, "degree in the eliminated variable");
    bench->add_option("-L,--terms", bench_args.terms, "terms per coefficient");
    bench->add_option("-n,--arity", bench_args.arity, "number of variables (2 or 3)");
    bench->add_option("--trials", bench_args.trials, "instances per run");
    bench->add_option("--seed", bench_args.seed, "rng seed");
    bench->add_flag("--timings", bench_args.timings, "fill the micros column");
    bench->add_option("-o,--out", bench_args.out, "output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->require_subcommand(1);

    OracleRootsArgs or_args;
    auto* oroots = oracle->add_subcommand("roots", "enumerate parameter values with a root");
    oroots->add_option("-p", or_args.p, "prime modulus")->required();
    oroots->add_option("--dmax", or_args.dmax, "largest extension degree");
    oroots->add_option("--seed", or_args.seed, "extension construction seed");
    oroots->add_option("-o,--out", or_args.out, "output file (default stdout)");
    oroots->add_option("polys", or_args.polys, "f(t, x)")->expected(1)->required();

    OracleZerosArgs oz_args;
    auto* ozeros = oracle->add_subcommand("zeros", "common zeros of a system over GF(p)^n");
    ozeros->add_option("-p", oz_args.p, "prime modulus")->required();
    ozeros->add_option("-n,--arity", oz_args.arity, "number of variables");
    ozeros->add_option("-o,--out", oz_args.out, "output file (default stdout)");
    ozeros->add_option("polys", oz_args.polys, "system polynomials");

    OracleCommonArgs oc_args;
    auto* ocommon = oracle->add_subcommand("common", "smallest-degree shared root");
    ocommon->add_option("-p", oc_args.p, "prime modulus")->required();
    ocommon->add_option("--kmax", oc_args.kmax, "largest extension degree");
    ocommon->add_option("--seed", oc_args.seed, "extension construction seed");
    ocommon->add_option("-o,--out", oc_args.out, "output file (default stdout)");
    ocommon->add_option("polys", oc_args.polys, "two univariate polynomials")
        ->expected(2)
        ->required();

    try {
        app.parse(argc, argv);
        if (res->parsed()) run_res(res_args);
        if (elim->parsed()) run_eliminate(elim_args);
        if (count->parsed()) run_count(count_args);
        if (decide->parsed()) run_decide(decide_args);
        if (nr->parsed()) run_gen_nonresidue(nr_args);
        if (ei->parsed()) run_gen_eisenstein(ei_args);
        if (su->parsed()) run_gen_subst(su_args);
        if (bench->parsed()) run_bench(bench_args);
        if (oroots->parsed()) run_oracle_roots(or_args);
        if (ozeros->parsed()) run_oracle_zeros(oz_args);
        if (ocommon->parsed()) run_oracle_common(oc_args);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const rabin::ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const rabin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 4;
    }
}
