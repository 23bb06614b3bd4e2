#pragma once

// Pairwise resultant elimination over a variable order, with provenance, plus
// the fraction-free extended-Euclidean comparator and its term-growth
// instrumentation.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rabin/resultant.hpp"

namespace rabin {

enum class PairStrategy { InputOrder, MinDegreeFirst };

struct EliminationPlan {
    // no duplicates, all indices < arity
    std::vector<std::uint32_t> variable_order;
    PairStrategy pair_strategy = PairStrategy::InputOrder;

    // every variable, highest index first
    static EliminationPlan defaults(std::uint32_t arity);
};

struct GrowthRow {
    std::size_t step = 0;
    std::string method;
    std::uint32_t var = 0;
    std::size_t terms = 0;
    long maxdeg = 0;  // largest per-variable degree
    std::uint64_t micros = 0;
};

struct TermGrowthLog {
    std::vector<GrowthRow> rows;

    void write_csv(std::ostream& out) const;
    std::string to_csv() const;
};

// Inputs come first, reduction outputs after; a reduction node stores the
// indices of its parents and the eliminated variable.
struct ProvenanceNode {
    MultiPoly poly;
    long parent_a = -1;
    long parent_b = -1;
    std::uint32_t var = 0;

    bool is_input() const { return parent_a < 0; }
};

// A pair whose resultant vanished; the basis keeps the pair's second element.
struct SharedFactorEvent {
    std::size_t node_a = 0;
    std::size_t node_b = 0;
    std::uint32_t var = 0;
};

struct RabinBasis {
    std::vector<ProvenanceNode> nodes;
    std::vector<std::size_t> generators;  // node ids of the surviving basis
    std::vector<SharedFactorEvent> shared_factors;
    TermGrowthLog log;

    std::size_t size() const { return generators.size(); }
    const MultiPoly& generator(std::size_t i) const { return nodes[generators[i]].poly; }
};

// One reduction: the resultant of the pair in the given variable.
MultiPoly rabin_step(const MultiPoly& a, const MultiPoly& b, std::uint32_t var,
                     Strategy strategy = Strategy::Auto);

RabinBasis rabin_basis(const std::vector<MultiPoly>& system, const EliminationPlan& plan,
                       Strategy strategy = Strategy::Auto);

// Fraction-free pseudo-remainder chain in `var`; returns the last nonzero
// remainder and a log with one "expansion" row per chain element.  A positive
// term_cap stops the chain once a remainder exceeds it (final row tagged
// "eea-capped").
std::pair<MultiPoly, TermGrowthLog> eea_parametric_gcd(const MultiPoly& a, const MultiPoly& b,
                                                       std::uint32_t var, std::size_t term_cap = 0,
                                                       bool timings = false);

struct GrowthBenchConfig {
    std::uint32_t degree = 2;  // degree of both inputs in the eliminated variable, <= 6
    std::uint32_t terms = 2;   // term budget per coefficient
    std::uint32_t arity = 2;   // <= 3; the eliminated variable is the highest
    std::uint64_t p = 31;
    std::uint64_t seed = 1;
    std::uint32_t trials = 1;
    bool timings = false;  // off: micros column stays 0 so reruns are byte-identical
    std::size_t term_cap = 100000;
};

// Random instances, each run through the Euclidean chain and the resultant
// strategies, all term counts logged under one global step counter.
TermGrowthLog bench_growth(const GrowthBenchConfig& config);

}  // namespace rabin
