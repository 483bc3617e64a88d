#pragma once

// Test-side generators and small independent oracles, kept out of the
// library on purpose: the exhaustive sweeps need graph/composition
// universes, and those must not share code with the implementation under
// test.

#include <map>
#include <string>
#include <vector>

#include "zetagraph/cotree.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/graphzeta.hpp"

namespace zetagraph::testsupport {

namespace detail {

struct CographGen {
    std::map<int, std::map<int, std::vector<SimpleGraph>>> memo;  // (k, ban) -> graphs

    std::vector<SimpleGraph> all(int k, Cotree::Op ban) {
        auto& slot = memo[k][static_cast<int>(ban)];
        if (!slot.empty() || k == 0) return slot;
        if (k == 1) {
            slot.push_back(SimpleGraph(1));
            return slot;
        }
        for (Cotree::Op op : {Cotree::Op::disjoint, Cotree::Op::join}) {
            if (op == ban) continue;
            std::vector<int> partition;
            build(op, k, k, partition, slot);
        }
        return slot;
    }

    void build(Cotree::Op op, int remaining, int max_part, std::vector<int>& partition,
               std::vector<SimpleGraph>& result) {
        if (remaining == 0) {
            if (partition.size() < 2) return;
            std::vector<SimpleGraph> acc{SimpleGraph(0)};
            for (int part : partition) {
                std::vector<SimpleGraph> next;
                for (const auto& g : acc)
                    for (const auto& child : all(part, op))
                        next.push_back(op == Cotree::Op::disjoint ? g.disjoint_union(child)
                                                                  : g.join(child));
                acc = std::move(next);
            }
            for (auto& g : acc) result.push_back(std::move(g));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            partition.push_back(part);
            build(op, remaining - part, part, partition, result);
            partition.pop_back();
        }
    }
};

}  // namespace detail

/// One representative per isomorphism class of cographs on exactly n
/// vertices, generated from cotree shapes and de-duplicated by the canonical
/// cotree string.
inline std::vector<SimpleGraph> all_cographs(int n) {
    detail::CographGen gen;
    std::map<std::string, SimpleGraph> dedup;
    for (const auto& g : gen.all(n, Cotree::Op::leaf)) dedup.emplace(cotree(g).canonical(), g);
    std::vector<SimpleGraph> out;
    out.reserve(dedup.size());
    for (auto& [key, g] : dedup) out.push_back(g);
    return out;
}

/// All compositions of the integer `total`.
inline std::vector<Composition> all_compositions(int total) {
    std::vector<Composition> out;
    for (int code = 0; code < (1 << (total - 1)); ++code) {
        Composition k;
        long long run = 1;
        for (int pos = 0; pos < total - 1; ++pos) {
            if (code & (1 << pos)) {
                k.parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        k.parts.push_back(run);
        out.push_back(std::move(k));
    }
    return out;
}

/// One representative per isomorphism class of simple graphs on n vertices
/// (n <= 7), by canonicalising adjacency bitstrings over all vertex
/// permutations. Optionally drops graphs with isolated vertices.
inline std::vector<SimpleGraph> all_graphs(int n, bool without_isolated = false) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int np = static_cast<int>(pairs.size());

    auto code_of = [&](const SimpleGraph& g, const std::vector<int>& p) {
        unsigned long long code = 0;
        for (int idx = 0; idx < np; ++idx) {
            auto [i, j] = pairs[static_cast<size_t>(idx)];
            if (g.adjacent(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]))
                code |= 1ULL << idx;
        }
        return code;
    };

    std::map<unsigned long long, SimpleGraph> reps;
    for (unsigned long long bits = 0; bits < (1ULL << np); ++bits) {
        SimpleGraph g(n);
        for (int idx = 0; idx < np; ++idx)
            if (bits & (1ULL << idx)) g.add_edge(pairs[static_cast<size_t>(idx)].first,
                                                 pairs[static_cast<size_t>(idx)].second);
        if (without_isolated) {
            bool iso = false;
            for (int v = 0; v < n; ++v)
                if (g.neighbors(v) == 0) iso = true;
            if (iso) continue;
        }
        std::vector<int> p = perm;
        unsigned long long best = ~0ULL;
        do {
            best = std::min(best, code_of(g, p));
        } while (std::next_permutation(p.begin(), p.end()));
        reps.emplace(best, g);
    }
    std::vector<SimpleGraph> out;
    out.reserve(reps.size());
    for (auto& [key, g] : reps) out.push_back(g);
    return out;
}

}  // namespace zetagraph::testsupport
