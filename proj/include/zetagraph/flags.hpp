#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hypergraph.hpp"

namespace zetagraph {

/// A flag of subsets of [n]: a chain I_1 < I_2 < ... < I_l under strict
/// inclusion, stored ascending. The empty chain and chains containing the
/// empty set or the full set are all allowed.
struct Flag {
    std::vector<Mask> chain;  // strictly increasing by inclusion

    int rank() const { return chain.empty() ? 0 : popcount(chain.back()); }
    Mask sup() const { return chain.empty() ? 0 : chain.back(); }
};

namespace detail {

template <typename Visitor>
void flags_below(Mask top, std::vector<Mask>& scratch, Visitor& visit) {
    // scratch holds the chain top-down (descending); reported as-is.
    visit(scratch);
    if (top == 0) return;
    for (Mask s = (top - 1) & top;; s = (s - 1) & top) {
        scratch.push_back(s);
        flags_below(s, scratch, visit);
        scratch.pop_back();
        if (s == 0) break;
    }
}

}  // namespace detail

/// Visits every element of WO-hat([n]) exactly once, in a fixed order: the
/// empty flag first, then chains grouped by their maximal member, maximal
/// members descending, tails recursing the same way. The visitor receives
/// the chain in descending order (maximal member first).
template <typename Visitor>
void visit_flags_descending(int n, Visitor visit) {
    std::vector<Mask> scratch;
    visit(scratch);  // empty flag
    Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
    for (Mask top = full;; --top) {
        scratch.push_back(top);
        detail::flags_below(top, scratch, visit);
        scratch.pop_back();
        if (top == 0) break;
    }
}

/// Streaming enumeration of WO-hat([n]) as Flag values (chains ascending).
inline void enumerate_flags(int n, const std::function<void(const Flag&)>& fn) {
    visit_flags_descending(n, [&](const std::vector<Mask>& desc) {
        Flag f;
        f.chain.assign(desc.rbegin(), desc.rend());
        fn(f);
    });
}

inline long long count_flags(int n) {
    long long count = 0;
    visit_flags_descending(n, [&](const std::vector<Mask>&) { ++count; });
    return count;
}

}  // namespace zetagraph
