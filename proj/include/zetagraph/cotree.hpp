#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace zetagraph {

struct NotCograph : std::runtime_error {
    std::array<int, 4> witness;  // an induced P4, in path order
    explicit NotCograph(std::array<int, 4> w)
        : std::runtime_error("not a cograph; induced P4 at (" + std::to_string(w[0]) + "," +
                             std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
                             std::to_string(w[3]) + ")"),
          witness(w) {}
};

/// Cotree node: a leaf carries its vertex; internal nodes carry a disjoint
/// union or join over >= 2 children, with adjacent internal labels distinct.
struct Cotree {
    enum class Op { leaf, disjoint, join };
    Op op = Op::leaf;
    int vertex = -1;
    std::vector<Cotree> children;

    bool is_leaf() const { return op == Op::leaf; }
    int leaf_count() const {
        if (is_leaf()) return 1;
        int s = 0;
        for (const auto& c : children) s += c.leaf_count();
        return s;
    }

    std::string sexpr() const {
        if (is_leaf()) return std::to_string(vertex);
        std::ostringstream os;
        os << "(" << (op == Op::disjoint ? "+" : "v");
        for (const auto& c : children) os << " " << c.sexpr();
        os << ")";
        return os.str();
    }

    /// Label-free canonical string, for isomorphism comparisons of cographs.
    std::string canonical() const {
        if (is_leaf()) return "*";
        std::vector<std::string> parts;
        parts.reserve(children.size());
        for (const auto& c : children) parts.push_back(c.canonical());
        std::sort(parts.begin(), parts.end());
        std::string out(op == Op::disjoint ? "(+" : "(v");
        for (const auto& p : parts) out += p;
        out += ")";
        return out;
    }
};

namespace detail {

/// Induced-P4 scan over 4-subsets; returns the path order if one exists.
inline bool find_induced_p4(const SimpleGraph& g, std::array<int, 4>& out) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int vs[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 3) continue;
                    int ones = 0, twos = 0;
                    for (int i = 0; i < 4; ++i) {
                        if (deg[i] == 1) ++ones;
                        if (deg[i] == 2) ++twos;
                    }
                    if (ones != 2 || twos != 2) continue;  // claw or triangle+isolated
                    int e1 = -1, mid1 = -1, mid2 = -1, e2 = -1;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] == 1) (e1 < 0 ? e1 : e2) = vs[i];
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] == 2) (mid1 < 0 ? mid1 : mid2) = vs[i];
                    if (!g.adjacent(e1, mid1)) std::swap(mid1, mid2);
                    if (!g.adjacent(mid2, e2)) continue;  // disconnected: triangle impossible here
                    out = {e1, mid1, mid2, e2};
                    return true;
                }
    return false;
}

inline Cotree decompose(const SimpleGraph& g, Mask within) {
    int size = popcount(within);
    if (size == 1) {
        Cotree t;
        t.op = Cotree::Op::leaf;
        for (int v = 0; v < g.n(); ++v)
            if (within & (Mask(1) << v)) t.vertex = v;
        return t;
    }
    auto comps = g.components(within);
    if (comps.size() >= 2) {
        Cotree t;
        t.op = Cotree::Op::disjoint;
        for (Mask c : comps) {
            Cotree child = decompose(g, c);
            if (child.op == Cotree::Op::disjoint) {
                for (auto& gc : child.children) t.children.push_back(std::move(gc));
            } else {
                t.children.push_back(std::move(child));
            }
        }
        return t;
    }
    // co-components: components of the complement restricted to `within`
    SimpleGraph gc = g.complement();
    auto cocomps = gc.components(within);
    if (cocomps.size() >= 2) {
        Cotree t;
        t.op = Cotree::Op::join;
        for (Mask c : cocomps) {
            Cotree child = decompose(g, c);
            if (child.op == Cotree::Op::join) {
                for (auto& gch : child.children) t.children.push_back(std::move(gch));
            } else {
                t.children.push_back(std::move(child));
            }
        }
        return t;
    }
    // connected and co-connected on >= 2 vertices: not a cograph
    std::array<int, 4> w{};
    // restrict the scan to `within` by building the induced subgraph
    std::vector<int> verts;
    for (int v = 0; v < g.n(); ++v)
        if (within & (Mask(1) << v)) verts.push_back(v);
    SimpleGraph sub(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    std::array<int, 4> local{};
    if (!find_induced_p4(sub, local))
        throw std::logic_error("decomposition stuck but no induced P4 found");
    for (int i = 0; i < 4; ++i) w[static_cast<size_t>(i)] = verts[static_cast<size_t>(local[static_cast<size_t>(i)])];
    throw NotCograph(w);
}

}  // namespace detail

/// Cograph recognition. Returns the canonical cotree or throws NotCograph
/// with an induced-P4 witness. For n <= 12 the decomposition is additionally
/// cross-checked against the quartic P4-free scan.
inline Cotree cotree(const SimpleGraph& g) {
    if (g.n() < 1) throw std::invalid_argument("cotree needs at least one vertex");
    bool scan_says_cograph = true;
    std::array<int, 4> scan_witness{};
    if (g.n() <= 12) scan_says_cograph = !detail::find_induced_p4(g, scan_witness);
    try {
        Cotree t = detail::decompose(g, g.full_mask());
        if (g.n() <= 12 && !scan_says_cograph)
            throw std::logic_error("cotree decomposition succeeded on a graph with an induced P4");
        return t;
    } catch (const NotCograph&) {
        if (g.n() <= 12 && scan_says_cograph)
            throw std::logic_error("cotree decomposition failed on a P4-free graph");
        throw;
    }
}

/// The witness P4 of a non-cograph (throws if g is a cograph).
inline std::array<int, 4> find_p4_witness(const SimpleGraph& g) {
    std::array<int, 4> w{};
    if (!detail::find_induced_p4(g, w)) throw std::invalid_argument("graph has no induced P4");
    return w;
}

inline bool is_cograph(const SimpleGraph& g) {
    if (g.n() < 1) return false;
    std::array<int, 4> w{};
    if (g.n() <= 12) return !detail::find_induced_p4(g, w);
    try {
        cotree(g);
        return true;
    } catch (const NotCograph&) {
        return false;
    }
}

}  // namespace zetagraph
