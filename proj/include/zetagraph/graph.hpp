#pragma once

#include <stdexcept>
#include <vector>

#include "hypergraph.hpp"

namespace zetagraph {

/// Loop-free undirected graph on vertices 0..n-1 with neighbour bitsets.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > 31) throw std::invalid_argument("vertex count out of range");
    }

    int n() const { return n_; }
    long long m() const {
        long long s = 0;
        for (Mask a : adj_) s += popcount(a);
        return s / 2;
    }

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("loops are not allowed");
        if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("vertex out of range");
        adj_[static_cast<size_t>(i)] |= Mask(1) << j;
        adj_[static_cast<size_t>(j)] |= Mask(1) << i;
    }
    bool adjacent(int i, int j) const { return (adj_[static_cast<size_t>(i)] >> j) & 1; }
    Mask neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    Mask full_mask() const { return n_ == 0 ? 0 : (Mask(1) << n_) - 1; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    SimpleGraph complement() const {
        SimpleGraph c(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!adjacent(i, j)) c.add_edge(i, j);
        return c;
    }

    SimpleGraph disjoint_union(const SimpleGraph& o) const {
        SimpleGraph r(n_ + o.n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (adjacent(i, j)) r.add_edge(i, j);
        for (int i = 0; i < o.n_; ++i)
            for (int j = i + 1; j < o.n_; ++j)
                if (o.adjacent(i, j)) r.add_edge(n_ + i, n_ + j);
        return r;
    }

    /// Disjoint union plus all edges between the two sides.
    SimpleGraph join(const SimpleGraph& o) const {
        SimpleGraph r = disjoint_union(o);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < o.n_; ++j) r.add_edge(i, n_ + j);
        return r;
    }

    /// Connected components of the subgraph induced on `within`.
    std::vector<Mask> components(Mask within) const {
        std::vector<Mask> comps;
        Mask left = within;
        while (left) {
            Mask comp = left & (~left + 1);  // lowest set bit as seed
            for (;;) {
                Mask grow = comp;
                for (int v = 0; v < n_; ++v)
                    if (comp & (Mask(1) << v)) grow |= adj_[static_cast<size_t>(v)] & within;
                if (grow == comp) break;
                comp = grow;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        return comps;
    }
    std::vector<Mask> components() const { return components(full_mask()); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (adjacent(i, j)) e.emplace_back(i, j);
        return e;
    }

private:
    int n_ = 0;
    std::vector<Mask> adj_;
};

inline SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}
inline SimpleGraph discrete_graph(int n) { return SimpleGraph(n); }
inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}
inline SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    SimpleGraph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}
/// Star with centre 0.
inline SimpleGraph star_graph(int n) {
    SimpleGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace zetagraph
