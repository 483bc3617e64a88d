#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace zetagraph {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

struct MalformedMatrix : std::invalid_argument {
    explicit MalformedMatrix(const std::string& what) : std::invalid_argument(what) {}
};

/// 0/1 incidence grid, rows = vertices, cols = hyperedges.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> entries;  // rows x cols
};

/// Hypergraph as a multiplicity map: vertices 0..n-1, mu[support bitmask] =
/// number of hyperedges with that support (absent = 0). Hyperedges are
/// unlabeled, so equality of the map is equality of hypergraphs up to
/// hyperedge relabelling; vertex labels are significant.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(int n) : n_(n) { check(); }
    Hypergraph(int n, std::map<Mask, long long> mu) : n_(n), mu_(std::move(mu)) {
        for (auto it = mu_.begin(); it != mu_.end();) {
            if (it->second == 0) {
                it = mu_.erase(it);
                continue;
            }
            if (it->second < 0) throw std::invalid_argument("negative hyperedge multiplicity");
            ++it;
        }
        check();
    }

    int n() const { return n_; }
    long long m() const {
        long long s = 0;
        for (const auto& [mask, c] : mu_) s += c;
        return s;
    }
    /// number of non-empty hyperedges
    long long m_nonempty() const {
        long long s = 0;
        for (const auto& [mask, c] : mu_)
            if (mask != 0) s += c;
        return s;
    }
    const std::map<Mask, long long>& mu() const { return mu_; }
    long long mu_of(Mask mask) const {
        auto it = mu_.find(mask);
        return it == mu_.end() ? 0 : it->second;
    }
    Mask full_mask() const { return n_ == 0 ? 0 : (Mask(1) << n_) - 1; }

    void add_edge(Mask support, long long count = 1) {
        if (count == 0) return;
        if (count < 0) throw std::invalid_argument("negative hyperedge multiplicity");
        if (n_ < 32 && (support & ~full_mask())) throw std::invalid_argument("support out of range");
        mu_[support] += count;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.mu_ == b.mu_;
    }
    friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

    /// Incidence matrix in canonical column order (supports ascending).
    IncidenceMatrix to_incidence() const {
        IncidenceMatrix mat;
        mat.rows = n_;
        mat.cols = static_cast<int>(m());
        mat.entries.assign(n_, std::vector<int>(mat.cols, 0));
        int j = 0;
        for (const auto& [mask, count] : mu_) {
            for (long long c = 0; c < count; ++c, ++j)
                for (int v = 0; v < n_; ++v)
                    if (mask & (Mask(1) << v)) mat.entries[v][j] = 1;
        }
        return mat;
    }

    static Hypergraph from_incidence(const IncidenceMatrix& mat) {
        if (static_cast<int>(mat.entries.size()) != mat.rows)
            throw MalformedMatrix("row count mismatch");
        Hypergraph h(mat.rows);
        for (const auto& row : mat.entries)
            if (static_cast<int>(row.size()) != mat.cols) throw MalformedMatrix("ragged matrix");
        for (int j = 0; j < mat.cols; ++j) {
            Mask support = 0;
            for (int i = 0; i < mat.rows; ++i) {
                int e = mat.entries[i][j];
                if (e != 0 && e != 1) throw MalformedMatrix("non-binary entry");
                if (e) support |= Mask(1) << i;
            }
            h.add_edge(support);
        }
        return h;
    }

    /// Block-diagonal incidence; supports of `other` shifted past this one's
    /// vertices.
    Hypergraph disjoint_union(const Hypergraph& other) const {
        Hypergraph r(n_ + other.n_);
        for (const auto& [mask, c] : mu_) r.add_edge(mask, c);
        for (const auto& [mask, c] : other.mu_) r.add_edge(mask << n_, c);
        return r;
    }

    /// Every hyperedge of each side gains all vertices of the other side.
    Hypergraph complete_union(const Hypergraph& other) const {
        Hypergraph r(n_ + other.n_);
        Mask mine = full_mask();
        Mask theirs = other.full_mask() << n_;
        for (const auto& [mask, c] : mu_) r.add_edge(mask | theirs, c);
        for (const auto& [mask, c] : other.mu_) r.add_edge((mask << n_) | mine, c);
        return r;
    }

    /// Complements every support within [n]. An involution.
    Hypergraph reflection() const {
        Hypergraph r(n_);
        Mask full = full_mask();
        for (const auto& [mask, c] : mu_) r.add_edge(full & ~mask, c);
        return r;
    }

    /// H_1: a new vertex incident to every hyperedge.
    Hypergraph insert_one_row() const {
        Hypergraph r(n_ + 1);
        Mask bit = Mask(1) << n_;
        for (const auto& [mask, c] : mu_) r.add_edge(mask | bit, c);
        return r;
    }
    /// H_0: a new isolated vertex.
    Hypergraph insert_zero_row() const {
        Hypergraph r(n_ + 1);
        for (const auto& [mask, c] : mu_) r.add_edge(mask, c);
        return r;
    }
    /// H^1: one extra hyperedge with full support.
    Hypergraph insert_one_col() const {
        Hypergraph r = *this;
        r.add_edge(full_mask());
        return r;
    }
    /// H^0: one extra hyperedge with empty support.
    Hypergraph insert_zero_col() const {
        Hypergraph r = *this;
        r.add_edge(0);
        return r;
    }

private:
    int n_ = 0;
    std::map<Mask, long long> mu_;

    void check() const {
        if (n_ < 0 || n_ > 31) throw std::invalid_argument("vertex count out of range");
        for (const auto& [mask, c] : mu_)
            if (mask & ~full_mask()) throw std::invalid_argument("support out of range");
    }
};

/// BH_{n,m}: m hyperedges supported on all of [n].
inline Hypergraph block_hypergraph(int n, long long m) {
    Hypergraph h(n);
    h.add_edge(h.full_mask(), m);
    return h;
}

/// RE_{n,m}: the reflection of BH_{n,m} (m empty-support hyperedges).
inline Hypergraph reflected_block_hypergraph(int n, long long m) {
    Hypergraph h(n);
    h.add_edge(0, m);
    return h;
}

/// Staircase hypergraph of (m_0, ..., m_n): m_i hyperedges supported on
/// {0, ..., i-1}.
inline Hypergraph staircase_hypergraph(const std::vector<long long>& ms) {
    if (ms.empty()) throw std::invalid_argument("staircase needs m_0..m_n");
    int n = static_cast<int>(ms.size()) - 1;
    Hypergraph h(n);
    for (int i = 0; i <= n; ++i) h.add_edge(i == 0 ? 0 : (Mask(1) << i) - 1, ms[static_cast<size_t>(i)]);
    return h;
}

inline Hypergraph discrete_hypergraph(int n) { return Hypergraph(n); }

}  // namespace zetagraph
