#pragma once

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "hypergraph.hpp"
#include "smith.hpp"
#include "zetarat.hpp"

namespace zetagraph {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct EvenCharForSymmetric : std::runtime_error {
    EvenCharForSymmetric()
        : std::runtime_error("symmetric (adj_plus) enumeration requires odd characteristic") {}
};
struct Mismatch : std::runtime_error {
    long long k;
    Rational expected, got;
    Mismatch(long long k_, Rational e, Rational g)
        : std::runtime_error("series/oracle mismatch at T^" + std::to_string(k_) + ": expected " +
                             rat_to_string(e) + ", got " + rat_to_string(g)),
          k(k_),
          expected(std::move(e)),
          got(std::move(g)) {}
};

constexpr long long kDefaultBudget = 100000000;  // 1e8 assignments

inline long long oracle_budget_from_env() {
    if (const char* s = std::getenv("ZETAGRAPH_BUDGET")) {
        long long v = std::atoll(s);
        if (v > 0) return v;
    }
    return kDefaultBudget;
}

/// Z/p^k with p prime and k <= 3 (enumeration budget).
struct FinRing {
    Int p;
    long long k;

    FinRing(Int p_, long long k_) : p(std::move(p_)), k(k_) {
        if (k < 0 || k > 3) throw std::invalid_argument("ring exponent k must be 0..3");
        if (p < 2) throw std::invalid_argument("p must be a prime");
        for (Int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("p must be a prime");
    }
    Int size() const { return int_pow(p, static_cast<unsigned long>(k)); }
};

/// A constrained matrix space over Z/p^k: incidence matrices of a
/// hypergraph, antisymmetric adjacency matrices of a simple graph, or
/// symmetric adjacency matrices (loops allowed, as a diagonal mask).
class ModuleSpec {
public:
    enum class Kind { incidence, adj_minus, adj_plus };

    static ModuleSpec incidence(Hypergraph h) {
        ModuleSpec s;
        s.kind_ = Kind::incidence;
        s.rows_ = h.n();
        s.cols_ = static_cast<int>(h.m());
        IncidenceMatrix inc = h.to_incidence();
        for (int j = 0; j < s.cols_; ++j)
            for (int i = 0; i < s.rows_; ++i)
                if (inc.entries[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    s.placements_.push_back({{{i, j, +1}}});
        s.h_ = std::move(h);
        return s;
    }

    static ModuleSpec adj_minus(SimpleGraph g) {
        ModuleSpec s;
        s.kind_ = Kind::adj_minus;
        s.rows_ = s.cols_ = g.n();
        for (auto [i, j] : g.edges()) s.placements_.push_back({{{i, j, +1}, {j, i, -1}}});
        s.g_ = std::move(g);
        return s;
    }

    static ModuleSpec adj_plus(SimpleGraph g, Mask loops = 0) {
        ModuleSpec s;
        s.kind_ = Kind::adj_plus;
        s.rows_ = s.cols_ = g.n();
        for (auto [i, j] : g.edges()) s.placements_.push_back({{{i, j, +1}, {j, i, +1}}});
        for (int v = 0; v < g.n(); ++v)
            if (loops & (Mask(1) << v)) s.placements_.push_back({{{v, v, +1}}});
        s.g_ = std::move(g);
        return s;
    }

    Kind kind() const { return kind_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t free_positions() const { return placements_.size(); }
    const Hypergraph& hypergraph() const { return h_; }
    const SimpleGraph& graph() const { return g_; }

    /// Matrix for one assignment of the free parameters.
    std::vector<std::vector<Int>> realize(const std::vector<Int>& values) const {
        std::vector<std::vector<Int>> mat(static_cast<size_t>(rows_),
                                          std::vector<Int>(static_cast<size_t>(cols_), 0));
        for (size_t e = 0; e < placements_.size(); ++e)
            for (const auto& pl : placements_[e])
                mat[static_cast<size_t>(pl.row)][static_cast<size_t>(pl.col)] +=
                    pl.sign * values[e];
        return mat;
    }

    struct Placement {
        int row, col, sign;
    };
    const std::vector<std::vector<Placement>>& placements() const { return placements_; }

private:
    Kind kind_ = Kind::incidence;
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<Placement>> placements_;  // one entry per free position
    Hypergraph h_;
    SimpleGraph g_;
};

/// Average kernel size over Z/p^k by literal enumeration of all assignments
/// of the free positions. Errors: BudgetExceeded, EvenCharForSymmetric.
inline Rational ask_bruteforce(const ModuleSpec& spec, const FinRing& ring,
                               long long budget = kDefaultBudget) {
    if (spec.kind() == ModuleSpec::Kind::adj_plus && ring.p == 2) throw EvenCharForSymmetric();
    if (ring.k == 0) return 1;  // zero ring
    const size_t free_count = spec.free_positions();
    Int ring_size = ring.size();
    Int total_assignments = int_pow(ring_size, static_cast<unsigned long>(free_count));
    if (total_assignments > budget)
        throw BudgetExceeded("p^(k*free) = " + total_assignments.str() + " exceeds budget " +
                             std::to_string(budget));

    std::vector<Int> values(free_count, 0);
    Int sum = 0;
    for (;;) {
        sum += kernel_size(spec.realize(values), ring.p, ring.k);
        // odometer increment
        size_t pos = 0;
        while (pos < free_count) {
            values[pos] += 1;
            if (values[pos] < ring_size) break;
            values[pos] = 0;
            ++pos;
        }
        if (pos == free_count) break;
    }
    return Rational(sum, total_assignments);
}

/// The same rational number as ask_bruteforce, computed by the swapped
/// enumeration over coordinate vectors x in (Z/p^k)^n: for each x, the
/// assignments killed by x form a subgroup whose size comes from the Smith
/// normal form of the linear constraint matrix. Used when the assignment
/// count is out of budget but p^{kn} is not.
inline Rational ask_vector_side(const ModuleSpec& spec, const FinRing& ring,
                                long long budget = kDefaultBudget) {
    if (spec.kind() == ModuleSpec::Kind::adj_plus && ring.p == 2) throw EvenCharForSymmetric();
    if (ring.k == 0) return 1;
    const int n = spec.rows();
    Int ring_size = ring.size();
    Int total_vectors = int_pow(ring_size, static_cast<unsigned long>(n));
    if (total_vectors > budget)
        throw BudgetExceeded("p^(k*n) = " + total_vectors.str() + " exceeds budget " +
                             std::to_string(budget));

    const size_t free_count = spec.free_positions();
    std::vector<Int> x(static_cast<size_t>(n), 0);
    Int sum = 0;
    for (;;) {
        // constraint matrix B: free_count rows (domain), cols() columns;
        // solution count of z B = 0 is kernel_size(B)
        std::vector<std::vector<Int>> b(free_count,
                                        std::vector<Int>(static_cast<size_t>(spec.cols()), 0));
        for (size_t e = 0; e < free_count; ++e)
            for (const auto& pl : spec.placements()[e])
                b[e][static_cast<size_t>(pl.col)] += pl.sign * x[static_cast<size_t>(pl.row)];
        sum += kernel_size(b, ring.p, ring.k);
        int pos = 0;
        while (pos < n) {
            x[static_cast<size_t>(pos)] += 1;
            if (x[static_cast<size_t>(pos)] < ring_size) break;
            x[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    Int total_assignments = int_pow(ring_size, static_cast<unsigned long>(free_count));
    return Rational(sum, total_assignments);
}

/// Compares series coefficients of w at X = p against the enumeration for
/// k = 0..kmax. Throws Mismatch on disagreement; true on success.
inline bool verify_series(const ZetaRat& w, const ModuleSpec& spec, const Int& p, long long kmax,
                          long long budget = kDefaultBudget) {
    TSeries s = w.series(kmax);
    Rational q(p);
    for (long long k = 0; k <= kmax; ++k) {
        Rational expected = s.coeffs[static_cast<size_t>(k)].eval(q);
        Rational got;
        if (k == 0) {
            got = 1;
        } else {
            FinRing ring(p, k);
            Int assignments =
                int_pow(ring.size(), static_cast<unsigned long>(spec.free_positions()));
            if (assignments <= budget) {
                got = ask_bruteforce(spec, ring, budget);
            } else {
                got = ask_vector_side(spec, ring, budget);
            }
        }
        if (expected != got) throw Mismatch(k, expected, got);
    }
    return true;
}

/// Conjugacy classes of the graphical group over F_p, by direct orbit
/// partitioning under conjugation (no kernel computations anywhere).
/// Elements are pairs (x, c) in F_p^V x F_p^E; conjugation by a generator
/// v adds the commutator vector e_v <> x to the central part.
inline long long conjugacy_count(const SimpleGraph& g, const Int& p_in,
                                 long long budget = 1 << 20) {
    FinRing check(p_in, 1);  // validates primality
    const long long p = static_cast<long long>(p_in);
    const int n = g.n();
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    Int order_exact = int_pow(p_in, static_cast<unsigned long>(n + m));
    if (order_exact > budget) throw BudgetExceeded("group order p^(n+m) exceeds budget");
    const long long order = static_cast<long long>(order_exact);

    auto decode = [&](long long id, std::vector<long long>& x, std::vector<long long>& c) {
        for (int i = 0; i < n; ++i) {
            x[static_cast<size_t>(i)] = id % p;
            id /= p;
        }
        for (int j = 0; j < m; ++j) {
            c[static_cast<size_t>(j)] = id % p;
            id /= p;
        }
    };
    auto encode = [&](const std::vector<long long>& x, const std::vector<long long>& c) {
        long long id = 0;
        for (int j = m - 1; j >= 0; --j) id = id * p + c[static_cast<size_t>(j)];
        for (int i = n - 1; i >= 0; --i) id = id * p + x[static_cast<size_t>(i)];
        return id;
    };

    // commutator vector e_v <> x: entry at edge {i<j} is (e_v)_i x_j - (e_v)_j x_i
    auto conj_shift = [&](int v, const std::vector<long long>& x, std::vector<long long>& out) {
        for (int e = 0; e < m; ++e) {
            auto [i, j] = edges[static_cast<size_t>(e)];
            long long val = 0;
            if (v == i) val = x[static_cast<size_t>(j)];
            else if (v == j) val = -x[static_cast<size_t>(i)];
            out[static_cast<size_t>(e)] = ((val % p) + p) % p;
        }
    };

    std::vector<char> seen(static_cast<size_t>(order), 0);
    std::vector<long long> stack;
    std::vector<long long> x(static_cast<size_t>(n)), c(static_cast<size_t>(m)),
        shift(static_cast<size_t>(m)), c2(static_cast<size_t>(m));
    long long classes = 0;
    for (long long start = 0; start < order; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++classes;
        stack.assign(1, start);
        seen[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            long long cur = stack.back();
            stack.pop_back();
            decode(cur, x, c);
            for (int v = 0; v < n; ++v) {
                conj_shift(v, x, shift);
                bool moved = false;
                for (int e = 0; e < m; ++e) {
                    c2[static_cast<size_t>(e)] = (c[static_cast<size_t>(e)] + shift[static_cast<size_t>(e)]) % p;
                    if (c2[static_cast<size_t>(e)] != c[static_cast<size_t>(e)]) moved = true;
                }
                if (!moved) continue;
                long long next = encode(x, c2);
                if (!seen[static_cast<size_t>(next)]) {
                    seen[static_cast<size_t>(next)] = 1;
                    stack.push_back(next);
                }
            }
        }
    }
    return classes;
}

}  // namespace zetagraph
