#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "flags.hpp"
#include "hypergraph.hpp"
#include "zetarat.hpp"

namespace zetagraph {

struct PoleAtPoint : std::domain_error {
    PoleAtPoint() : std::domain_error("denominator factor vanishes at the evaluation point") {}
};

/// Pole bookkeeping for W_H: candidate real parts, the exponents surviving
/// reduction, and the abscissa of convergence.
struct PoleData {
    std::set<long long> candidate_set;
    std::set<long long> actual_pole_exponents;
    long long abscissa = 1;
};

namespace detail {

/// e(J) = |J| - sum_{I cap J != empty} mu_I for every J subseteq V.
inline std::vector<long long> subset_exponents(const Hypergraph& h) {
    Mask full = h.full_mask();
    std::vector<long long> e(static_cast<size_t>(full) + 1);
    for (Mask J = 0;; ++J) {
        long long v = popcount(J);
        for (const auto& [I, c] : h.mu())
            if (I & J) v -= c;
        e[static_cast<size_t>(J)] = v;
        if (J == full) break;
    }
    return e;
}

inline std::vector<LaurentPoly> one_minus_xinv_powers(int n) {
    std::vector<LaurentPoly> pow(static_cast<size_t>(n) + 1);
    pow[0] = LaurentPoly(Rational(1));
    LaurentPoly base = LaurentPoly(Rational(1)) - LaurentPoly::monomial(-1);
    for (int r = 1; r <= n; ++r) pow[static_cast<size_t>(r)] = pow[static_cast<size_t>(r - 1)] * base;
    return pow;
}

inline BiPoly laurent_to_bipoly(const LaurentPoly& p) {
    BiPoly b;
    for (const auto& [e, c] : p.terms()) b.add_term(e, 0, c);
    return b;
}

// Integer-coefficient scratch polynomials for the w_master assembly. The
// whole weak-order numerator lives in Z[X^{+-1},T]; skipping rational
// normalisation on the hot path is a large constant-factor win.
using IntTerms = std::map<std::pair<long long, long long>, Int>;  // (t,x) -> coeff

inline void int_add_term(IntTerms& p, long long t, long long x, const Int& c) {
    auto [it, inserted] = p.try_emplace({t, x}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

/// p *= (1 - X^a T^b)
inline void int_mul_one_minus(IntTerms& p, long long a, long long b) {
    IntTerms shifted;
    for (const auto& [k, c] : p) shifted.emplace(std::pair{k.first + b, k.second + a}, c);
    for (const auto& [k, c] : shifted) int_add_term(p, k.first, k.second, -c);
}

/// powers of (1 - X^{-1}) as integer Laurent coefficients
inline std::vector<std::map<long long, Int>> int_unit_powers(int n) {
    std::vector<std::map<long long, Int>> pow(static_cast<size_t>(n) + 1);
    pow[0][0] = 1;
    for (int r = 1; r <= n; ++r) {
        auto& prev = pow[static_cast<size_t>(r - 1)];
        auto& cur = pow[static_cast<size_t>(r)];
        for (const auto& [e, c] : prev) {
            cur[e] += c;
            cur[e - 1] -= c;
        }
        std::erase_if(cur, [](const auto& kv) { return kv.second == 0; });
    }
    return pow;
}

}  // namespace detail

/// W_{H(mu,D)}(X,T) by the weak-order sum
///   (1-X^{n-m}T)/(1-X^{d+n-m}T) *
///   sum_{y in WO-hat(V)} (1-X^{-1})^{rk y} prod_{J in y} gp(X^{e(J)} T).
/// Every flag is enumerated exactly once; terms are tallied by their
/// (rank, exponent multiset) signature and assembled in a single exact pass
/// over a shared denominator pool. For d = 0 this is W_H(X,T).
inline ZetaRat w_master(const Hypergraph& h, long long d = 0) {
    const int n = h.n();
    const long long m = h.m();
    const auto expo = detail::subset_exponents(h);

    // Pool multiplicity for exponent e: the number of distinct subset sizes
    // attaining e. Chain members have strictly increasing sizes, so no chain
    // repeats e more often than that.
    std::map<long long, std::set<int>> sizes_by_exp;
    for (size_t J = 0; J < expo.size(); ++J)
        sizes_by_exp[expo[J]].insert(popcount(static_cast<Mask>(J)));
    std::map<long long, long long> pool;
    for (const auto& [e, sizes] : sizes_by_exp) pool[e] = static_cast<long long>(sizes.size());

    // Tally flags: sorted exponent multiset -> per-rank counts.
    std::map<std::vector<long long>, std::vector<long long>> tally;
    std::vector<long long> chain_exps;
    visit_flags_descending(n, [&](const std::vector<Mask>& chain) {
        chain_exps.clear();
        for (Mask J : chain) chain_exps.push_back(expo[J]);
        std::sort(chain_exps.begin(), chain_exps.end());
        auto& counts = tally[chain_exps];
        if (counts.empty()) counts.assign(static_cast<size_t>(n) + 1, 0);
        int rank = chain.empty() ? 0 : popcount(chain.front());
        ++counts[static_cast<size_t>(rank)];
    });

    const auto unit_pow = detail::int_unit_powers(n);

    detail::IntTerms numerator;
    for (const auto& [exps, counts] : tally) {
        std::map<long long, Int> weight;
        for (int r = 0; r <= n; ++r) {
            long long c = counts[static_cast<size_t>(r)];
            if (c == 0) continue;
            for (const auto& [e, u] : unit_pow[static_cast<size_t>(r)]) weight[e] += u * c;
        }
        std::erase_if(weight, [](const auto& kv) { return kv.second == 0; });
        if (weight.empty()) continue;
        long long xsum = 0;
        for (long long e : exps) xsum += e;
        detail::IntTerms term;
        term[{static_cast<long long>(exps.size()), xsum}] = 1;
        auto remaining = pool;
        for (long long e : exps) --remaining[e];
        for (const auto& [e, mult] : remaining)
            for (long long i = 0; i < mult; ++i) detail::int_mul_one_minus(term, e, 1);
        for (const auto& [k, c] : term)
            for (const auto& [we, wc] : weight)
                detail::int_add_term(numerator, k.first, k.second + we, c * wc);
    }

    BiPoly num_poly;
    for (const auto& [k, c] : numerator) num_poly.add_term(k.second, k.first, Rational(c));
    std::vector<GeoFactor> den;
    for (const auto& [e, mult] : pool)
        if (mult > 0) den.push_back(GeoFactor{e, 1, mult});
    ZetaRat w(std::move(num_poly), std::move(den));
    if (d != 0) {
        w = w * BiPoly::one_minus(n - m, 1);
        w = w.div_geo(d + n - m, 1);
    }
    return w.reduced();
}

/// Memoized subset recursion:
///   R(S) = 1 + sum_{J proper subset S} (1-X^{-1})^{|S|-|J|} gp(X^{e(V\J)}T) R(J)
///   W    = (1-X^{n-m}T) / ((1-X^{d+n-m}T)(1-T)) * R(V).
/// Equals w_master on every input.
inline ZetaRat w_recursive(const Hypergraph& h, long long d = 0) {
    const int n = h.n();
    const long long m = h.m();
    const auto expo = detail::subset_exponents(h);
    const Mask full = h.full_mask();
    const auto unit_pow = detail::one_minus_xinv_powers(n);

    std::vector<ZetaRat> memo(static_cast<size_t>(full) + 1);
    std::vector<Mask> order;
    order.reserve(memo.size());
    for (Mask S = 0;; ++S) {
        order.push_back(S);
        if (S == full) break;
    }
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });

    for (Mask S : order) {
        ZetaRat r = ZetaRat::one();
        if (S != 0) {
            for (Mask J = (S - 1) & S;; J = (J - 1) & S) {
                ZetaRat term = ZetaRat::gp(expo[full & ~J]) * memo[J];
                term = term * detail::laurent_to_bipoly(
                                  unit_pow[static_cast<size_t>(popcount(S) - popcount(J))]);
                r = r + term;
                if (J == 0) break;
            }
        }
        memo[S] = std::move(r);
    }
    ZetaRat w = memo[full] * BiPoly::one_minus(n - m, 1);
    return w.div_geo(d + n - m, 1).div_geo(0, 1).reduced();
}

/// Staircase closed form:
///   W = 1/(1-T) prod_{j=0}^{n-1}
///       (1 - X^{-1+n-j-sum_{i>j} m_i} T) / (1 - X^{n-j-sum_{i>j} m_i} T).
inline ZetaRat w_staircase(const std::vector<long long>& ms) {
    if (ms.empty()) throw std::invalid_argument("staircase needs m_0..m_n");
    const int n = static_cast<int>(ms.size()) - 1;
    ZetaRat w = ZetaRat::one().div_geo(0, 1);
    for (int j = 0; j < n; ++j) {
        long long tail = 0;
        for (int i = j + 1; i <= n; ++i) tail += ms[static_cast<size_t>(i)];
        long long a = n - j - tail;
        w = w * BiPoly::one_minus(a - 1, 1);
        w = w.div_geo(a, 1);
    }
    return w.reduced();
}

/// Disjoint unions of block hypergraphs, as a sum over WO-hat([r]):
///   W = sum_y (prod_{i in sup(y)} (1-X^{-n_i})) prod_{J in y}
///         gp(X^{sum_{j in J}(n_j - m_j)} T).
inline ZetaRat w_block_disjoint(const std::vector<long long>& nvec,
                                const std::vector<long long>& mvec) {
    if (nvec.size() != mvec.size()) throw std::invalid_argument("nvec/mvec size mismatch");
    for (long long ni : nvec)
        if (ni < 1) throw std::invalid_argument("block sizes must be >= 1");
    const int r = static_cast<int>(nvec.size());

    std::vector<long long> gap(static_cast<size_t>(1) << r, 0);
    for (Mask J = 1; J < gap.size(); ++J) {
        long long s = 0;
        for (int j = 0; j < r; ++j)
            if (J & (Mask(1) << j)) s += nvec[static_cast<size_t>(j)] - mvec[static_cast<size_t>(j)];
        gap[J] = s;
    }

    ZetaRat total = ZetaRat::zero();
    visit_flags_descending(r, [&](const std::vector<Mask>& chain) {
        ZetaRat term = ZetaRat::one();
        for (Mask J : chain) term = term * ZetaRat::gp(gap[J]);
        if (!chain.empty()) {
            Mask sup = chain.front();
            BiPoly weight(Rational(1));
            for (int i = 0; i < r; ++i)
                if (sup & (Mask(1) << i))
                    weight *= BiPoly(Rational(1)) - BiPoly::monomial(-nvec[static_cast<size_t>(i)], 0);
            term = term * weight;
        }
        total = total + term;
    });
    return total.reduced();
}

/// Complete unions of reflected blocks (codisjoint supports), closed form:
///   W = 1/((1-T)(1-X^{n-m}T)) *
///       (1 - X^{-m} T (1 - sum_i (X^{n_i}-1)(X^{m_i}-1)/(1-X^{n_i+m_i-m}T))).
inline ZetaRat w_codisjoint(const std::vector<long long>& nvec,
                            const std::vector<long long>& mvec) {
    if (nvec.size() != mvec.size()) throw std::invalid_argument("nvec/mvec size mismatch");
    for (long long ni : nvec)
        if (ni < 1) throw std::invalid_argument("block sizes must be >= 1");
    long long n = 0, m = 0;
    for (size_t i = 0; i < nvec.size(); ++i) {
        n += nvec[i];
        m += mvec[i];
    }
    ZetaRat inner = ZetaRat::one();
    for (size_t i = 0; i < nvec.size(); ++i) {
        BiPoly num = (BiPoly::monomial(nvec[i], 0) - BiPoly(Rational(1))) *
                     (BiPoly::monomial(mvec[i], 0) - BiPoly(Rational(1)));
        ZetaRat term(std::move(num), {GeoFactor{nvec[i] + mvec[i] - m, 1, 1}});
        inner = inner - term;
    }
    ZetaRat w = ZetaRat::one() - inner * BiPoly::monomial(-m, 1);
    return w.div_geo(0, 1).div_geo(n - m, 1).reduced();
}

/// Complete union of two hypergraphs at the level of rational functions:
///   W = (X^{-m}T - 1
///        + W1(X, X^{-m2}T)(1-X^{-m2}T)(1-X^{n1-m}T)
///        + W2(X, X^{-m1}T)(1-X^{-m1}T)(1-X^{n2-m}T))
///       / ((1-T)(1-X^{n-m}T)),     n = n1+n2, m = m1+m2.
inline ZetaRat w_complete_union(const ZetaRat& w1, long long n1, long long m1,
                                const ZetaRat& w2, long long n2, long long m2) {
    const long long n = n1 + n2, m = m1 + m2;
    ZetaRat acc = ZetaRat::from_poly(BiPoly::monomial(-m, 1) - BiPoly(Rational(1)));
    ZetaRat t1 = w1.subst_t_scale(-m2) * BiPoly::one_minus(-m2, 1);
    t1 = t1 * BiPoly::one_minus(n1 - m, 1);
    ZetaRat t2 = w2.subst_t_scale(-m1) * BiPoly::one_minus(-m1, 1);
    t2 = t2 * BiPoly::one_minus(n2 - m, 1);
    acc = acc + t1 + t2;
    return acc.div_geo(0, 1).div_geo(n - m, 1).reduced();
}

/// Shortcut for complete unions whose first factor is a block hypergraph:
///   W = W2(X, X^{-m1}T) (1-X^{-m1}T)(1-X^{n2-m}T) / ((1-T)(1-X^{n-m}T)).
inline ZetaRat w_complete_union_block(long long n1, long long m1, const ZetaRat& w2,
                                      long long n2, long long m2) {
    const long long n = n1 + n2, m = m1 + m2;
    ZetaRat w = w2.subst_t_scale(-m1) * BiPoly::one_minus(-m1, 1);
    w = w * BiPoly::one_minus(n2 - m, 1);
    return w.div_geo(0, 1).div_geo(n - m, 1).reduced();
}

enum class RowColOp { one_row, zero_row, one_col, zero_col };

/// Effect of inserting an all-ones/all-zeros row or column into an (n,m)
/// hypergraph's incidence matrix, on the level of W.
inline ZetaRat w_row_col_op(const ZetaRat& w, long long n, long long m, RowColOp op) {
    switch (op) {
        case RowColOp::one_row: {
            ZetaRat r = w * BiPoly::one_minus(n - m, 1);
            return r.div_geo(1 + n - m, 1).reduced();
        }
        case RowColOp::zero_row:
            return w.subst_t_scale(1);
        case RowColOp::one_col: {
            ZetaRat r = w.subst_t_scale(-1) * BiPoly::one_minus(-1, 1);
            return r.div_geo(0, 1).reduced();
        }
        case RowColOp::zero_col:
            return w;
    }
    throw std::logic_error("unreachable");
}

/// Candidate and actual pole exponents of W_H plus the abscissa, read off
/// the reduced denominator. Violations of the candidate containment or the
/// n+1 bound are reported, not ignored.
inline PoleData pole_data(const Hypergraph& h) {
    PoleData pd;
    const auto expo = detail::subset_exponents(h);
    for (long long e : expo) pd.candidate_set.insert(e);
    ZetaRat w = w_master(h);
    long long max_a = 0;
    bool has_pole = false;
    for (const auto& f : w.den()) {
        if (f.b != 1) throw std::logic_error("pole_data: unexpected T-degree in denominator");
        pd.actual_pole_exponents.insert(f.a);
        max_a = has_pole ? std::max(max_a, f.a) : f.a;
        has_pole = true;
    }
    pd.abscissa = has_pole ? std::max<long long>(1, max_a + 1) : 1;
    const long long m_prime = h.m_nonempty();
    for (long long a : pd.actual_pole_exponents) {
        if (!pd.candidate_set.count(a))
            throw std::logic_error("pole_data: pole exponent outside candidate set");
        if (m_prime > 0 && (a < 1 - m_prime || a > h.n()))
            throw std::logic_error("pole_data: pole exponent outside [1-m', n]");
        if (m_prime == 0 && a != h.n())
            throw std::logic_error("pole_data: hyperedge-free case must have the single pole n");
    }
    if (pd.abscissa > h.n() + 1) throw std::logic_error("pole_data: abscissa exceeds n+1");
    return pd;
}

/// W_H by whichever route is cheaper: the weak-order sum up to eight
/// vertices, the subset recursion beyond (4 f_n flags versus 3^n subset
/// pairs). The two routes agree on every input.
inline ZetaRat w_hypergraph(const Hypergraph& h, long long d = 0) {
    return h.n() >= 9 ? w_recursive(h, d) : w_master(h, d);
}

/// Exact evaluation of the block-hypergraph bivariate form
///   (1 - X^{-m} T1^m T2) / ((1 - T2)(1 - X^{n-m} T1^m T2))
/// at X = q, T1 = t1, T2 = t2.
inline Rational w_block_bivariate_eval(long long n, long long m, const Rational& q,
                                       const Rational& t1, const Rational& t2) {
    Rational t1m = rat_pow(t1, m);
    Rational d1 = 1 - t2;
    Rational d2 = 1 - rat_pow(q, n - m) * t1m * t2;
    if (d1 == 0 || d2 == 0) throw PoleAtPoint();
    Rational num = 1 - rat_pow(q, -m) * t1m * t2;
    return num / (d1 * d2);
}

}  // namespace zetagraph
