#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cotree.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "zetacore.hpp"

namespace zetagraph {

struct NotKite : std::runtime_error {
    NotKite() : std::runtime_error("not a kite graph") {}
};

/// Modelling hypergraph of a cograph: same vertex set, n - c hyperedges
/// where c is the number of connected components.
struct Model {
    Hypergraph hypergraph;
    int components = 1;
};

/// Composition (k_1, ..., k_c) of a positive integer, encoding a kite graph.
struct Composition {
    std::vector<long long> parts;

    long long total() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }
    long long part(size_t i) const {  // 1-indexed, 0 past the end
        return (i >= 1 && i <= parts.size()) ? parts[i - 1] : 0;
    }
    /// k(t) = k_1 + ... + k_t
    long long prefix(size_t t) const {
        long long s = 0;
        for (size_t i = 1; i <= t; ++i) s += part(i);
        return s;
    }
    /// k[t] = sum_{i >= t} (-1)^{i+1} k_i
    long long alt_tail(size_t t) const {
        long long s = 0;
        for (size_t i = t; i <= parts.size(); ++i) s += (i % 2 == 1 ? 1 : -1) * part(i);
        return s;
    }
    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts == b.parts;
    }
};

namespace detail {

struct PartialModel {
    std::vector<Mask> edges;  // hyperedge supports over the original vertex set
    Mask verts = 0;
    int components = 0;
};

/// Join step of the model construction: lift both sides' hyperedges by the
/// opposite vertex set, then c1-1 copies of V2, c2-1 copies of V1, and one
/// full support.
inline PartialModel model_join(const PartialModel& a, const PartialModel& b) {
    PartialModel r;
    r.verts = a.verts | b.verts;
    r.components = 1;
    for (Mask e : a.edges) r.edges.push_back(e | b.verts);
    for (Mask e : b.edges) r.edges.push_back(e | a.verts);
    for (int i = 1; i < a.components; ++i) r.edges.push_back(b.verts);
    for (int i = 1; i < b.components; ++i) r.edges.push_back(a.verts);
    r.edges.push_back(a.verts | b.verts);
    return r;
}

inline PartialModel model_of(const Cotree& t) {
    if (t.is_leaf()) {
        PartialModel m;
        m.verts = Mask(1) << t.vertex;
        m.components = 1;
        return m;
    }
    if (t.op == Cotree::Op::disjoint) {
        PartialModel m;
        for (const auto& c : t.children) {
            PartialModel cm = model_of(c);
            m.verts |= cm.verts;
            m.components += cm.components;
            m.edges.insert(m.edges.end(), cm.edges.begin(), cm.edges.end());
        }
        return m;
    }
    // join node, folded left to right as binary joins
    PartialModel m = model_of(t.children.front());
    for (size_t i = 1; i < t.children.size(); ++i) m = model_join(m, model_of(t.children[i]));
    return m;
}

}  // namespace detail

/// The modelling hypergraph of a cograph (throws NotCograph otherwise).
inline Model model(const SimpleGraph& g) {
    Cotree t = cotree(g);
    detail::PartialModel pm = detail::model_of(t);
    Hypergraph h(g.n());
    for (Mask e : pm.edges) h.add_edge(e);
    Model result{std::move(h), pm.components};
    // structural checks from the construction
    if (result.hypergraph.m() != g.n() - pm.components)
        throw std::logic_error("model: hyperedge count != n - c");
    long long total_incidence = 0;
    for (const auto& [mask, c] : result.hypergraph.mu()) total_incidence += popcount(mask) * c;
    if (total_incidence != 2 * g.m()) throw std::logic_error("model: odd total incidence");
    return result;
}

/// W^-_Gamma(X,T) of a cograph via its modelling hypergraph (the weak-order
/// sum up to eight vertices, the equivalent subset recursion beyond).
inline ZetaRat w_minus(const SimpleGraph& g) { return w_hypergraph(model(g).hypergraph); }

/// The binary join formula on rational functions (n_i = vertex counts):
///   W = (X^{1-n1-n2}T - 1
///        + W1(X,X^{-n2}T)(1-X^{-n2}T)(1-X^{1-n2}T)
///        + W2(X,X^{-n1}T)(1-X^{-n1}T)(1-X^{1-n1}T)) / ((1-T)(1-XT)).
/// Proved for cographs; exposed for arbitrary inputs.
inline ZetaRat w_join_formula(const ZetaRat& w1, long long n1, const ZetaRat& w2, long long n2) {
    ZetaRat acc = ZetaRat::from_poly(BiPoly::monomial(1 - n1 - n2, 1) - BiPoly(Rational(1)));
    ZetaRat t1 = w1.subst_t_scale(-n2) * BiPoly::one_minus(-n2, 1);
    t1 = t1 * BiPoly::one_minus(1 - n2, 1);
    ZetaRat t2 = w2.subst_t_scale(-n1) * BiPoly::one_minus(-n1, 1);
    t2 = t2 * BiPoly::one_minus(1 - n1, 1);
    acc = acc + t1 + t2;
    return acc.div_geo(0, 1).div_geo(1, 1).reduced();
}

namespace detail {

inline ZetaRat w_join_route_of(const Cotree& t) {
    if (t.is_leaf()) return ZetaRat::geo_inverse(1);
    if (t.op == Cotree::Op::disjoint) {
        ZetaRat w = w_join_route_of(t.children.front());
        for (size_t i = 1; i < t.children.size(); ++i)
            w = hadamard(w, w_join_route_of(t.children[i]));
        return w;
    }
    ZetaRat w = w_join_route_of(t.children.front());
    long long nleft = t.children.front().leaf_count();
    for (size_t i = 1; i < t.children.size(); ++i) {
        long long nright = t.children[i].leaf_count();
        w = w_join_formula(w, nleft, w_join_route_of(t.children[i]), nright);
        nleft += nright;
    }
    return w;
}

}  // namespace detail

/// Independent route to W^-: leaves are 1/(1-XT), disjoint unions are
/// Hadamard products, joins use the binary join formula.
inline ZetaRat w_minus_join_route(const SimpleGraph& g) {
    return detail::w_join_route_of(cotree(g));
}

/// Class counting transform: zeta^cc = W^-(X, X^m T).
inline ZetaRat cc_zeta(const SimpleGraph& g) { return w_minus(g).subst_t_scale(g.m()); }

/// f_{Gamma,k}(X): coefficient of T^k of the class counting zeta function.
/// Always a polynomial in X; a negative exponent is reported, not dropped.
inline LaurentPoly class_number_poly(const SimpleGraph& g, long long k) {
    TSeries s = cc_zeta(g).series(k);
    const LaurentPoly& c = s.coeffs[static_cast<size_t>(k)];
    if (c.has_negative_exponents())
        throw std::logic_error("class_number_poly: negative X-exponent");
    return c;
}

/// True iff f_{Gamma,k}(X) has non-negative coefficients in the basis
/// (X-1)^j for all k = 1..K.
inline bool nonneg_check(const SimpleGraph& g, long long K) {
    ZetaRat cc = cc_zeta(g);
    TSeries s = cc.series(K);
    for (long long k = 1; k <= K; ++k) {
        const LaurentPoly& p = s.coeffs[static_cast<size_t>(k)];
        if (p.has_negative_exponents())
            throw std::logic_error("nonneg_check: not a polynomial");
        // d_j = sum_e c_e * C(e, j)
        long long maxe = p.max_exp();
        for (long long j = 0; j <= maxe; ++j) {
            Rational d = 0;
            for (const auto& [e, c] : p.terms()) {
                // C(e, j)
                Int binom = 1;
                for (long long i = 0; i < j; ++i) binom = binom * (e - i) / (i + 1);
                if (j <= e) d += c * Rational(binom);
            }
            if (d < 0) return false;
        }
    }
    return true;
}

/// KiteGraph(k_1, ..., k_c): alternately disjoint-add k_i isolated vertices
/// (odd i) and join k_i mutually adjacent vertices (even i), vertex labels
/// assigned block by block.
inline SimpleGraph kite_build(const Composition& k) {
    if (k.parts.empty() || k.total() < 1) throw std::invalid_argument("empty composition");
    for (long long p : k.parts)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    SimpleGraph g(0);
    for (size_t i = 1; i <= k.parts.size(); ++i) {
        long long ki = k.part(i);
        if (i % 2 == 1) {
            g = g.disjoint_union(discrete_graph(static_cast<int>(ki)));
        } else {
            g = g.join(complete_graph(static_cast<int>(ki)));
        }
    }
    return g;
}

namespace detail {

inline void kite_parse_rec(const Cotree& t, std::vector<long long>& rev_parts) {
    if (t.is_leaf()) {
        rev_parts.push_back(1);
        return;
    }
    int leaves = 0;
    const Cotree* inner = nullptr;
    for (const auto& c : t.children) {
        if (c.is_leaf()) {
            ++leaves;
        } else {
            if (inner) throw NotKite();
            inner = &c;
        }
    }
    if (t.op == Cotree::Op::disjoint) {
        if (!inner) {  // discrete graph on >= 2 vertices
            rev_parts.push_back(leaves);
            return;
        }
        if (leaves == 0 || inner->op != Cotree::Op::join) throw NotKite();
        rev_parts.push_back(leaves);
        kite_parse_rec(*inner, rev_parts);
        return;
    }
    // join node
    if (!inner) {  // complete graph K_j = KiteGraph(1, j-1)
        if (leaves < 2) throw NotKite();
        rev_parts.push_back(leaves - 1);
        rev_parts.push_back(1);
        return;
    }
    if (leaves == 0 || inner->op != Cotree::Op::disjoint) throw NotKite();
    rev_parts.push_back(leaves);
    kite_parse_rec(*inner, rev_parts);
}

}  // namespace detail

/// The unique composition with kite_build(k) isomorphic to g, or NotKite.
inline Composition kite_parse(const SimpleGraph& g) {
    Cotree t;
    try {
        t = cotree(g);
    } catch (const NotCograph&) {
        throw NotKite();
    }
    std::vector<long long> rev;
    detail::kite_parse_rec(t, rev);
    Composition k;
    k.parts.assign(rev.rbegin(), rev.rend());
    // parity sanity: odd positions end at disjoint blocks by construction
    return k;
}

/// (vertices, edges) of KiteGraph(k): vertices = sum k_i,
/// edges = sum_i C(k(2i),2) - C(k(2i-1),2).
inline std::pair<long long, long long> kite_counts(const Composition& k) {
    long long verts = k.total();
    long long edges = 0;
    auto choose2 = [](long long x) { return x * (x - 1) / 2; };
    for (size_t i = 1; 2 * i <= k.parts.size(); ++i)
        edges += choose2(k.prefix(2 * i)) - choose2(k.prefix(2 * i - 1));
    return {verts, edges};
}

/// Closed form for W^- of a kite graph:
///   1/(1-X^{k[1]}T) prod_{i>=1, k_{2i}>0}
///     (1-X^{k[2i+1]-k_{2i}+1}T)(1-X^{k[2i+1]-k_{2i}}T)
///     / ((1-X^{k[2i+1]+1}T)(1-X^{k[2i+1]}T)).
inline ZetaRat w_kite(const Composition& k) {
    ZetaRat w = ZetaRat::geo_inverse(k.alt_tail(1));
    for (size_t i = 1; 2 * i <= k.parts.size(); ++i) {
        long long k2i = k.part(2 * i);
        if (k2i == 0) continue;
        long long tail = k.alt_tail(2 * i + 1);
        w = w * BiPoly::one_minus(tail - k2i + 1, 1);
        w = w * BiPoly::one_minus(tail - k2i, 1);
        w = w.div_geo(tail + 1, 1).div_geo(tail, 1);
    }
    return w.reduced();
}

/// Abscissa of convergence of the class counting zeta function, off the
/// reduced denominator. Pole exponents must be positive integers and the
/// abscissa at most n+m+1.
inline long long alpha_cc(const SimpleGraph& g) {
    ZetaRat cc = cc_zeta(g);
    long long max_a = 0;
    bool any = false;
    for (const auto& f : cc.den()) {
        if (f.b != 1) throw std::logic_error("alpha_cc: unexpected T-degree in denominator");
        if (f.a < 1) throw std::logic_error("alpha_cc: non-positive pole exponent");
        max_a = any ? std::max(max_a, f.a) : f.a;
        any = true;
    }
    long long alpha = any ? max_a + 1 : 1;
    if (alpha > g.n() + g.m() + 1) throw std::logic_error("alpha_cc: exceeds n+m+1");
    return alpha;
}

/// alpha for kite graphs: edges + max{k[1]+1, k[2i+1]+2 : i >= 1, k_{2i} > 0}.
inline long long alpha_kite(const Composition& k) {
    auto [verts, edges] = kite_counts(k);
    long long best = k.alt_tail(1) + 1;
    for (size_t i = 1; 2 * i <= k.parts.size(); ++i)
        if (k.part(2 * i) > 0) best = std::max(best, k.alt_tail(2 * i + 1) + 2);
    return edges + best;
}

}  // namespace zetagraph
