#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipoly.hpp"

namespace zetagraph {

/// One denominator factor (1 - X^a T^b)^mult with b >= 1, mult >= 1.
struct GeoFactor {
    long long a = 0;
    long long b = 1;
    long long mult = 1;

    friend bool operator==(const GeoFactor& f, const GeoFactor& g) {
        return f.a == g.a && f.b == g.b && f.mult == g.mult;
    }
    // canonical order: by (b, a)
    friend bool operator<(const GeoFactor& f, const GeoFactor& g) {
        if (f.b != g.b) return f.b < g.b;
        return f.a < g.a;
    }
};

/// Truncated power series in T with Laurent-polynomial coefficients:
/// coeffs[k] is the coefficient of T^k, k = 0..order.
struct TSeries {
    long long order = 0;
    std::vector<LaurentPoly> coeffs;  // size order+1

    friend bool operator==(const TSeries& s, const TSeries& t) {
        return s.order == t.order && s.coeffs == t.coeffs;
    }
};

struct NonLinearDenominator : std::domain_error {
    NonLinearDenominator() : std::domain_error("Hadamard product requires b = 1 denominator factors") {}
};

/// Rational function N(X,T) / prod (1 - X^a T^b)^m with exact rational
/// coefficients. The universal output type: after reduce() no denominator
/// factor divides the numerator and the factor multiset is sorted by (b,a).
class ZetaRat {
public:
    ZetaRat() : num_(Rational(0)) {}
    explicit ZetaRat(const Rational& c) : num_(c) {}
    ZetaRat(BiPoly num, std::vector<GeoFactor> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize_den();
    }

    static ZetaRat one() { return ZetaRat(Rational(1)); }
    static ZetaRat zero() { return ZetaRat(); }

    /// gp(X^a T) = X^a T / (1 - X^a T).
    static ZetaRat gp(long long a) {
        return ZetaRat(BiPoly::monomial(a, 1), {GeoFactor{a, 1, 1}});
    }
    /// 1 / (1 - X^a T^b).
    static ZetaRat geo_inverse(long long a, long long b = 1) {
        return ZetaRat(BiPoly(Rational(1)), {GeoFactor{a, b, 1}});
    }
    static ZetaRat from_poly(BiPoly p) { return ZetaRat(std::move(p), {}); }

    const BiPoly& num() const { return num_; }
    const std::vector<GeoFactor>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// Canonical form: cancels every geometric factor that exactly divides
    /// the numerator, greedily until none does. Idempotent.
    ZetaRat reduced() const {
        ZetaRat r = *this;
        if (r.num_.is_zero()) {
            r.den_.clear();
            return r;
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& f : r.den_) {
                while (f.mult > 0) {
                    auto q = r.num_.div_one_minus(f.a, f.b);
                    if (!q) break;
                    r.num_ = std::move(*q);
                    --f.mult;
                    progress = true;
                }
            }
            std::erase_if(r.den_, [](const GeoFactor& f) { return f.mult == 0; });
        }
        return r;
    }

    friend ZetaRat operator+(const ZetaRat& f, const ZetaRat& g) { return combine(f, g, false); }
    friend ZetaRat operator-(const ZetaRat& f, const ZetaRat& g) { return combine(f, g, true); }

    friend ZetaRat operator*(const ZetaRat& f, const ZetaRat& g) {
        ZetaRat r;
        r.num_ = f.num_ * g.num_;
        r.den_ = f.den_;
        for (const auto& gf : g.den_) r.merge_factor(gf);
        r.sort_den();
        return r.reduced();
    }

    friend ZetaRat operator*(const ZetaRat& f, const BiPoly& p) {
        ZetaRat r = f;
        r.num_ = f.num_ * p;
        return r.reduced();
    }

    friend ZetaRat operator-(const ZetaRat& f) {
        ZetaRat r = f;
        r.num_ = -r.num_;
        return r;
    }

    /// Divide by (1 - X^a T^b): pushes a factor into the denominator.
    ZetaRat div_geo(long long a, long long b = 1, long long mult = 1) const {
        ZetaRat r = *this;
        r.merge_factor(GeoFactor{a, b, mult});
        r.sort_den();
        return r.reduced();
    }

    /// T |-> X^c T on both numerator and denominator factors.
    ZetaRat subst_t_scale(long long c) const {
        ZetaRat r;
        r.num_ = num_.subst_t_scale(c);
        r.den_ = den_;
        for (auto& f : r.den_) f.a += c * f.b;
        r.sort_den();
        return r.reduced();
    }

    /// Exact truncated expansion to order N; expects a reduced value.
    TSeries series(long long N) const {
        // numerator coefficients up to N
        std::vector<LaurentPoly> cur = num_.t_coeffs(N);
        // multiply by each 1/(1-X^a T^b)^m via the generalized geometric series
        for (const auto& f : den_) {
            // expansion coefficients: C(j+m-1, m-1) X^{a j} at T^{b j}
            std::vector<LaurentPoly> next(static_cast<size_t>(N) + 1);
            Int binom = 1;  // C(j+m-1, m-1)
            for (long long j = 0, t = 0; t <= N; ++j, t += f.b) {
                if (j > 0) {
                    binom = binom * (j + f.mult - 1) / j;
                }
                LaurentPoly g = LaurentPoly::monomial(f.a * j, Rational(binom));
                for (long long s = 0; s + t <= N; ++s) {
                    if (cur[static_cast<size_t>(s)].is_zero()) continue;
                    next[static_cast<size_t>(s + t)] += cur[static_cast<size_t>(s)] * g;
                }
                if (f.b == 0) break;  // unreachable, b >= 1
            }
            cur = std::move(next);
        }
        TSeries s;
        s.order = N;
        s.coeffs = std::move(cur);
        return s;
    }

    /// Structural equality of the representation (meaningful after reduce()).
    bool structurally_equal(const ZetaRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Value equality by cross-multiplication of numerators against the
    /// opposite denominators. Structurally equal representations short-cut.
    friend bool operator==(const ZetaRat& f, const ZetaRat& g) {
        if (f.num_ == g.num_ && f.den_ == g.den_) return true;
        return f.num_ * expand_den(g.den_) == g.num_ * expand_den(f.den_);
    }
    friend bool operator!=(const ZetaRat& f, const ZetaRat& g) { return !(f == g); }

    static BiPoly expand_den(const std::vector<GeoFactor>& den) {
        BiPoly p(Rational(1));
        for (const auto& f : den)
            for (long long i = 0; i < f.mult; ++i) p *= BiPoly::one_minus(f.a, f.b);
        return p;
    }

    long long den_total_mult() const {
        long long s = 0;
        for (const auto& f : den_) s += f.mult;
        return s;
    }

    std::string pretty() const {
        std::ostringstream os;
        os << "(" << num_.str() << ")";
        if (!den_.empty()) {
            os << "/(";
            bool first = true;
            for (const auto& f : den_) {
                if (!first) os << " ";
                first = false;
                os << "(1 - " << monomial_str(f.a, f.b) << ")";
                if (f.mult != 1) os << "^" << f.mult;
            }
            os << ")";
        }
        return os.str();
    }

    std::string latex() const {
        std::ostringstream os;
        if (den_.empty()) {
            os << latex_poly(num_);
            return os.str();
        }
        os << "\\frac{" << latex_poly(num_) << "}{";
        bool first = true;
        for (const auto& f : den_) {
            if (!first) os << " ";
            first = false;
            os << "(1 - " << latex_monomial(f.a, f.b) << ")";
            if (f.mult != 1) os << "^{" << f.mult << "}";
        }
        os << "}";
        return os.str();
    }

private:
    BiPoly num_;
    std::vector<GeoFactor> den_;  // sorted by (b, a), multiplicities merged

    static std::string monomial_str(long long a, long long b) {
        std::ostringstream os;
        if (a != 0) {
            os << "X";
            if (a != 1) os << "^" << a;
            os << "*";
        }
        os << "T";
        if (b != 1) os << "^" << b;
        return os.str();
    }
    static std::string latex_monomial(long long a, long long b) {
        std::ostringstream os;
        if (a != 0) {
            os << "X";
            if (a != 1) os << "^{" << a << "}";
        }
        os << "T";
        if (b != 1) os << "^{" << b << "}";
        return os.str();
    }
    static std::string latex_poly(const BiPoly& p) {
        // reuse str() but with braces on exponents
        std::string s = p.str();
        std::string out;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '^') {
                out += "^{";
                size_t j = i + 1;
                if (j < s.size() && s[j] == '-') {
                    out += '-';
                    ++j;
                }
                while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) out += s[j++];
                out += '}';
                i = j - 1;
            } else if (s[i] != '*') {
                out += s[i];
            }
        }
        return out;
    }

    void merge_factor(const GeoFactor& f) {
        if (f.mult == 0) return;
        for (auto& d : den_) {
            if (d.a == f.a && d.b == f.b) {
                d.mult += f.mult;
                return;
            }
        }
        den_.push_back(f);
    }
    void sort_den() { std::sort(den_.begin(), den_.end()); }
    void normalize_den() {
        std::vector<GeoFactor> merged;
        for (const auto& f : den_) {
            if (f.b < 1 || f.mult < 0) throw std::invalid_argument("invalid GeoFactor");
            if (f.mult == 0) continue;
            bool found = false;
            for (auto& d : merged) {
                if (d.a == f.a && d.b == f.b) {
                    d.mult += f.mult;
                    found = true;
                    break;
                }
            }
            if (!found) merged.push_back(f);
        }
        std::sort(merged.begin(), merged.end());
        den_ = std::move(merged);
    }

    /// Common denominator = factor-wise max multiplicity union.
    static ZetaRat combine(const ZetaRat& f, const ZetaRat& g, bool subtract) {
        std::vector<GeoFactor> common = f.den_;
        for (const auto& gf : g.den_) {
            bool found = false;
            for (auto& c : common) {
                if (c.a == gf.a && c.b == gf.b) {
                    c.mult = std::max(c.mult, gf.mult);
                    found = true;
                    break;
                }
            }
            if (!found) common.push_back(gf);
        }
        std::sort(common.begin(), common.end());
        auto complement = [&common](const std::vector<GeoFactor>& den) {
            BiPoly p(Rational(1));
            for (const auto& c : common) {
                long long have = 0;
                for (const auto& d : den)
                    if (d.a == c.a && d.b == c.b) have = d.mult;
                for (long long i = have; i < c.mult; ++i) p *= BiPoly::one_minus(c.a, c.b);
            }
            return p;
        };
        BiPoly nf = f.num_ * complement(f.den_);
        BiPoly ng = g.num_ * complement(g.den_);
        ZetaRat r;
        r.num_ = subtract ? nf - ng : nf + ng;
        r.den_ = common;
        return r.reduced();
    }
};

inline ZetaRat reduce(const ZetaRat& f) { return f.reduced(); }
inline ZetaRat gp(long long a) { return ZetaRat::gp(a); }
inline TSeries series(const ZetaRat& f, long long N) { return f.series(N); }
inline ZetaRat subst_t_scale(const ZetaRat& f, long long c) { return f.subst_t_scale(c); }

/// Pointwise product of truncated series.
inline TSeries pointwise_product(const TSeries& a, const TSeries& b) {
    TSeries r;
    r.order = std::min(a.order, b.order);
    r.coeffs.resize(static_cast<size_t>(r.order) + 1);
    for (long long k = 0; k <= r.order; ++k)
        r.coeffs[static_cast<size_t>(k)] =
            a.coeffs[static_cast<size_t>(k)] * b.coeffs[static_cast<size_t>(k)];
    return r;
}

/// T-Hadamard product (coefficientwise product of T-series) of two rational
/// functions whose denominator factors all have b = 1. The numerator is
/// reconstructed against the candidate denominator
/// prod_{i,j} (1 - X^{a_i+a_j} T)^{m_i+m_j-1} and the result is validated by
/// re-expansion to 2N terms.
inline ZetaRat hadamard(const ZetaRat& f, const ZetaRat& g) {
    for (const auto& fac : f.den())
        if (fac.b != 1) throw NonLinearDenominator();
    for (const auto& fac : g.den())
        if (fac.b != 1) throw NonLinearDenominator();
    if (f.is_zero() || g.is_zero()) return ZetaRat::zero();

    long long N = f.den_total_mult() * g.den_total_mult() + f.num().deg_t() + g.num().deg_t() + 1;

    std::vector<GeoFactor> cand;
    for (const auto& ff : f.den()) {
        for (const auto& gf : g.den()) {
            GeoFactor c{ff.a + gf.a, 1, ff.mult + gf.mult - 1};
            bool merged = false;
            for (auto& d : cand) {
                if (d.a == c.a) {
                    // distinct (i,j) pairs can collide on a_i + a_j; keep the max
                    d.mult = std::max(d.mult, c.mult);
                    merged = true;
                    break;
                }
            }
            if (!merged) cand.push_back(c);
        }
    }
    std::sort(cand.begin(), cand.end());

    TSeries prod = pointwise_product(f.series(N), g.series(N));
    // numerator = (series product) * candidate denominator, truncated
    BiPoly den_poly = ZetaRat::expand_den(cand);
    auto den_coeffs = den_poly.t_coeffs(N);
    BiPoly num;
    for (long long k = 0; k <= N; ++k) {
        LaurentPoly ck;
        for (long long j = 0; j <= k; ++j) {
            if (den_coeffs[static_cast<size_t>(j)].is_zero()) continue;
            ck += den_coeffs[static_cast<size_t>(j)] * prod.coeffs[static_cast<size_t>(k - j)];
        }
        for (const auto& [e, c] : ck.terms()) num.add_term(e, k, c);
    }
    ZetaRat result = ZetaRat(std::move(num), std::move(cand)).reduced();

    long long M = 2 * N;
    TSeries check = result.series(M);
    TSeries expect = pointwise_product(f.series(M), g.series(M));
    if (!(check == expect))
        throw std::logic_error("hadamard: reconstruction failed re-expansion check");
    return result;
}

/// True iff f(X^{-1}, T^{-1}) = -X^n T f(X,T) as exact rational functions.
/// The substitution is realised by exponent negation on numerator terms and
/// the factor rewriting (1 - X^{-a}T^{-b}) = -X^{-a}T^{-b} (1 - X^a T^b).
inline bool funceq_check(const ZetaRat& f, long long n) {
    if (f.is_zero()) return false;
    long long M = 0, A = 0, B = 0;
    for (const auto& fac : f.den()) {
        M += fac.mult;
        A += fac.a * fac.mult;
        B += fac.b * fac.mult;
    }
    // compare N(X^{-1},T^{-1}) (-1)^M X^A T^B  ==  -X^n T N(X,T)
    std::map<std::pair<long long, long long>, Rational> lhs, rhs;
    int sign = (M % 2 == 0) ? 1 : -1;
    for (const auto& [k, c] : f.num().terms()) lhs[{B - k.first, A - k.second}] = sign * c;
    for (const auto& [k, c] : f.num().terms()) rhs[{k.first + 1, k.second + n}] = -c;
    return lhs == rhs;
}

/// True iff W(1,T) = 1/(1-T) through order N: every series coefficient
/// evaluates to 1 at X = 1. Evaluation happens on series coefficients, never
/// on the closed form (the (1-T)-type factors are removable there).
inline bool reduced_zeta_check(const ZetaRat& f, long long N) {
    TSeries s = f.series(N);
    for (const auto& c : s.coeffs)
        if (c.eval(1) != 1) return false;
    return true;
}

}  // namespace zetagraph
