#pragma once

#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "rational.hpp"

namespace zetagraph {

/// Polynomial in T whose coefficients are Laurent polynomials in X, i.e. an
/// element of Q[X^{+-1},T]. Terms are keyed by (tExp, xExp) so that the
/// serialization order (sorted by (t,x)) is the storage order. No zero
/// coefficients are stored.
class BiPoly {
public:
    // key = (t exponent, x exponent)
    using Key = std::pair<long long, long long>;
    using Terms = std::map<Key, Rational>;

    BiPoly() = default;
    explicit BiPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    static BiPoly monomial(long long xExp, long long tExp, const Rational& c = 1) {
        BiPoly p;
        if (c != 0) p.terms_[{tExp, xExp}] = c;
        return p;
    }
    /// 1 - X^a T^b
    static BiPoly one_minus(long long a, long long b) {
        BiPoly p(Rational(1));
        p.add_term(a, b, -1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
               terms_.begin()->second == 1;
    }

    void add_term(long long xExp, long long tExp, const Rational& c) {
        if (c == 0) return;
        Key k{tExp, xExp};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long deg_t() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }
    long long min_t() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.second, k.first, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.second, k.first, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly scaled(const Rational& c) const {
        BiPoly r;
        if (c == 0) return r;
        for (const auto& [k, co] : terms_) r.terms_[k] = co * c;
        return r;
    }
    BiPoly shifted(long long dx, long long dt) const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.first + dt, k.second + dx}] = c;
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// T |-> X^c T : every term (x,t) becomes (x+ct, t).
    BiPoly subst_t_scale(long long c) const {
        BiPoly r;
        for (const auto& [k, co] : terms_) r.terms_[{k.first, k.second + c * k.first}] = co;
        return r;
    }

    /// Coefficient of T^t as a Laurent polynomial in X.
    LaurentPoly coeff_t(long long t) const {
        LaurentPoly p;
        for (auto it = terms_.lower_bound({t, LLONG_MIN}); it != terms_.end() && it->first.first == t;
             ++it)
            p.add_term(it->first.second, it->second);
        return p;
    }

    std::vector<LaurentPoly> t_coeffs(long long upto) const {
        std::vector<LaurentPoly> v(static_cast<size_t>(upto) + 1);
        for (const auto& [k, c] : terms_)
            if (k.first >= 0 && k.first <= upto) v[static_cast<size_t>(k.first)].add_term(k.second, c);
        return v;
    }

    /// Exact division by (1 - X^a T^b); nullopt when the factor does not
    /// divide. Uses the recurrence q_t = p_t + X^a q_{t-b} on T-coefficients.
    std::optional<BiPoly> div_one_minus(long long a, long long b) const {
        if (is_zero()) return BiPoly();
        long long D = deg_t();
        if (min_t() < 0) return std::nullopt;
        std::vector<LaurentPoly> p(static_cast<size_t>(D) + 1);
        for (const auto& [k, c] : terms_) p[static_cast<size_t>(k.first)].add_term(k.second, c);
        std::vector<LaurentPoly> q(static_cast<size_t>(D) + 1);
        for (long long t = 0; t <= D; ++t) {
            LaurentPoly qt = p[static_cast<size_t>(t)];
            if (t >= b) qt += LaurentPoly::monomial(a) * q[static_cast<size_t>(t - b)];
            if (t > D - b && !qt.is_zero()) return std::nullopt;
            q[static_cast<size_t>(t)] = std::move(qt);
        }
        BiPoly result;
        for (long long t = 0; t <= D; ++t)
            for (const auto& [e, c] : q[static_cast<size_t>(t)].terms()) result.add_term(e, t, c);
        return result;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_var = (k.second != 0) || (k.first != 0);
            bool unit = (a == 1) && has_var;
            if (!unit) os << (denominator(a) == 1 ? numerator(a).str() : rat_to_string(a));
            if (k.second != 0) {
                if (!unit) os << "*";
                os << "X";
                if (k.second != 1) os << "^" << k.second;
                unit = false;
            }
            if (k.first != 0) {
                if (!unit) os << "*";
                os << "T";
                if (k.first != 1) os << "^" << k.first;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

}  // namespace zetagraph
