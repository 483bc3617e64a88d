#pragma once

#include <map>
#include <sstream>
#include <string>

#include "rational.hpp"

namespace zetagraph {

/// Laurent polynomial in X over Q. Zero coefficients are never stored; the
/// empty map is the zero polynomial.
class LaurentPoly {
public:
    using Terms = std::map<long long, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    static LaurentPoly monomial(long long e, const Rational& c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(long long e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exact evaluation at X = q.
    Rational eval(const Rational& q) const {
        Rational r = 0;
        for (const auto& [e, c] : terms_) r += c * rat_pow(q, e);
        return r;
    }

    bool has_negative_exponents() const {
        return !terms_.empty() && terms_.begin()->first < 0;
    }
    long long min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    long long max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
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
            bool unit = (a == 1) && e != 0;
            if (!unit) os << (denominator(a) == 1 ? numerator(a).str() : rat_to_string(a));
            if (e != 0) {
                if (!unit) os << "*";
                os << "X";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

}  // namespace zetagraph
