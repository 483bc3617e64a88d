#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetagraph {

using Int = boost::multiprecision::cpp_int;

/// Exact rational coefficients. cpp_rational keeps the canonical form we
/// require: lowest terms, positive denominator, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// q^e for signed e (q != 0 when e < 0).
inline Rational rat_pow(const Rational& base, long long exp) {
    if (exp >= 0) {
        Rational r = 1, b = base;
        unsigned long long e = static_cast<unsigned long long>(exp);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
    return 1 / rat_pow(base, -exp);
}

/// p-adic valuation of a nonzero integer.
inline long long p_valuation(Int x, const Int& p) {
    if (x == 0) throw std::domain_error("p_valuation of zero");
    if (x < 0) x = -x;
    long long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/// num/den normalized to the canonical form (den > 0, lowest terms, 0/1).
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Parses "p/q" or a bare integer; the inverse of rat_to_string.
inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace zetagraph
