#pragma once

#include <algorithm>
#include <vector>

#include "rational.hpp"

namespace zetagraph {

/// Elementary divisors d_1 | d_2 | ... of an integer matrix (nonzero
/// diagonal of the Smith normal form, as positive integers). Row/column
/// operations over Z with arbitrary-precision pivots.
inline std::vector<Int> elementary_divisors(std::vector<std::vector<Int>> a) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<Int> divisors;
    size_t t = 0;
    while (t < rows && t < cols) {
        // find a pivot with minimal nonzero absolute value in the submatrix
        size_t pi = t, pj = t;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int v = abs(a[i][j]);
                if (best == 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // submatrix is zero
        std::swap(a[t], a[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Int q = a[i][t] / a[t][t];
            for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int q = a[t][j] / a[t][t];
            for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick pivot

        // enforce the divisibility chain: fold in any entry the pivot misses
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    divides_all = false;
                }
        if (!divides_all) continue;

        divisors.push_back(abs(a[t][t]));
        ++t;
    }
    return divisors;
}

/// |Ker| of the map (Z/p^k)^n -> (Z/p^k)^m, x |-> xA, for an integer lift A:
/// p^{k(n-r)} * prod_i p^{min(k, v_p(d_i))} with d_i the elementary divisors.
inline Int kernel_size(const std::vector<std::vector<Int>>& mat, const Int& p, long long k) {
    const long long n = static_cast<long long>(mat.size());
    if (k == 0) return 1;
    auto div = elementary_divisors(mat);
    const long long r = static_cast<long long>(div.size());
    Int result = int_pow(p, static_cast<unsigned long>(k * (n - r)));
    for (const Int& d : div) {
        long long v = p_valuation(d, p);
        result *= int_pow(p, static_cast<unsigned long>(std::min(k, v)));
    }
    return result;
}

}  // namespace zetagraph
