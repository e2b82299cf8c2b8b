#pragma once

// Test-only independent oracles. These deliberately avoid the library's
// production code paths: long division here is plain schoolbook, the mod-n
// solver is exhaustive, subgroup enumeration is closure over all extensions.

#include "exalg/rational.hpp"

#include <vector>

namespace oracles {

// Remainder of x^k modulo a monic-ish divisor, schoolbook long division over Q.
inline std::vector<exalg::Rational> poly_mod_oracle(std::vector<exalg::Rational> num,
                                                    const std::vector<exalg::Rational>& den) {
    auto trim = [](std::vector<exalg::Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(num);
    while (num.size() >= den.size()) {
        exalg::Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    return num;
}

// Exhaustive search for a solution of M x = b mod n over all residue vectors.
inline bool solve_mod_exhaustive(const std::vector<std::vector<long>>& M,
                                 const std::vector<long>& b, long n, std::vector<long>* out) {
    size_t cols = M.empty() ? 0 : M[0].size();
    std::vector<long> x(cols, 0);
    while (true) {
        bool ok = true;
        for (size_t i = 0; i < M.size() && ok; ++i) {
            long acc = 0;
            for (size_t j = 0; j < cols; ++j) acc = (acc + M[i][j] % n * x[j]) % n;
            long rhs = ((b[i] % n) + n) % n;
            if (((acc % n) + n) % n != rhs) ok = false;
        }
        if (ok) {
            if (out) *out = x;
            return true;
        }
        size_t k = 0;
        while (k < cols) {
            if (++x[k] < n) break;
            x[k] = 0;
            ++k;
        }
        if (k == cols) return false;
    }
}

}  // namespace oracles
