#pragma once

#include "exalg/rational.hpp"

#include <optional>
#include <vector>

namespace exalg {

using ZMat = std::vector<std::vector<BigInt>>;

/// Smith normal form U*M*V = D with U, V unimodular.
struct SmithForm {
    ZMat u, d, v;
};

namespace detail {

inline ZMat z_identity(size_t n) {
    ZMat m(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace detail

inline SmithForm smith_normal_form(ZMat m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    ZMat u = detail::z_identity(rows);
    ZMat v = detail::z_identity(cols);

    auto row_op = [&](size_t i, size_t j, const BigInt& f) {  // row_i -= f*row_j
        for (size_t c = 0; c < cols; ++c) m[i][c] -= f * m[j][c];
        for (size_t c = 0; c < rows; ++c) u[i][c] -= f * u[j][c];
    };
    auto col_op = [&](size_t i, size_t j, const BigInt& f) {  // col_i -= f*col_j
        for (size_t r = 0; r < rows; ++r) m[r][i] -= f * m[r][j];
        for (size_t r = 0; r < cols; ++r) v[r][i] -= f * v[r][j];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(m[i], m[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
        for (size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // locate minimal nonzero entry in the remaining block
        size_t pi = t, pj = t;
        BigInt best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = boost::multiprecision::abs(m[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            BigInt q = m[i][t] / m[t][t];
            row_op(i, t, q);
            if (m[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            BigInt q = m[t][j] / m[t][t];
            col_op(j, t, q);
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller pivot now exists, repeat
        // divisibility condition: pivot must divide the rest of the block
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols && divides; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    // fold the offending row in and restart this pivot
                    row_op(t, i, BigInt(-1));
                    divides = false;
                }
        if (!divides) continue;
        if (m[t][t] < 0) {
            for (size_t c = 0; c < cols; ++c) m[t][c] = -m[t][c];
            for (size_t c = 0; c < rows; ++c) u[t][c] = -u[t][c];
        }
        ++t;
    }
    return SmithForm{std::move(u), std::move(m), std::move(v)};
}

/// Solves M x = b (mod n) via Smith normal form; returns a representative in
/// [0, n)^cols or nullopt when inconsistent.
inline std::optional<std::vector<long>> solve_mod(const ZMat& M, const std::vector<BigInt>& b,
                                                  long n) {
    if (n < 1) throw std::domain_error("solve_mod: modulus must be >= 1");
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    if (rows == 0 || cols == 0) {
        // only consistency to check
        for (const auto& x : b)
            if (x % n != 0) return std::nullopt;
        return std::vector<long>(cols, 0);
    }
    SmithForm snf = smith_normal_form(M);
    BigInt nn(n);
    auto mod = [&](BigInt x) {
        x %= nn;
        if (x < 0) x += nn;
        return x;
    };
    // rhs = U b
    std::vector<BigInt> rhs(rows, 0);
    for (size_t i = 0; i < rows; ++i) {
        BigInt acc = 0;
        for (size_t j = 0; j < rows; ++j) acc += snf.u[i][j] * b[j];
        rhs[i] = mod(acc);
    }
    // solve D y = rhs (mod n)
    std::vector<BigInt> y(cols, 0);
    size_t diag = std::min(rows, cols);
    for (size_t i = 0; i < diag; ++i) {
        BigInt d = mod(snf.d[i][i]);
        BigInt r = rhs[i];
        BigInt g = boost::multiprecision::gcd(d == 0 ? nn : d, nn);
        if (r % g != 0) return std::nullopt;
        if (g == nn) {
            y[i] = 0;  // equation is 0 = 0 mod n
            continue;
        }
        BigInt d2 = d / g, n2 = nn / g, r2 = r / g;
        // invert d2 mod n2 (coprime by construction)
        BigInt t0 = 0, t1 = 1, r0 = n2, r1 = d2 % n2;
        while (r1 != 0) {
            BigInt q = r0 / r1;
            BigInt tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
            tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
        }
        BigInt inv = t0 % n2;
        if (inv < 0) inv += n2;
        y[i] = mod(r2 * inv);
    }
    for (size_t i = diag; i < rows; ++i)
        if (rhs[i] % nn != 0) return std::nullopt;
    // x = V y
    std::vector<long> x(cols, 0);
    for (size_t i = 0; i < cols; ++i) {
        BigInt acc = 0;
        for (size_t j = 0; j < cols; ++j) acc += snf.v[i][j] * y[j];
        x[i] = static_cast<long>(mod(acc));
    }
    // exact verification of the residue system
    for (size_t i = 0; i < rows; ++i) {
        BigInt acc = 0;
        for (size_t j = 0; j < cols; ++j) acc += M[i][j] * x[j];
        if (mod(acc - b[i]) != 0) throw std::logic_error("solve_mod: verification failed");
    }
    return x;
}

}  // namespace exalg
