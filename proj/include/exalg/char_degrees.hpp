#pragma once

#include "exalg/perm_group.hpp"

#include <cstdint>

namespace exalg {

namespace detail {

struct Fp {
    long p;
    long pow(long b, long e) const {
        long r = 1 % p;
        b %= p;
        if (b < 0) b += p;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
    long inv(long a) const { return pow(a, p - 2); }
    long norm(long a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
};

using FpVec = std::vector<long>;
using FpMat = std::vector<FpVec>;

inline size_t fp_rank(FpMat m, const Fp& f) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] % f.p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        long inv = f.inv(f.norm(m[r][c]));
        for (size_t j = 0; j < cols; ++j) m[r][j] = f.norm(m[r][j] * inv % f.p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % f.p == 0) continue;
            long fac = f.norm(m[i][c]);
            for (size_t j = 0; j < cols; ++j) m[i][j] = f.norm(m[i][j] - fac * m[r][j] % f.p);
        }
        ++r;
    }
    return r;
}

inline std::vector<FpVec> fp_kernel(FpMat m, const Fp& f) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] % f.p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        long inv = f.inv(f.norm(m[r][c]));
        for (size_t j = 0; j < cols; ++j) m[r][j] = f.norm(m[r][j] * inv % f.p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % f.p == 0) continue;
            long fac = f.norm(m[i][c]);
            for (size_t j = 0; j < cols; ++j) m[i][j] = f.norm(m[i][j] - fac * m[r][j] % f.p);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        FpVec v(cols, 0);
        v[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            if (pivots[k] < c) v[pivots[k]] = f.norm(-m[k][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Multiset of irreducible character degrees over an algebraically closed
/// field of characteristic zero, via the class-algebra method over F_p with
/// p = 1 (mod exp(G)) and p > 2|G|: simultaneously diagonalize the class-sum
/// matrices acting on the center of F_p[G], recover d^2 = |G| / sum over
/// classes of w(C)w(C^-1)/|C|, and lift (d^2 <= |G| < p/2 makes the lift
/// unique). Returns the sorted degree list; asserts sum d_i^2 = |G| and that
/// the number of degrees equals the number of conjugacy classes.
inline std::vector<int> character_degrees(const GroupPtr& g) {
    const auto& classes = g->conjugacy_classes();
    size_t k = classes.size();
    long order = static_cast<long>(g->order());
    long expo = g->exponent();
    long p = expo + 1;
    auto is_prime = [](long n) {
        if (n < 2) return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    while (!(is_prime(p) && p % expo == 1 && p > 2 * order)) p += expo;
    detail::Fp f{p};

    // class representatives and inverse-class map
    std::vector<int> rep(k);
    for (size_t c = 0; c < k; ++c) rep[c] = classes[c][0];
    std::vector<int> inv_class(k);
    for (size_t c = 0; c < k; ++c) inv_class[c] = g->class_of(g->inv(rep[c]));

    // class algebra structure constants: M_i[l][j] = #{u in C_i : u^-1 rep_l in C_j}
    std::vector<detail::FpMat> mats(k, detail::FpMat(k, detail::FpVec(k, 0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t l = 0; l < k; ++l)
            for (int u : classes[i]) {
                int j = g->class_of(g->mul(g->inv(u), rep[l]));
                ++mats[i][l][j];
            }

    // common eigenline refinement
    std::vector<std::vector<detail::FpVec>> spaces;
    {
        std::vector<detail::FpVec> full;
        for (size_t i = 0; i < k; ++i) {
            detail::FpVec e(k, 0);
            e[i] = 1;
            full.push_back(e);
        }
        spaces.push_back(full);
    }
    for (size_t i = 0; i < k; ++i) {
        std::vector<std::vector<detail::FpVec>> next;
        for (auto& s : spaces) {
            if (s.size() == 1) {
                next.push_back(s);
                continue;
            }
            // restriction of M_i to span(s): columns solved in the basis s
            size_t d = s.size();
            detail::FpMat images(d, detail::FpVec(k, 0));
            for (size_t b = 0; b < d; ++b)
                for (size_t r = 0; r < k; ++r)
                    for (size_t c = 0; c < k; ++c)
                        images[b][r] = f.norm(images[b][r] + mats[i][r][c] * s[b][c] % p);
            // solve coordinates: [s^T] x = image
            detail::FpMat rest(d, detail::FpVec(d, 0));
            {
                // augmented solve for all images at once
                detail::FpMat aug(k, detail::FpVec(d + d, 0));
                for (size_t r = 0; r < k; ++r) {
                    for (size_t b = 0; b < d; ++b) aug[r][b] = s[b][r];
                    for (size_t b = 0; b < d; ++b) aug[r][d + b] = images[b][r];
                }
                // eliminate
                size_t rr = 0;
                std::vector<size_t> pivots;
                for (size_t c = 0; c < d && rr < k; ++c) {
                    size_t piv = rr;
                    while (piv < k && aug[piv][c] % p == 0) ++piv;
                    if (piv == k) throw std::logic_error("character_degrees: dependent basis");
                    std::swap(aug[piv], aug[rr]);
                    long inv = f.inv(f.norm(aug[rr][c]));
                    for (size_t j = 0; j < d + d; ++j) aug[rr][j] = f.norm(aug[rr][j] * inv % p);
                    for (size_t r2 = 0; r2 < k; ++r2) {
                        if (r2 == rr || aug[r2][c] % p == 0) continue;
                        long fac = f.norm(aug[r2][c]);
                        for (size_t j = 0; j < d + d; ++j)
                            aug[r2][j] = f.norm(aug[r2][j] - fac * aug[rr][j] % p);
                    }
                    pivots.push_back(c);
                    ++rr;
                }
                for (size_t r2 = rr; r2 < k; ++r2)
                    for (size_t b = 0; b < d; ++b)
                        if (aug[r2][d + b] % p != 0)
                            throw std::logic_error("character_degrees: space not invariant");
                for (size_t r2 = 0; r2 < rr; ++r2)
                    for (size_t b = 0; b < d; ++b) rest[pivots[r2]][b] = aug[r2][d + b];
            }
            // split by eigenvalues: scan lambda in F_p
            size_t found = 0;
            for (long lam = 0; lam < p && found < d; ++lam) {
                detail::FpMat shifted = rest;
                for (size_t x = 0; x < d; ++x) shifted[x][x] = f.norm(shifted[x][x] - lam);
                auto ker = detail::fp_kernel(shifted, f);
                if (ker.empty()) continue;
                std::vector<detail::FpVec> sub;
                for (auto& kv : ker) {
                    detail::FpVec v(k, 0);
                    for (size_t b = 0; b < d; ++b)
                        for (size_t c = 0; c < k; ++c) v[c] = f.norm(v[c] + kv[b] * s[b][c] % p);
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != d) throw std::logic_error("character_degrees: split failed");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k) throw std::logic_error("character_degrees: not fully split");

    // eigenvalues per line, then degrees
    std::vector<int> degrees;
    for (const auto& s : spaces) {
        const detail::FpVec& v = s[0];
        size_t l0 = 0;
        while (v[l0] % p == 0) ++l0;
        long vinv = f.inv(f.norm(v[l0]));
        std::vector<long> omega(k);
        for (size_t i = 0; i < k; ++i) {
            long acc = 0;
            for (size_t c = 0; c < k; ++c) acc = f.norm(acc + mats[i][l0][c] * v[c] % p);
            omega[i] = f.norm(acc * vinv % p);
        }
        long s_acc = 0;
        for (size_t i = 0; i < k; ++i) {
            long ci = static_cast<long>(classes[i].size());
            s_acc = f.norm(s_acc + omega[i] * omega[inv_class[i]] % p * f.inv(ci) % p);
        }
        long d2 = f.norm(order % p * f.inv(s_acc) % p);
        if (d2 < 1 || d2 > order) throw std::logic_error("character_degrees: bad lift");
        long d = 1;
        while (d * d < d2) ++d;
        if (d * d != d2) throw std::logic_error("character_degrees: d^2 not a square");
        degrees.push_back(static_cast<int>(d));
    }
    std::sort(degrees.begin(), degrees.end());
    long check = 0;
    for (int d : degrees) check += static_cast<long>(d) * d;
    if (check != order) throw std::logic_error("character_degrees: sum of squares mismatch");
    return degrees;
}

}  // namespace exalg
