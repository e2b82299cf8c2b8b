#pragma once

#include "exalg/cyclotomic.hpp"
#include "exalg/findim_algebra.hpp"
#include "exalg/ratfunc.hpp"

namespace exalg {

/// Finite model of the degree-n quantum torus: the n^2-dimensional algebra
/// over Q(zeta_n)(s, t) with basis x^i y^j, relations y x = zeta^-1 x y,
/// x^n = s, y^n = t (s, t formal transcendentals standing for the central
/// powers). Exposes the basis indexing used by the action builders.
struct QuantumTorus {
    using K = RatFunc<Cyclotomic>;
    int n;
    FinDimAlgebra<K> alg;
    Cyclotomic zeta;

    int bidx(int i, int j) const { return i * n + j; }
};

inline QuantumTorus quantum_torus(int n) {
    using K = QuantumTorus::K;
    using P = MPoly<Cyclotomic>;
    Cyclotomic zeta = Cyclotomic::zeta(n);
    Cyclotomic czero = zeta.zero_like();
    const int nvars = 2;  // s = var 0, t = var 1
    QuantumTorus qt{n, FinDimAlgebra<K>(K::zero(nvars, czero)), zeta};
    auto& alg = qt.alg;
    alg.basis.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            alg.basis[qt.bidx(i, j)] = "x" + std::to_string(i) + "y" + std::to_string(j);
    alg.unit = 0;
    size_t d = alg.basis.size();
    alg.sc.assign(d, std::vector<std::vector<K>>(d, std::vector<K>(d, alg.zero)));
    P ps = P::variable(nvars, 0, zeta.one_like());
    P pt = P::variable(nvars, 1, zeta.one_like());
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < n; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    // (x^i1 y^j1)(x^i2 y^j2) = zeta^{-j1 i2} x^{i1+i2} y^{j1+j2}
                    Cyclotomic coeff = zeta.pow(-(static_cast<long>(j1) * i2));
                    P poly = P::constant(nvars, coeff);
                    int i = i1 + i2, j = j1 + j2;
                    if (i >= n) {
                        i -= n;
                        poly *= ps;
                    }
                    if (j >= n) {
                        j -= n;
                        poly *= pt;
                    }
                    alg.sc[qt.bidx(i1, j1)][qt.bidx(i2, j2)][qt.bidx(i, j)] = K(poly);
                }
    return qt;
}

/// Exact centralizer of {x, y}: basis of the kernel of [ad_x; ad_y].
inline std::vector<std::vector<QuantumTorus::K>> torus_center_basis(const QuantumTorus& qt) {
    using K = QuantumTorus::K;
    const auto& alg = qt.alg;
    size_t d = alg.dim();
    if (qt.n == 1) return {alg.unit_vec()};
    auto lx = alg.left_mult_matrix(alg.basis_vec(qt.bidx(1, 0)));
    auto rx = alg.right_mult_matrix(alg.basis_vec(qt.bidx(1, 0)));
    auto ly = alg.left_mult_matrix(alg.basis_vec(qt.bidx(0, 1)));
    auto ry = alg.right_mult_matrix(alg.basis_vec(qt.bidx(0, 1)));
    Matrix<K> stacked(2 * d, d, alg.zero);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            stacked.at(i, j) = lx.at(i, j) - rx.at(i, j);
            stacked.at(d + i, j) = ly.at(i, j) - ry.at(i, j);
        }
    return stacked.kernel();
}

/// x^i y^j is central iff i = j = 0 (mod n); exhaustive check over the basis.
inline bool torus_central_monomials_expected(const QuantumTorus& qt) {
    const auto& alg = qt.alg;
    auto x = alg.basis_vec(qt.n == 1 ? 0 : qt.bidx(1, 0));
    auto y = alg.basis_vec(qt.n == 1 ? 0 : qt.bidx(0, 1));
    for (int i = 0; i < qt.n; ++i)
        for (int j = 0; j < qt.n; ++j) {
            auto m = alg.basis_vec(qt.bidx(i, j));
            bool central = alg.mul(m, x) == alg.mul(x, m) && alg.mul(m, y) == alg.mul(y, m);
            if (central != (i == 0 && j == 0)) return false;
        }
    return true;
}

}  // namespace exalg
