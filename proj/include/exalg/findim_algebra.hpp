#pragma once

#include "exalg/matrix.hpp"
#include "exalg/perm_group.hpp"

#include <optional>

namespace exalg {

/// Finite-dimensional associative unital algebra over a coefficient field,
/// presented by structure constants: sc[i][j] is the coefficient vector of
/// b_i * b_j in the basis.
template <CoeffField K>
struct FinDimAlgebra {
    std::vector<std::string> basis;
    int unit = 0;
    std::vector<std::vector<std::vector<K>>> sc;
    K zero;

    explicit FinDimAlgebra(const K& z) : zero(z.zero_like()) {}

    size_t dim() const { return basis.size(); }

    std::vector<K> zero_vec() const { return std::vector<K>(dim(), zero); }
    std::vector<K> basis_vec(size_t i) const {
        auto v = zero_vec();
        v[i] = zero.one_like();
        return v;
    }
    std::vector<K> unit_vec() const { return basis_vec(unit); }

    std::vector<K> mul(const std::vector<K>& x, const std::vector<K>& y) const {
        auto out = zero_vec();
        for (size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                K c = x[i] * y[j];
                for (size_t k = 0; k < dim(); ++k) {
                    if (sc[i][j][k].is_zero()) continue;
                    out[k] = out[k] + c * sc[i][j][k];
                }
            }
        }
        return out;
    }

    std::vector<K> add(std::vector<K> x, const std::vector<K>& y) const {
        for (size_t i = 0; i < dim(); ++i) x[i] = x[i] + y[i];
        return x;
    }

    Matrix<K> left_mult_matrix(const std::vector<K>& x) const {
        Matrix<K> m(dim(), dim(), zero);
        for (size_t j = 0; j < dim(); ++j) {
            auto col = mul(x, basis_vec(j));
            for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }
    Matrix<K> right_mult_matrix(const std::vector<K>& x) const {
        Matrix<K> m(dim(), dim(), zero);
        for (size_t j = 0; j < dim(); ++j) {
            auto col = mul(basis_vec(j), x);
            for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    /// Exhaustive associativity and unit checks; returns a witness triple on failure.
    std::optional<std::array<size_t, 3>> associativity_witness() const {
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j) {
                auto ij = sc[i][j];
                for (size_t k = 0; k < dim(); ++k) {
                    auto lhs = mul(ij, basis_vec(k));
                    auto rhs = mul(basis_vec(i), sc[j][k]);
                    if (lhs != rhs) return std::array<size_t, 3>{i, j, k};
                }
            }
        return std::nullopt;
    }
    bool check_associative() const { return !associativity_witness().has_value(); }
    bool check_unit() const {
        for (size_t i = 0; i < dim(); ++i) {
            if (mul(unit_vec(), basis_vec(i)) != basis_vec(i)) return false;
            if (mul(basis_vec(i), unit_vec()) != basis_vec(i)) return false;
        }
        return true;
    }

    /// Group algebra K[G] with basis indexed by group elements.
    static FinDimAlgebra group_algebra(const GroupPtr& g, const K& one) {
        FinDimAlgebra a(one);
        size_t n = g->order();
        a.basis.resize(n);
        for (size_t i = 0; i < n; ++i) a.basis[i] = "g" + std::to_string(i);
        a.unit = g->id();
        a.sc.assign(n, std::vector<std::vector<K>>(n, std::vector<K>(n, a.zero)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                a.sc[i][j][g->mul(static_cast<int>(i), static_cast<int>(j))] = one.one_like();
        return a;
    }

    /// Full matrix algebra Mat_n with the E_ij basis.
    static FinDimAlgebra matrix_algebra(int n, const K& one) {
        FinDimAlgebra a(one);
        size_t d = static_cast<size_t>(n) * n;
        a.basis.resize(d);
        a.sc.assign(d, std::vector<std::vector<K>>(d, std::vector<K>(d, a.zero)));
        auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a.basis[idx(i, j)] = "E" + std::to_string(i) + std::to_string(j);
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        if (j == k) a.sc[idx(i, j)][idx(k, l)][idx(i, l)] = one.one_like();
            }
        // unit = sum E_ii is not a basis element; extend by change of basis:
        // use basis E_ij but track unit as a vector is inconvenient, so instead
        // matrix algebras are wrapped with an explicit unit vector below.
        a.unit = -1;
        return a;
    }

    bool has_basis_unit() const { return unit >= 0; }
};

/// Direct sum with block-diagonal structure constants; the unit is the sum of
/// the component units, added as explicit data via unit_vector().
template <CoeffField K>
struct AlgebraWithUnit {
    FinDimAlgebra<K> alg;       // unit index may be -1
    std::vector<K> unit_vector;

    size_t dim() const { return alg.dim(); }
};

template <CoeffField K>
AlgebraWithUnit<K> matrix_algebra_with_unit(int n, const K& one) {
    AlgebraWithUnit<K> out{FinDimAlgebra<K>::matrix_algebra(n, one), {}};
    out.unit_vector = out.alg.zero_vec();
    for (int i = 0; i < n; ++i) out.unit_vector[static_cast<size_t>(i) * n + i] = one.one_like();
    return out;
}

template <CoeffField K>
AlgebraWithUnit<K> direct_sum(const AlgebraWithUnit<K>& a, const AlgebraWithUnit<K>& b) {
    AlgebraWithUnit<K> out{FinDimAlgebra<K>(a.alg.zero), {}};
    size_t da = a.dim(), db = b.dim(), d = da + db;
    out.alg.basis.resize(d);
    for (size_t i = 0; i < da; ++i) out.alg.basis[i] = "L" + a.alg.basis[i];
    for (size_t i = 0; i < db; ++i) out.alg.basis[da + i] = "R" + b.alg.basis[i];
    out.alg.unit = -1;
    out.alg.sc.assign(d, std::vector<std::vector<K>>(d, std::vector<K>(d, out.alg.zero)));
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < da; ++j)
            for (size_t k = 0; k < da; ++k) out.alg.sc[i][j][k] = a.alg.sc[i][j][k];
    for (size_t i = 0; i < db; ++i)
        for (size_t j = 0; j < db; ++j)
            for (size_t k = 0; k < db; ++k) out.alg.sc[da + i][da + j][da + k] = b.alg.sc[i][j][k];
    out.unit_vector = out.alg.zero_vec();
    for (size_t i = 0; i < da; ++i) out.unit_vector[i] = a.unit_vector[i];
    for (size_t i = 0; i < db; ++i) out.unit_vector[da + i] = b.unit_vector[i];
    return out;
}

}  // namespace exalg
