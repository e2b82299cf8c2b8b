#pragma once

#include "exalg/mpoly.hpp"

#include <optional>
#include <vector>

namespace exalg {

/// Dense matrix over an exact coefficient field. All operations (rank, solve,
/// kernel, determinant) are exact Gaussian elimination with first-nonzero
/// pivoting, so results are deterministic.
template <CoeffField K>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const K& zero)
        : rows_(rows), cols_(cols), zero_(zero.zero_like()), a_(rows * cols, zero_) {}

    static Matrix identity(size_t n, const K& one) {
        Matrix m(n, n, one.zero_like());
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one.one_like();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const K& zero() const { return zero_; }

    K& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        Matrix r(rows_, o.cols_, zero_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const K& x = at(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + x * o.at(k, j);
                }
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        std::vector<K> r(rows_, zero_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// Row-reduces in place; returns pivot columns.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t p = r;
            while (p < rows_ && at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            K inv = at(r, c).inv();
            for (size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                K f = at(i, c);
                for (size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    K det() const {
        if (rows_ != cols_) throw std::domain_error("Matrix: det of non-square");
        Matrix m = *this;
        K d = zero_.one_like();
        for (size_t c = 0; c < cols_; ++c) {
            size_t p = c;
            while (p < rows_ && m.at(p, c).is_zero()) ++p;
            if (p == rows_) return zero_;
            if (p != c) {
                for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
                d = -d;
            }
            d = d * m.at(c, c);
            K inv = m.at(c, c).inv();
            for (size_t i = c + 1; i < rows_; ++i) {
                if (m.at(i, c).is_zero()) continue;
                K f = m.at(i, c) * inv;
                for (size_t j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
            }
        }
        return d;
    }

    /// Any exact solution of (this) x = b, or nullopt when inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        Matrix aug(rows_, cols_ + 1, zero_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> x(cols_, zero_);
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

    /// Solves (this) x = b for many right-hand sides with one elimination;
    /// entry k of the result is empty when system k is inconsistent.
    std::vector<std::optional<std::vector<K>>> solve_many(
        const std::vector<std::vector<K>>& bs) const {
        size_t nb = bs.size();
        Matrix aug(rows_, cols_ + nb, zero_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            for (size_t k = 0; k < nb; ++k) aug.at(i, cols_ + k) = bs[k][i];
        }
        // eliminate on the coefficient block only
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t p = r;
            while (p < rows_ && aug.at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (size_t j = 0; j < aug.cols_; ++j) std::swap(aug.at(p, j), aug.at(r, j));
            K inv = aug.at(r, c).inv();
            for (size_t j = c; j < aug.cols_; ++j) aug.at(r, j) = aug.at(r, j) * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || aug.at(i, c).is_zero()) continue;
                K f = aug.at(i, c);
                for (size_t j = c; j < aug.cols_; ++j)
                    aug.at(i, j) = aug.at(i, j) - f * aug.at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        std::vector<std::optional<std::vector<K>>> out(nb);
        for (size_t k = 0; k < nb; ++k) {
            bool consistent = true;
            for (size_t i = r; i < rows_ && consistent; ++i)
                if (!aug.at(i, cols_ + k).is_zero()) consistent = false;
            if (!consistent) continue;
            std::vector<K> x(cols_, zero_);
            for (size_t rr = 0; rr < pivots.size(); ++rr) x[pivots[rr]] = aug.at(rr, cols_ + k);
            out[k] = std::move(x);
        }
        return out;
    }

    /// Basis of the right kernel.
    std::vector<std::vector<K>> kernel() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<K> v(cols_, zero_);
            v[c] = zero_.one_like();
            for (size_t r = 0; r < pivots.size(); ++r) {
                if (pivots[r] < c) v[pivots[r]] = -m.at(r, c);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

private:
    size_t rows_, cols_;
    K zero_;
    std::vector<K> a_;
};

/// Row-reduce a list of vectors to an independent spanning subset (a basis of
/// their span, echelonized). Returns the echelon basis.
template <CoeffField K>
std::vector<std::vector<K>> echelon_basis(std::vector<std::vector<K>> vecs, const K& zero) {
    std::vector<std::vector<K>> basis;     // echelonized rows
    std::vector<size_t> lead;              // leading index per row
    for (auto& v : vecs) {
        for (size_t r = 0; r < basis.size(); ++r) {
            if (v[lead[r]].is_zero()) continue;
            K f = v[lead[r]];
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * basis[r][j];
        }
        size_t l = 0;
        while (l < v.size() && v[l].is_zero()) ++l;
        if (l == v.size()) continue;
        K inv = v[l].inv();
        for (size_t j = l; j < v.size(); ++j) v[j] = v[j] * inv;
        basis.push_back(v);
        lead.push_back(l);
    }
    return basis;
}

/// Reduce v against an echelon basis; returns the residue.
template <CoeffField K>
std::vector<K> echelon_reduce(std::vector<K> v, const std::vector<std::vector<K>>& basis) {
    for (const auto& row : basis) {
        size_t l = 0;
        while (l < row.size() && row[l].is_zero()) ++l;
        if (l == row.size() || v[l].is_zero()) continue;
        K f = v[l];
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * row[j];
    }
    return v;
}

}  // namespace exalg
