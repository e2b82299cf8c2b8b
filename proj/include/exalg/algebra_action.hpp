#pragma once

#include "exalg/catalog.hpp"
#include "exalg/findim_algebra.hpp"
#include "exalg/gmodule.hpp"
#include "exalg/quantum_torus.hpp"

#include <random>

namespace exalg {

struct NotFreeOverFixed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Action of a finite group on a finite-dimensional algebra by algebra
/// automorphisms, one invertible matrix per group element. Construction
/// verifies the homomorphism property and the automorphism property of every
/// generator matrix on basis products (and multiplicativity of the table on
/// all pairs).
template <CoeffField K>
struct AlgebraAction {
    FinDimAlgebra<K> alg;
    GroupPtr grp;
    std::vector<Matrix<K>> mats;

    std::vector<K> apply(int g, const std::vector<K>& v) const { return mats[g].apply(v); }

    void validate() const {
        size_t d = alg.dim();
        if (mats.size() != grp->order()) throw std::domain_error("AlgebraAction: table size");
        // automorphism property on basis products, for generators
        for (const auto& gen : grp->generators()) {
            int g = grp->index_of(gen);
            for (size_t i = 0; i < d; ++i) {
                auto gi = apply(g, alg.basis_vec(i));
                for (size_t j = 0; j < d; ++j) {
                    auto gj = apply(g, alg.basis_vec(j));
                    if (alg.mul(gi, gj) != apply(g, alg.sc[i][j]))
                        throw std::domain_error("AlgebraAction: not an automorphism");
                }
            }
            if (apply(g, alg.unit_vec()) != alg.unit_vec())
                throw std::domain_error("AlgebraAction: unit not fixed");
        }
        // homomorphism: rho(g)rho(h) = rho(gh) on all pairs, via matrix action
        // on basis vectors
        for (size_t g = 0; g < grp->order(); ++g)
            for (size_t h = 0; h < grp->order(); ++h) {
                int gh = grp->mul(static_cast<int>(g), static_cast<int>(h));
                for (size_t i = 0; i < d; ++i) {
                    if (apply(static_cast<int>(g), apply(static_cast<int>(h), alg.basis_vec(i))) !=
                        apply(gh, alg.basis_vec(i)))
                        throw std::domain_error("AlgebraAction: not a homomorphism");
                }
            }
    }
};

/// Basis of the fixed subalgebra D^G (joint kernel of rho(g) - id), verified
/// closed under multiplication and containing the unit.
template <CoeffField K>
std::vector<std::vector<K>> fixed_subalgebra(const AlgebraAction<K>& act) {
    size_t d = act.alg.dim();
    std::vector<int> gen_idx;
    for (const auto& gen : act.grp->generators()) gen_idx.push_back(act.grp->index_of(gen));
    Matrix<K> stacked(d * std::max<size_t>(gen_idx.size(), 1), d, act.alg.zero);
    if (gen_idx.empty()) return {};  // trivial group handled by caller shortcut
    for (size_t t = 0; t < gen_idx.size(); ++t)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                K v = act.mats[gen_idx[t]].at(i, j);
                if (i == j) v = v - act.alg.zero.one_like();
                stacked.at(t * d + i, j) = v;
            }
    auto basis = stacked.kernel();
    // closure + unit membership via echelon reduction
    auto ech = echelon_basis(basis, act.alg.zero);
    auto contains = [&](const std::vector<K>& v) {
        auto res = echelon_reduce(v, ech);
        for (const auto& c : res)
            if (!c.is_zero()) return false;
        return true;
    };
    if (!contains(act.alg.unit_vec()))
        throw std::logic_error("fixed_subalgebra: unit not fixed");
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (!contains(act.alg.mul(a, b)))
                throw std::logic_error("fixed_subalgebra: not closed under product");
    return basis;
}

struct CanonicalMapReport {
    size_t dim_over_fixed = 0;   // dim_{D^G} D (freeness over D^G assumed in the models)
    size_t group_order = 0;
    size_t fixed_dim = 0;        // dim_Z D^G
    bool square = false;
    bool bijective = false;
    std::string method;          // "exact" or "specialization"
    std::vector<std::string> witness_points;
};

namespace detail {

// rank of a matrix over RatFunc<K0> by evaluation at random integer points;
// full rank at any point certifies generic full rank. Falls back to exact
// fraction-field elimination for small sizes.
template <CoeffField K0>
std::pair<bool, std::vector<std::string>> full_rank_by_specialization(
    const Matrix<RatFunc<K0>>& m, std::mt19937_64& rng, int attempts = 3) {
    std::vector<std::string> points;
    size_t n = std::min(m.rows(), m.cols());
    int nvars = m.zero().nvars();
    for (int t = 0; t < attempts; ++t) {
        std::vector<K0> point;
        std::string desc = "(";
        for (int v = 0; v < nvars; ++v) {
            long val = static_cast<long>(rng() % 2000001) - 1000000;
            K0 c = m.zero().num().proto().one_like();
            // scalar from integer
            K0 acc = c.zero_like();
            bool negative = val < 0;
            long a = negative ? -val : val;
            // build by doubling to keep it cheap for big values
            K0 base = c;
            while (a > 0) {
                if (a & 1) acc = acc + base;
                base = base + base;
                a >>= 1;
            }
            if (negative) acc = -acc;
            point.push_back(acc);
            desc += (v ? "," : "") + std::to_string(val);
        }
        desc += ")";
        bool ok = true;
        Matrix<K0> eval(m.rows(), m.cols(), point.empty() ? m.zero().num().proto() : point[0]);
        for (size_t i = 0; i < m.rows() && ok; ++i)
            for (size_t j = 0; j < m.cols(); ++j) {
                auto v = m.at(i, j).eval(point);
                if (!v) {
                    ok = false;  // denominator vanished, try another point
                    break;
                }
                eval.at(i, j) = *v;
            }
        if (!ok) {
            --t;
            continue;
        }
        points.push_back(desc);
        if (eval.rank() == n) return {true, points};
    }
    return {false, points};
}

}  // namespace detail

/// Canonical map check for D^G = Z (one-dimensional fixed subalgebra):
/// can: D (x)_{D^G} D -> D (x) Fun(G), (a, a') -> sum_g a (g.a') (x) delta_g.
/// Bijectivity fails structurally unless dim D = |G|; when the matrix is
/// square its rank is certified exactly over Q / Q(zeta), or by random
/// integer specialization over function fields (any full-rank point proves
/// generic full rank).
template <CoeffField K>
CanonicalMapReport canonical_map_check(const AlgebraAction<K>& act, std::mt19937_64& rng) {
    CanonicalMapReport rep;
    size_t d = act.alg.dim();
    rep.group_order = act.grp->order();
    if (act.grp->order() == 1) {
        // D (x)_D D = D and can is multiplication against delta_1
        rep.fixed_dim = d;
        rep.dim_over_fixed = 1;
        rep.square = true;
        rep.bijective = true;
        rep.method = "trivial";
        return rep;
    }
    rep.fixed_dim = fixed_subalgebra(act).size();
    if (rep.fixed_dim != 1)
        throw NotFreeOverFixed(
            "canonical_map_check: implemented for one-dimensional fixed subalgebra");
    rep.dim_over_fixed = d;
    // matrix of can on D (x) D: rows (k, g), cols (i, j)
    size_t rows = d * act.grp->order(), cols = d * d;
    rep.square = rows == cols;
    Matrix<K> m(rows, cols, act.alg.zero);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            for (size_t g = 0; g < act.grp->order(); ++g) {
                auto gj = act.apply(static_cast<int>(g), act.alg.basis_vec(j));
                auto prod = act.alg.mul(act.alg.basis_vec(i), gj);
                for (size_t k = 0; k < d; ++k)
                    m.at(k * act.grp->order() + g, i * d + j) = prod[k];
            }
        }
    if (!rep.square) {
        rep.bijective = false;
        rep.method = "dimension mismatch";
        return rep;
    }
    if constexpr (requires(const K& k) { k.num(); }) {
        auto [ok, pts] = detail::full_rank_by_specialization(m, rng);
        rep.witness_points = pts;
        if (ok) {
            rep.bijective = true;
            rep.method = "specialization";
        } else if (cols <= 256) {
            rep.bijective = m.rank() == cols;
            rep.method = "exact-fallback";
        } else {
            rep.bijective = false;
            rep.method = "probably-singular";
        }
    } else {
        rep.bijective = m.rank() == cols;
        rep.method = "exact";
    }
    return rep;
}

/// Character eigenspace dimensions for an abelian action. Reports both the
/// dimension over the base field Z and the multiplicity over D^G
/// (dim_Z of the eigenspace divided by dim_Z D^G).
struct IsotypicReport {
    std::vector<std::vector<long>> characters;  // tuples over the dual decomposition
    std::vector<size_t> dims_over_base;
    std::vector<size_t> mult_over_fixed;
    size_t fixed_dim = 0;
    bool regular_representation = false;  // all multiplicities over D^G equal 1
};

template <CoeffField K>
IsotypicReport isotypic_multiplicities(const AlgebraAction<K>& act, const Cyclotomic& zeta_proto) {
    if (!act.grp->is_abelian())
        throw Unsupported("isotypic_multiplicities: nonabelian actions out of scope");
    IsotypicReport rep;
    size_t d = act.alg.dim();
    // decompose G
    std::vector<int> all(act.grp->order());
    std::iota(all.begin(), all.end(), 0);
    auto st = abelian_decompose(act.grp, make_subgroup(act.grp, all));
    long n = st.ab.exponent();
    // scalar zeta_n inside K
    (void)zeta_proto;
    auto scalar_root = [&](long power) {
        // zeta_n^power as an element of K
        if constexpr (requires(const K& k) { k.num(); }) {
            using K0 = std::decay_t<decltype(std::declval<K>().num().proto())>;
            K0 proto = act.alg.zero.num().proto();
            if constexpr (std::is_same_v<K0, Cyclotomic>) {
                int e = proto.order();
                if (e % n != 0)
                    throw Unsupported("isotypic_multiplicities: base field lacks zeta_n");
                Cyclotomic z = Cyclotomic::zeta(e, power * (e / n));
                return K::constant(act.alg.zero.nvars(), z);
            } else {
                if (n > 2) throw Unsupported("isotypic_multiplicities: base field lacks zeta_n");
                K0 v = (power % n + n) % n == 0 ? proto.one_like() : -proto.one_like();
                return K::constant(act.alg.zero.nvars(), v);
            }
        } else {
            throw Unsupported("isotypic_multiplicities: unexpected base field");
        }
    };
    size_t fixed_dim =
        act.grp->order() == 1 ? d : fixed_subalgebra(act).size();
    rep.fixed_dim = fixed_dim;
    // characters = dual tuples
    long total = st.ab.size();
    rep.regular_representation = true;
    for (long chi = 0; chi < total; ++chi) {
        auto tup = st.ab.decode(chi);
        // eigenspace: intersection over basis generators of ker(rho(b_i) - chi(b_i))
        Matrix<K> stacked(d * st.ab.rank(), d, act.alg.zero);
        for (size_t t = 0; t < st.ab.rank(); ++t) {
            int g = st.basis[t];
            // chi(basis_t) = zeta_{n_t}^{tup[t]} = zeta_n^{tup[t] * n/n_t}
            auto ev = scalar_root(tup[t] * (n / st.ab.factors()[t]));
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) {
                    K v = act.mats[g].at(i, j);
                    if (i == j) v = v - ev;
                    stacked.at(t * d + i, j) = v;
                }
        }
        size_t dim = stacked.kernel().size();
        rep.characters.push_back(tup);
        rep.dims_over_base.push_back(dim);
        if (dim % fixed_dim != 0)
            throw std::logic_error("isotypic_multiplicities: eigenspace not free over D^G");
        rep.mult_over_fixed.push_back(dim / fixed_dim);
        if (dim / fixed_dim != 1) rep.regular_representation = false;
    }
    return rep;
}

/// Z_n x Z_n action on the quantum torus: the first factor scales x by
/// zeta, the second scales y by zeta.
inline AlgebraAction<QuantumTorus::K> torus_scaling_action(const QuantumTorus& qt) {
    using K = QuantumTorus::K;
    int n = qt.n;
    auto grp = builtin_group(n == 1 ? "Z1" : "Z" + std::to_string(n) + "xZ" + std::to_string(n));
    if (n == 1) grp = cyclic_group(1);
    AlgebraAction<K> act{qt.alg, grp, {}};
    size_t d = qt.alg.dim();
    act.mats.assign(grp->order(), Matrix<K>(d, d, qt.alg.zero));
    // exponents of the two generators on each element: decompose
    std::vector<int> all(grp->order());
    std::iota(all.begin(), all.end(), 0);
    auto st = abelian_decompose(grp, make_subgroup(grp, all));
    for (size_t g = 0; g < grp->order(); ++g) {
        auto tup = st.ab.decode(st.ab_of(static_cast<int>(g)));
        long p = st.ab.rank() >= 1 ? tup[0] : 0;
        long q = st.ab.rank() >= 2 ? tup[1] : 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Cyclotomic z = qt.zeta.pow(p * i + q * j);
                act.mats[g].at(qt.bidx(i, j), qt.bidx(i, j)) =
                    K::constant(2, z);
            }
    }
    act.validate();
    return act;
}

/// Z2 acting on the quantum torus at n = 2 by x -> -x only.
inline AlgebraAction<QuantumTorus::K> torus_x_sign_action(const QuantumTorus& qt) {
    using K = QuantumTorus::K;
    if (qt.n != 2) throw std::domain_error("torus_x_sign_action: n = 2 only");
    auto grp = cyclic_group(2);
    AlgebraAction<K> act{qt.alg, grp, {}};
    size_t d = qt.alg.dim();
    act.mats.assign(2, Matrix<K>(d, d, qt.alg.zero));
    for (size_t g = 0; g < 2; ++g) {
        bool flip = static_cast<int>(g) != grp->id();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Cyclotomic z = flip ? qt.zeta.pow(i) : qt.zeta.pow(0);
                act.mats[g].at(qt.bidx(i, j), qt.bidx(i, j)) = K::constant(2, z);
            }
    }
    act.validate();
    return act;
}

/// Conjugation action of the binary tetrahedral group on the rational
/// quaternions (basis 1, i, j, k).
inline AlgebraAction<RatFunc<Rational>> tetrahedral_conjugation_action() {
    using K = RatFunc<Rational>;
    const auto& bt = binary_tetrahedral_group();
    // quaternion algebra over Q as RatFunc<Rational> with zero variables
    K zero = K::zero(0, Rational());
    FinDimAlgebra<K> alg(zero);
    alg.basis = {"1", "i", "j", "k"};
    alg.unit = 0;
    alg.sc.assign(4, std::vector<std::vector<K>>(4, std::vector<K>(4, zero)));
    auto as_k = [&](const Rational& r) { return K::constant(0, r); };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            std::array<Rational, 4> qa{}, qb{};
            qa[a] = Rational(1);
            qb[b] = Rational(1);
            auto prod = quat_mul(qa, qb);
            for (int c = 0; c < 4; ++c)
                if (!prod[c].is_zero()) alg.sc[a][b][c] = as_k(prod[c]);
        }
    AlgebraAction<K> act{alg, bt.lg.group, {}};
    size_t n = bt.lg.group->order();
    act.mats.assign(n, Matrix<K>(4, 4, zero));
    for (size_t p = 0; p < n; ++p) {
        const auto& u = bt.coords[bt.lg.from_perm[p]];
        // u e_b u^-1; for unit quaternions u^-1 is the conjugate
        std::array<Rational, 4> uinv{u[0], -u[1], -u[2], -u[3]};
        for (int b = 0; b < 4; ++b) {
            std::array<Rational, 4> e{};
            e[b] = Rational(1);
            auto img = quat_mul(quat_mul(u, e), uinv);
            for (int r = 0; r < 4; ++r) act.mats[p].at(r, b) = as_k(img[r]);
        }
    }
    act.validate();
    return act;
}

}  // namespace exalg
