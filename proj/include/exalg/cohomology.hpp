#pragma once

#include "exalg/gmodule.hpp"
#include "exalg/solve_mod.hpp"

#include <optional>
#include <sstream>

namespace exalg {

/// Normalized 2-cocycle c: H x H -> A for a GModule; construction verifies
/// normalization and the cocycle identity on all |H|^3 triples.
struct Cocycle2 {
    GModule mod;
    std::vector<std::vector<long>> table;  // [h1][h2] -> ab element index

    long at(int h1, int h2) const { return table[h1][h2]; }

    void validate() const {
        const auto& g = *mod.grp;
        size_t n = g.order();
        if (table.size() != n) throw std::domain_error("Cocycle2: bad table");
        for (size_t h = 0; h < n; ++h)
            if (table[g.id()][h] != 0 || table[h][g.id()] != 0)
                throw std::domain_error("Cocycle2: not normalized");
        for (size_t h1 = 0; h1 < n; ++h1)
            for (size_t h2 = 0; h2 < n; ++h2)
                for (size_t h3 = 0; h3 < n; ++h3) {
                    // h1.c(h2,h3) - c(h1 h2, h3) + c(h1, h2 h3) - c(h1, h2) = 0
                    long v = mod.apply(static_cast<int>(h1), table[h2][h3]);
                    v = mod.ab.sub(v, table[g.mul(h1, h2)][h3]);
                    v = mod.ab.add(v, table[h1][g.mul(h2, h3)]);
                    v = mod.ab.sub(v, table[h1][h2]);
                    if (v != 0) throw std::domain_error("Cocycle2: identity fails");
                }
    }

    static Cocycle2 zero(GModule m) {
        size_t n = m.grp->order();
        Cocycle2 c{std::move(m), std::vector<std::vector<long>>(n, std::vector<long>(n, 0))};
        return c;
    }
};

/// Extension data extracted from a normal abelian subgroup A of G: the
/// quotient H = G/A, the conjugation module, the section s (least coset
/// representatives, s(1)=1), and the group-law cocycle
/// c(h1,h2) = s(h1) s(h2) s(h1 h2)^-1.
struct ExtensionData {
    GroupPtr g;
    Subgroup a;
    AbelianStructure astr;
    Quotient q;
    GModule conj;  // H acting on A by conjugation through the section
    Cocycle2 c;
};

inline ExtensionData cocycle_from_extension(const GroupPtr& g, const Subgroup& a) {
    if (!a.is_normal) throw NotNormal("cocycle_from_extension: A not normal");
    if (!a.is_abelian) throw NotAbelian("cocycle_from_extension: A not abelian");
    ExtensionData ext{g, a, abelian_decompose(g, a), quotient(g, a), GModule{nullptr, FinAb({1}), {}},
                      Cocycle2{GModule{nullptr, FinAb({1}), {}}, {}}};
    const auto& H = ext.q.group;
    size_t hn = H->order();
    // conjugation action of H on A in FinAb coordinates, via the section
    GModule conj{H, ext.astr.ab, {}};
    size_t k = ext.astr.ab.rank();
    conj.mats.resize(hn, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (size_t h = 0; h < hn; ++h) {
        int s = ext.q.section[h];
        for (size_t j = 0; j < k; ++j) {
            int img = g->conj(s, ext.astr.basis[j]);
            auto t = ext.astr.ab.decode(ext.astr.ab_of(img));
            for (size_t i = 0; i < k; ++i) conj.mats[h][i][j] = t[i];
        }
    }
    conj.validate();
    ext.conj = std::move(conj);
    // the cocycle
    std::vector<std::vector<long>> table(hn, std::vector<long>(hn, 0));
    for (size_t h1 = 0; h1 < hn; ++h1)
        for (size_t h2 = 0; h2 < hn; ++h2) {
            int s1 = ext.q.section[h1], s2 = ext.q.section[h2];
            int s12 = ext.q.section[H->mul(static_cast<int>(h1), static_cast<int>(h2))];
            int prod = g->mul(g->mul(s1, s2), g->inv(s12));
            table[h1][h2] = ext.astr.ab_of(prod);
        }
    ext.c = Cocycle2{ext.conj, std::move(table)};
    ext.c.validate();
    return ext;
}

/// Solves d(mu) = c for a 1-cochain mu (mu(1)=0), i.e.
/// h1.mu(h2) - mu(h1 h2) + mu(h1) = c(h1,h2), by one linear system mod
/// exp(A); equations for the i-th invariant factor are scaled by n/n_i.
/// Returns mu as ab indices per H element, or nullopt (NotACoboundary).
inline std::optional<std::vector<long>> coboundary_solve(const Cocycle2& c) {
    const auto& H = *c.mod.grp;
    const FinAb& A = c.mod.ab;
    size_t hn = H.order();
    size_t k = A.rank();
    long n = A.exponent();
    int id = H.id();
    // unknowns: mu(h) for h != 1, coordinates 0..k-1, each treated mod n
    std::vector<int> slot(hn, -1);
    int nslots = 0;
    for (size_t h = 0; h < hn; ++h)
        if (static_cast<int>(h) != id) slot[h] = nslots++;
    size_t cols = static_cast<size_t>(nslots) * k;
    ZMat M;
    std::vector<BigInt> rhs;
    for (size_t h1 = 0; h1 < hn; ++h1)
        for (size_t h2 = 0; h2 < hn; ++h2) {
            auto cvec = A.decode(c.at(static_cast<int>(h1), static_cast<int>(h2)));
            int h12 = H.mul(static_cast<int>(h1), static_cast<int>(h2));
            for (size_t i = 0; i < k; ++i) {
                long scale = n / A.factors()[i];
                std::vector<BigInt> row(cols, 0);
                // + h1 . mu(h2): row of action matrix
                if (slot[h2] >= 0)
                    for (size_t j = 0; j < k; ++j)
                        row[slot[h2] * k + j] += scale * c.mod.mats[h1][i][j];
                if (slot[h12] >= 0) row[slot[h12] * k + i] -= scale;
                if (slot[h1] >= 0) row[static_cast<size_t>(slot[h1]) * k + i] += scale;
                M.push_back(std::move(row));
                rhs.push_back(BigInt(scale * cvec[i]));
            }
        }
    auto sol = solve_mod(M, rhs, n);
    if (!sol) return std::nullopt;
    std::vector<long> mu(hn, 0);
    for (size_t h = 0; h < hn; ++h) {
        if (slot[h] < 0) continue;
        std::vector<long> t(k);
        for (size_t i = 0; i < k; ++i) t[i] = (*sol)[slot[h] * k + i] % A.factors()[i];
        mu[h] = A.encode(t);
    }
    // exact verification: d(mu) = c on all pairs
    for (size_t h1 = 0; h1 < hn; ++h1)
        for (size_t h2 = 0; h2 < hn; ++h2) {
            long v = c.mod.apply(static_cast<int>(h1), mu[h2]);
            v = A.sub(v, mu[H.mul(static_cast<int>(h1), static_cast<int>(h2))]);
            v = A.add(v, mu[h1]);
            if (v != c.at(static_cast<int>(h1), static_cast<int>(h2)))
                throw std::logic_error("coboundary_solve: verification failed");
        }
    return mu;
}

/// Group on pairs (a, h) with (a1,h1)(a2,h2) = (a1 + h1.a2 + c(h1,h2), h1 h2),
/// realized as a PermGroup through the regular representation. Associativity
/// is verified exhaustively by the closure itself; pair indexing maps are kept.
struct SemidirectGroup {
    GroupPtr group;
    FinAb ab;
    GroupPtr h;
    std::vector<int> pair_to_perm;              // a*|H|+hIdx -> perm element index
    std::vector<std::pair<long, int>> from_perm;  // perm element index -> (a, h)

    int of_pair(long a, int hidx) const { return pair_to_perm[a * static_cast<long>(h->order()) + hidx]; }
};

inline SemidirectGroup twisted_semidirect(const GModule& m, const Cocycle2& c) {
    const auto& H = *m.grp;
    long an = m.ab.size();
    size_t hn = H.order();
    size_t n = static_cast<size_t>(an) * hn;
    auto pidx = [&](long a, int h) { return static_cast<size_t>(a) * hn + h; };
    auto pmul = [&](size_t p, size_t q) {
        long a1 = static_cast<long>(p / hn);
        int h1 = static_cast<int>(p % hn);
        long a2 = static_cast<long>(q / hn);
        int h2 = static_cast<int>(q % hn);
        long a = m.ab.add(m.ab.add(a1, m.apply(h1, a2)), c.at(h1, h2));
        return pidx(a, H.mul(h1, h2));
    };
    // associativity, exhaustive
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            for (size_t r = 0; r < n; ++r)
                if (pmul(pmul(p, q), r) != pmul(p, pmul(q, r)))
                    throw std::logic_error("twisted_semidirect: associativity fails");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) table[p][q] = static_cast<int>(pmul(p, q));
    std::vector<std::string> labels(n);
    for (size_t p = 0; p < n; ++p) {
        std::ostringstream os;
        os << "(" << p / hn << "," << p % hn << ")";
        labels[p] = os.str();
    }
    // identity is the pair (0, 1): index 0 since the identity of H sorts first
    LabeledGroup lg = labeled_group_from_table(table, labels, "A_c:H");
    SemidirectGroup out{lg.group, m.ab, m.grp, {}, {}};
    out.pair_to_perm.resize(n);
    out.from_perm.resize(n);
    for (size_t p = 0; p < n; ++p) {
        out.pair_to_perm[p] = lg.to_perm[p];
        out.from_perm[lg.to_perm[p]] = {static_cast<long>(p / hn), static_cast<int>(p % hn)};
    }
    return out;
}

/// Group homomorphism given by an element table; multiplicativity and
/// injectivity are computed on construction.
struct GroupHom {
    GroupPtr src, tgt;
    std::vector<int> map;
    bool multiplicative = false;
    bool injective = false;

    void compute_flags() {
        multiplicative = true;
        for (size_t a = 0; a < src->order() && multiplicative; ++a)
            for (size_t b = 0; b < src->order(); ++b)
                if (map[src->mul(static_cast<int>(a), static_cast<int>(b))] !=
                    tgt->mul(map[a], map[b])) {
                    multiplicative = false;
                    break;
                }
        // kernel triviality
        injective = true;
        for (size_t a = 0; a < src->order(); ++a)
            if (map[a] == tgt->id() && static_cast<int>(a) != src->id()) injective = false;
    }
};

/// Composed Shapiro-lemma embedding G -> Fun(H, Z_n)^m x| H (untwisted).
struct ShapiroEmbedding {
    ExtensionData ext;
    GModule dual;                 // A^vee with the contragredient H-action
    int m = 0;                    // minimal module generators of A^vee
    std::vector<long> module_gens;
    long n = 1;                   // exp(A)
    GModule fun;                  // Fun(H, Z_n)^m as an H-module
    Cocycle2 pushed;              // psi^vee(c)
    std::vector<long> mu;         // trivializing cochain
    SemidirectGroup target;       // Fun(H,Z_n)^m x| H
    GroupHom hom;                 // the embedding
    // psi^vee: A -> Fun(H,Z_n)^m, as ab-index table
    std::vector<long> psi_dual;
};

/// Index layout of Fun(H, Z_n)^m: coordinate (i, h) at position i*|H| + h.
inline ShapiroEmbedding shapiro_embedding(const GroupPtr& g, const Subgroup& a) {
    ShapiroEmbedding out{cocycle_from_extension(g, a),
                         GModule{nullptr, FinAb({1}), {}},
                         0,
                         {},
                         1,
                         GModule{nullptr, FinAb({1}), {}},
                         Cocycle2{GModule{nullptr, FinAb({1}), {}}, {}},
                         {},
                         SemidirectGroup{nullptr, FinAb({1}), nullptr, {}, {}},
                         GroupHom{},
                         {}};
    const auto& H = out.ext.q.group;
    size_t hn = H->order();
    out.dual = dual_module(out.ext.conj);
    auto [m, gens] = min_module_generators(out.dual);
    out.m = std::max(m, 1);  // keep one copy even for the trivial module
    out.module_gens = gens;
    while (out.module_gens.size() < static_cast<size_t>(out.m)) out.module_gens.push_back(0);
    out.n = out.ext.astr.ab.exponent();

    // Fun(H, Z_n)^m with (h.f)(i, x) = f(i, h^-1 x): permutation action
    size_t fk = static_cast<size_t>(out.m) * hn;
    FinAb fun_ab(std::vector<long>(fk, out.n));
    GModule fun{H, fun_ab, {}};
    fun.mats.resize(hn, std::vector<std::vector<long>>(fk, std::vector<long>(fk, 0)));
    for (size_t h = 0; h < hn; ++h) {
        int hinv = H->inv(static_cast<int>(h));
        for (int i = 0; i < out.m; ++i)
            for (size_t x = 0; x < hn; ++x) {
                // coordinate (i, x) of h.f equals coordinate (i, h^-1 x) of f
                size_t row = static_cast<size_t>(i) * hn + x;
                size_t col = static_cast<size_t>(i) * hn + H->mul(hinv, static_cast<int>(x));
                fun.mats[h][row][col] = 1;
            }
    }
    fun.validate();
    out.fun = std::move(fun);

    // psi^vee(a)(i, x) = <x . f_i, a>  (pairing into Z_n)
    const FinAb& A = out.ext.astr.ab;
    out.psi_dual.resize(A.size());
    for (long aa = 0; aa < A.size(); ++aa) {
        std::vector<long> coords(fk, 0);
        for (int i = 0; i < out.m; ++i)
            for (size_t x = 0; x < hn; ++x) {
                long chi = out.dual.apply(static_cast<int>(x), out.module_gens[i]);
                coords[static_cast<size_t>(i) * hn + x] = A.pairing(chi, aa);
            }
        out.psi_dual[aa] = out.fun.ab.encode(coords);
    }
    // psi^vee is an injective H-module map; verify both properties
    {
        std::vector<bool> seen(out.fun.ab.size() < (1L << 20) ? out.fun.ab.size() : 0, false);
        for (long a1 = 0; a1 < A.size(); ++a1)
            for (long a2 = 0; a2 < A.size(); ++a2)
                if (out.fun.ab.add(out.psi_dual[a1], out.psi_dual[a2]) !=
                    out.psi_dual[A.add(a1, a2)])
                    throw std::logic_error("shapiro: psi^vee not additive");
        for (long a1 = 0; a1 < A.size(); ++a1)
            if (out.psi_dual[a1] == 0 && a1 != 0)
                throw std::logic_error("shapiro: psi^vee not injective");
        for (size_t h = 0; h < hn; ++h)
            for (long a1 = 0; a1 < A.size(); ++a1)
                if (out.psi_dual[out.ext.conj.apply(static_cast<int>(h), a1)] !=
                    out.fun.apply(static_cast<int>(h), out.psi_dual[a1]))
                    throw std::logic_error("shapiro: psi^vee not equivariant");
    }

    // push the cocycle through and trivialize (must succeed by Shapiro vanishing)
    std::vector<std::vector<long>> pushed(hn, std::vector<long>(hn, 0));
    for (size_t h1 = 0; h1 < hn; ++h1)
        for (size_t h2 = 0; h2 < hn; ++h2)
            pushed[h1][h2] = out.psi_dual[out.ext.c.at(static_cast<int>(h1), static_cast<int>(h2))];
    out.pushed = Cocycle2{out.fun, std::move(pushed)};
    out.pushed.validate();
    auto mu = coboundary_solve(out.pushed);
    if (!mu)
        throw std::logic_error(
            "shapiro_embedding: psi^vee(c) is not a coboundary; this contradicts the Shapiro "
            "vanishing H^2(H, Fun(H,Z_n)^m) = 0 and indicates a construction bug");
    out.mu = *mu;

    // untwisted target and the embedding g = a s(h) -> (psi^vee(a) + mu(h), h)
    out.target = twisted_semidirect(out.fun, Cocycle2::zero(out.fun));
    out.hom.src = g;
    out.hom.tgt = out.target.group;
    out.hom.map.resize(g->order());
    for (size_t x = 0; x < g->order(); ++x) {
        int h = out.ext.q.proj[x];
        int s = out.ext.q.section[h];
        int arep = g->mul(static_cast<int>(x), g->inv(s));
        long aval = out.ext.astr.ab_of(arep);
        long f = out.fun.ab.add(out.psi_dual[aval], out.mu[h]);
        out.hom.map[x] = out.target.of_pair(f, h);
    }
    out.hom.compute_flags();
    if (!out.hom.multiplicative || !out.hom.injective)
        throw std::logic_error("shapiro_embedding: embedding failed verification");
    // projection to H recovers the quotient map
    for (size_t x = 0; x < g->order(); ++x)
        if (out.target.from_perm[out.hom.map[x]].second != out.ext.q.proj[x])
            throw std::logic_error("shapiro_embedding: projection mismatch");
    return out;
}

}  // namespace exalg
