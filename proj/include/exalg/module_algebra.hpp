#pragma once

#include "exalg/hopf_twist.hpp"

namespace exalg {

/// Monomial action of a Gamma element (chi, g) on a letter: b_x maps to
/// chi(phi(g.x)) b_{g.x}.
struct LetterAction {
    const GammaGroup* gg;
    const SymmetricSet* x;

    std::pair<int, Cyclotomic> apply(int gamma, int letter) const {
        long chi = gg->pair_chi(gamma);
        int g = gg->pair_g(gamma);
        const FinAb& a = gg->coc.mod.ab;
        int img = x->action[g][letter];
        long p = a.pairing(chi, x->phi[img]);
        long e = gg->cyclo_order;
        long n = a.exponent();
        return {img, Cyclotomic::zeta(static_cast<int>(e), p * (e / n))};
    }
};

/// Sparse vector in the degree-d word space, reduced to canonical components
/// of a WordQuotient: map canonical-word-code -> coefficient.
using QuotientVec = std::map<int64_t, Cyclotomic>;

namespace detail {

// Apply an arity-d tensor operator letterwise to a single word, reducing into
// quotient components.
inline QuotientVec apply_op_to_word(const TensorElement& op, const LetterAction& act,
                                    const WordQuotient& wq, const std::vector<int>& word) {
    int d = static_cast<int>(word.size());
    QuotientVec out;
    for (const auto& [k, c] : op.terms()) {
        Cyclotomic coeff = c;
        std::vector<int> img(d);
        for (int i = 0; i < d; ++i) {
            auto [letter, scale] = act.apply(k[i], word[i]);
            img[i] = letter;
            coeff *= scale;
        }
        int64_t code = wq.find(d, wq.encode(img));
        auto it = out.find(code);
        if (it == out.end()) {
            out.emplace(code, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// Iterated twisted coproduct of a single group element, arity d in {1,2,3}.
inline TensorElement delta_iter(const TwistedCoproduct& tc, int gamma, int d) {
    int e = tc.j.cyclo_order();
    if (d == 1) {
        TensorElement t(tc.j.grp(), 1, e);
        t.add({gamma, -1, -1}, Cyclotomic(e, Rational(1)));
        return t;
    }
    if (d == 2) return tc.delta[gamma];
    return tc.apply_to_leg(tc.delta[gamma], 0);
}

}  // namespace detail

struct ModuleAlgebraReport {
    bool relations_stable = true;    // Delta^J(gamma) preserves the degree-2 relation space
    bool axiom_ok = true;            // gamma(uv) = sum (gamma_1 u)(gamma_2 v) in the quotient
    std::optional<std::string> witness;
    bool ok() const { return relations_stable && axiom_ok; }
};

/// Module-algebra verification for the Gamma-action on the R-quotient word
/// spaces up to degree N. The degree-2 relation space is checked stable under
/// every Delta^J(gamma) (this is the well-definedness of the action on B and
/// propagates to all degrees since the relation ideal is generated in degree
/// 2); then the axiom gamma.(uv) = sum (gamma_(1) u)(gamma_(2) v) is checked
/// for all group-basis gamma and canonical word pairs with deg u + deg v <= N,
/// all equalities in the quotient.
inline ModuleAlgebraReport module_algebra_check(const GammaGroup& gg, const SymmetricSet& x,
                                                const TwistedCoproduct& tc, int maxdeg,
                                                bool flip_relations = false,
                                                long budget = 100000) {
    ModuleAlgebraReport rep;
    const auto& gamma = *gg.group();
    int e = gg.cyclo_order;
    int nx = static_cast<int>(x.size());
    LetterAction act{&gg, &x};

    // quadratic algebra: derived relations, or the free-commutative control
    QuadraticAlgebra qa;
    if (flip_relations) {
        qa.nx = nx;
        for (int a = 0; a < nx; ++a)
            for (int b = a + 1; b < nx; ++b) qa.relations.push_back({{a, b}, {b, a}});
    } else {
        qa = quadratic_algebra(x);
    }
    WordQuotient wq = word_quotient(qa, maxdeg, budget);

    // (a) degree-2 relation-space stability under Delta^J
    {
        Cyclotomic cz(e);
        size_t dim2 = static_cast<size_t>(nx) * nx;
        std::vector<std::vector<Cyclotomic>> rel_rows;
        for (const auto& rel : qa.relations) {
            std::vector<Cyclotomic> row(dim2, cz);
            row[static_cast<size_t>(rel.first.first) * nx + rel.first.second] =
                Cyclotomic(e, Rational(1));
            row[static_cast<size_t>(rel.second.first) * nx + rel.second.second] =
                Cyclotomic(e, Rational(-1));
            rel_rows.push_back(std::move(row));
        }
        auto basis = echelon_basis(rel_rows, cz);
        for (size_t gi = 0; gi < gamma.order() && rep.relations_stable; ++gi) {
            const TensorElement& d = tc.delta[gi];
            for (const auto& rel : qa.relations) {
                // Delta^J(gamma) . (w - R(w)) as a raw degree-2 vector
                std::vector<Cyclotomic> v(dim2, cz);
                for (const auto& [k, c] : d.terms()) {
                    auto [l1, s1] = act.apply(k[0], rel.first.first);
                    auto [l2, s2] = act.apply(k[1], rel.first.second);
                    size_t p = static_cast<size_t>(l1) * nx + l2;
                    v[p] = v[p] + c * s1 * s2;
                    auto [m1, t1] = act.apply(k[0], rel.second.first);
                    auto [m2, t2] = act.apply(k[1], rel.second.second);
                    size_t q = static_cast<size_t>(m1) * nx + m2;
                    v[q] = v[q] - c * t1 * t2;
                }
                auto residue = echelon_reduce(std::move(v), basis);
                bool zero = true;
                for (const auto& c : residue)
                    if (!c.is_zero()) zero = false;
                if (!zero) {
                    rep.relations_stable = false;
                    rep.witness = "Delta^J(gamma_" + std::to_string(gi) +
                                  ") leaves the relation space at relation (" +
                                  std::to_string(rel.first.first) + "," +
                                  std::to_string(rel.first.second) + ")";
                    break;
                }
            }
        }
    }

    // (b) the axiom on canonical pairs
    for (size_t gi = 0; gi < gamma.order() && rep.axiom_ok; ++gi) {
        for (int du = 1; du < maxdeg && rep.axiom_ok; ++du) {
            for (int dv = 1; du + dv <= maxdeg && rep.axiom_ok; ++dv) {
                int d = du + dv;
                auto full = detail::delta_iter(tc, static_cast<int>(gi), d);
                for (int64_t cu : wq.canon[du]) {
                    auto wu = wq.decode(cu, du);
                    for (int64_t cv : wq.canon[dv]) {
                        auto wv = wq.decode(cv, dv);
                        // lhs: gamma . (canonical representative of u*v)
                        std::vector<int> uv = wu;
                        uv.insert(uv.end(), wv.begin(), wv.end());
                        auto lhs = detail::apply_op_to_word(
                            full, act, wq, wq.decode(wq.find(d, wq.encode(uv)), d));
                        // rhs: sum over Delta^J(gamma) of (g1.u)(g2.v), products
                        // reduced in the quotient
                        QuotientVec rhs;
                        for (const auto& [k, c] : tc.delta[gi].terms()) {
                            auto vu = detail::apply_op_to_word(
                                detail::delta_iter(tc, k[0], du), act, wq, wu);
                            auto vv = detail::apply_op_to_word(
                                detail::delta_iter(tc, k[1], dv), act, wq, wv);
                            for (const auto& [r1, c1] : vu)
                                for (const auto& [r2, c2] : vv) {
                                    auto w1 = wq.decode(r1, du);
                                    auto w2 = wq.decode(r2, dv);
                                    w1.insert(w1.end(), w2.begin(), w2.end());
                                    int64_t code = wq.find(d, wq.encode(w1));
                                    Cyclotomic add = c * c1 * c2;
                                    auto it = rhs.find(code);
                                    if (it == rhs.end()) {
                                        rhs.emplace(code, add);
                                    } else {
                                        it->second += add;
                                        if (it->second.is_zero()) rhs.erase(it);
                                    }
                                }
                        }
                        if (!(lhs == rhs)) {
                            rep.axiom_ok = false;
                            rep.witness = "axiom fails at gamma_" + std::to_string(gi) +
                                          ", deg(u)=" + std::to_string(du) +
                                          ", deg(v)=" + std::to_string(dv);
                            break;
                        }
                    }
                    if (!rep.axiom_ok) break;
                }
            }
        }
    }
    return rep;
}

/// Degree-2 convention lock: the span of {w - R(w)} must equal J . Lambda^2,
/// the twist image of the antisymmetric square (the kernel of the twisted
/// symmetric multiplication). Returns true when the subspaces coincide.
inline bool relations_match_twisted_kernel(const GammaGroup& gg, const SymmetricSet& x,
                                           const TensorElement& j) {
    int e = gg.cyclo_order;
    int nx = static_cast<int>(x.size());
    size_t dim2 = static_cast<size_t>(nx) * nx;
    Cyclotomic cz(e);
    LetterAction act{&gg, &x};
    auto qa = quadratic_algebra(x);

    std::vector<std::vector<Cyclotomic>> rel_rows;
    for (const auto& rel : qa.relations) {
        std::vector<Cyclotomic> row(dim2, cz);
        row[static_cast<size_t>(rel.first.first) * nx + rel.first.second] =
            Cyclotomic(e, Rational(1));
        row[static_cast<size_t>(rel.second.first) * nx + rel.second.second] =
            Cyclotomic(e, Rational(-1));
        rel_rows.push_back(std::move(row));
    }
    std::vector<std::vector<Cyclotomic>> twist_rows;
    for (int a = 0; a < nx; ++a)
        for (int b = a + 1; b < nx; ++b) {
            std::vector<Cyclotomic> row(dim2, cz);
            for (const auto& [k, c] : j.terms()) {
                auto [l1, s1] = act.apply(k[0], a);
                auto [l2, s2] = act.apply(k[1], b);
                size_t p = static_cast<size_t>(l1) * nx + l2;
                row[p] = row[p] + c * s1 * s2;
                auto [m1, t1] = act.apply(k[0], b);
                auto [m2, t2] = act.apply(k[1], a);
                size_t q = static_cast<size_t>(m1) * nx + m2;
                row[q] = row[q] - c * t1 * t2;
            }
            twist_rows.push_back(std::move(row));
        }
    auto b1 = echelon_basis(rel_rows, cz);
    auto b2 = echelon_basis(twist_rows, cz);
    if (b1.size() != b2.size()) return false;
    for (const auto& r : b2) {
        auto res = echelon_reduce(r, b1);
        for (const auto& c : res)
            if (!c.is_zero()) return false;
    }
    return true;
}

}  // namespace exalg
