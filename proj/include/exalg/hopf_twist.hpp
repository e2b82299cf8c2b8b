#pragma once

#include "exalg/cohomology.hpp"
#include "exalg/cyclotomic.hpp"
#include "exalg/matrix.hpp"
#include "exalg/yang_baxter.hpp"

#include <array>

namespace exalg {

/// Gamma = A^vee x| G built from a bijective cocycle: the dual module with
/// its contragredient action, the untwisted semidirect product, and the
/// embeddings of G and A^vee.
struct GammaGroup {
    BijCocycle coc;
    GModule dual;           // A^vee as a G-module
    SemidirectGroup sd;     // pairs (chi, g)
    int cyclo_order = 1;    // e = exp(A)

    GroupPtr group() const { return sd.group; }
    int emb_g(int g) const { return sd.of_pair(0, g); }
    int emb_chi(long chi) const { return sd.of_pair(chi, coc.mod.grp->id()); }
    long pair_chi(int gamma) const { return sd.from_perm[gamma].first; }
    int pair_g(int gamma) const { return sd.from_perm[gamma].second; }
};

inline GammaGroup build_gamma(const BijCocycle& c) {
    GammaGroup out{c, dual_module(c.mod), SemidirectGroup{nullptr, FinAb({1}), nullptr, {}, {}},
                   static_cast<int>(c.mod.ab.exponent())};
    out.sd = twisted_semidirect(out.dual, Cocycle2::zero(out.dual));
    return out;
}

/// Sparse element of k[Gamma]^(tensor arity), arity 1..3, coefficients in
/// Q(zeta_e). Keys are tuples of group element indices (-1 padding).
class TensorElement {
public:
    using Key = std::array<int, 3>;

    TensorElement(GroupPtr grp, int arity, int cyclo_order)
        : grp_(std::move(grp)), arity_(arity), e_(cyclo_order) {}

    int arity() const { return arity_; }
    int cyclo_order() const { return e_; }
    const GroupPtr& grp() const { return grp_; }
    const std::map<Key, Cyclotomic>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    static TensorElement unit(const GroupPtr& g, int arity, int e) {
        TensorElement t(g, arity, e);
        Key k{-1, -1, -1};
        for (int i = 0; i < arity; ++i) k[i] = g->id();
        t.add(k, Cyclotomic(e, Rational(1)));
        return t;
    }

    void add(const Key& k, const Cyclotomic& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement operator+(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, c);
        return r;
    }
    TensorElement operator-(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, -c);
        return r;
    }
    TensorElement operator*(const TensorElement& o) const {
        check(o);
        TensorElement r(grp_, arity_, e_);
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_) {
                Key k{-1, -1, -1};
                for (int i = 0; i < arity_; ++i) k[i] = grp_->mul(k1[i], k2[i]);
                r.add(k, c1 * c2);
            }
        return r;
    }
    TensorElement scale(const Cyclotomic& c) const {
        TensorElement r(grp_, arity_, e_);
        for (const auto& [k, v] : terms_) r.add(k, v * c);
        return r;
    }

    bool operator==(const TensorElement& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    /// Group-like coproduct applied to one leg: arity grows by 1, the chosen
    /// leg gamma becomes (gamma, gamma), legs after it shift right.
    TensorElement coproduct_leg(int leg) const {
        if (arity_ >= 3) throw std::domain_error("TensorElement: arity would exceed 3");
        TensorElement r(grp_, arity_ + 1, e_);
        for (const auto& [k, c] : terms_) {
            Key nk{-1, -1, -1};
            int j = 0;
            for (int i = 0; i < arity_; ++i) {
                if (i == leg) {
                    nk[j++] = k[i];
                    nk[j++] = k[i];
                } else {
                    nk[j++] = k[i];
                }
            }
            r.add(nk, c);
        }
        return r;
    }

    /// Counit applied to one leg (drops it): epsilon(gamma) = 1.
    TensorElement counit_leg(int leg) const {
        TensorElement r(grp_, arity_ - 1, e_);
        for (const auto& [k, c] : terms_) {
            Key nk{-1, -1, -1};
            int j = 0;
            for (int i = 0; i < arity_; ++i)
                if (i != leg) nk[j++] = k[i];
            r.add(nk, c);
        }
        return r;
    }

    /// Extends arity by an identity leg on the left or right (J x 1, 1 x J).
    TensorElement pad(bool left) const {
        if (arity_ >= 3) throw std::domain_error("TensorElement: arity would exceed 3");
        TensorElement r(grp_, arity_ + 1, e_);
        for (const auto& [k, c] : terms_) {
            Key nk{-1, -1, -1};
            if (left) {
                nk[0] = grp_->id();
                for (int i = 0; i < arity_; ++i) nk[i + 1] = k[i];
            } else {
                for (int i = 0; i < arity_; ++i) nk[i] = k[i];
                nk[arity_] = grp_->id();
            }
            r.add(nk, c);
        }
        return r;
    }

    TensorElement swap_legs() const {
        if (arity_ != 2) throw std::domain_error("TensorElement: swap needs arity 2");
        TensorElement r(grp_, 2, e_);
        for (const auto& [k, c] : terms_) r.add(Key{k[1], k[0], -1}, c);
        return r;
    }

private:
    void check(const TensorElement& o) const {
        if (arity_ != o.arity_ || e_ != o.e_)
            throw std::domain_error("TensorElement: shape mismatch");
    }

    GroupPtr grp_;
    int arity_;
    int e_;
    std::map<Key, Cyclotomic> terms_;
};

/// Delta idempotent 1_a = |A|^-1 sum_chi chi(a)^-1 chi inside k[Gamma],
/// with chi running over the embedded copy of A^vee.
inline TensorElement delta_idempotent_in_gamma(const GammaGroup& gg, long a) {
    const FinAb& A = gg.coc.mod.ab;
    int e = gg.cyclo_order;
    long n = A.exponent();
    TensorElement t(gg.group(), 1, e);
    Rational inv_size(1, A.size());
    for (long chi = 0; chi < A.size(); ++chi) {
        // chi(a)^-1 = zeta_n^{-pairing}
        long p = A.pairing(chi, a);
        Cyclotomic coeff = Cyclotomic::zeta(e, -(p * (e / n)));
        t.add({gg.emb_chi(chi), -1, -1}, coeff * inv_size);
    }
    return t;
}

/// Standalone delta idempotent over the group algebra of A^vee itself (for
/// the idempotent/orthogonality/completeness property tests).
struct DeltaIdempotents {
    std::vector<TensorElement> ones;  // indexed by a
    TensorElement total;

    DeltaIdempotents(GroupPtr grp, int e) : total(std::move(grp), 1, e) {}
};

inline DeltaIdempotents delta_idempotents(const GammaGroup& gg) {
    DeltaIdempotents out(gg.group(), gg.cyclo_order);
    const FinAb& A = gg.coc.mod.ab;
    for (long a = 0; a < A.size(); ++a) {
        auto t = delta_idempotent_in_gamma(gg, a);
        out.total = out.total + t;
        out.ones.push_back(std::move(t));
    }
    return out;
}

/// J = sum_g g (x) 1_pi(g) in k[Gamma] (x) k[Gamma].
inline TensorElement twist_element(const GammaGroup& gg) {
    int e = gg.cyclo_order;
    TensorElement j(gg.group(), 2, e);
    const auto& g = *gg.coc.mod.grp;
    for (size_t x = 0; x < g.order(); ++x) {
        auto idem = delta_idempotent_in_gamma(gg, gg.coc.pi[x]);
        int gx = gg.emb_g(static_cast<int>(x));
        for (const auto& [k, c] : idem.terms()) j.add({gx, k[0], -1}, c);
    }
    return j;
}

/// Sparse linear solve for a two-sided inverse: the unknown support is the
/// orbit block of the identity tensor under supp(J)^-1 supp(J); the candidate
/// is certified by exact multiplication on both sides.
inline std::optional<TensorElement> invert_tensor(const TensorElement& j, size_t block_budget = 4096) {
    const auto& g = *j.grp();
    int e = j.cyclo_order();
    int arity = j.arity();
    using Key = TensorElement::Key;
    Key idk{-1, -1, -1};
    for (int i = 0; i < arity; ++i) idk[i] = g.id();
    // orbit closure of the identity under t^-1 * (t' * .)
    std::set<Key> unknowns{idk};
    while (true) {
        std::set<Key> grown = unknowns;
        for (const auto& [t1, c1] : j.terms())
            for (const auto& [t2, c2] : j.terms()) {
                for (const auto& u : unknowns) {
                    Key k{-1, -1, -1};
                    for (int i = 0; i < arity; ++i)
                        k[i] = g.mul(g.inv(t1[i]), g.mul(t2[i], u[i]));
                    grown.insert(k);
                    if (grown.size() > block_budget)
                        throw BudgetExceeded("invert_tensor: orbit block too large");
                }
            }
        if (grown.size() == unknowns.size()) break;
        unknowns = std::move(grown);
    }
    std::vector<Key> cols(unknowns.begin(), unknowns.end());
    std::map<Key, size_t> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);
    // rows: supp(J) * unknowns
    std::map<Key, size_t> row_of;
    std::vector<Key> rows;
    for (const auto& [t, c] : j.terms())
        for (const auto& u : cols) {
            Key k{-1, -1, -1};
            for (int i = 0; i < arity; ++i) k[i] = g.mul(t[i], u[i]);
            if (row_of.emplace(k, rows.size()).second) rows.push_back(k);
        }
    Cyclotomic cz(e);
    Matrix<Cyclotomic> m(rows.size(), cols.size(), cz);
    for (const auto& [t, c] : j.terms())
        for (size_t uc = 0; uc < cols.size(); ++uc) {
            Key k{-1, -1, -1};
            for (int i = 0; i < arity; ++i) k[i] = g.mul(t[i], cols[uc][i]);
            m.at(row_of[k], uc) = m.at(row_of[k], uc) + c;
        }
    std::vector<Cyclotomic> rhs(rows.size(), cz);
    auto it = row_of.find(idk);
    if (it == row_of.end()) return std::nullopt;
    rhs[it->second] = Cyclotomic(e, Rational(1));
    auto sol = m.solve(rhs);
    if (!sol) return std::nullopt;
    TensorElement inv(j.grp(), arity, e);
    for (size_t i = 0; i < cols.size(); ++i) inv.add(cols[i], (*sol)[i]);
    // certify two-sided
    TensorElement one = TensorElement::unit(j.grp(), arity, e);
    if (!(j * inv == one) || !(inv * j == one)) return std::nullopt;
    return inv;
}

struct TwistReport {
    bool invertible = false;
    bool cocycle_ok = false;     // (Delta x id)(J)(J x 1) = (id x Delta)(J)(1 x J)
    bool counit_ok = false;      // (eps x id)J = (id x eps)J = 1
    std::optional<TensorElement> inverse;
    std::optional<TensorElement::Key> cocycle_witness;
    bool ok() const { return invertible && cocycle_ok && counit_ok; }
};

inline TwistReport verify_twist(const TensorElement& j) {
    if (j.arity() != 2) throw std::domain_error("verify_twist: arity 2 required");
    TwistReport rep;
    rep.inverse = invert_tensor(j);
    rep.invertible = rep.inverse.has_value();
    auto lhs = j.coproduct_leg(0) * j.pad(false);
    auto rhs = j.coproduct_leg(1) * j.pad(true);
    rep.cocycle_ok = lhs == rhs;
    if (!rep.cocycle_ok) {
        auto diff = lhs - rhs;
        rep.cocycle_witness = diff.terms().begin()->first;
    }
    int e = j.cyclo_order();
    TensorElement one1 = TensorElement::unit(j.grp(), 1, e);
    rep.counit_ok = j.counit_leg(0) == one1 && j.counit_leg(1) == one1;
    return rep;
}

/// Twisted coproducts Delta^J(gamma) = J (gamma x gamma) J^-1 for every
/// group basis element, with coassociativity / cocommutativity scans.
struct TwistedCoproduct {
    TensorElement j;
    TensorElement jinv;
    std::vector<TensorElement> delta;  // per Gamma element index

    TwistedCoproduct(TensorElement jj, TensorElement ji)
        : j(std::move(jj)), jinv(std::move(ji)) {}

    const TensorElement& of(int gamma) const { return delta[gamma]; }

    /// Delta^J applied to leg `leg` of an arity-2 element (for coassociativity).
    TensorElement apply_to_leg(const TensorElement& t, int leg) const {
        TensorElement out(j.grp(), 3, j.cyclo_order());
        for (const auto& [k, c] : t.terms()) {
            const TensorElement& d = delta[k[leg]];
            for (const auto& [dk, dc] : d.terms()) {
                TensorElement::Key nk{-1, -1, -1};
                if (leg == 0) {
                    nk = {dk[0], dk[1], k[1]};
                } else {
                    nk = {k[0], dk[0], dk[1]};
                }
                out.add(nk, c * dc);
            }
        }
        return out;
    }
};

inline TwistedCoproduct twisted_coproduct(const TensorElement& j) {
    auto inv = invert_tensor(j);
    if (!inv) throw NotCertified("twisted_coproduct: J not invertible");
    TwistedCoproduct out(j, *inv);
    const auto& g = *j.grp();
    int e = j.cyclo_order();
    out.delta.reserve(g.order());
    for (size_t x = 0; x < g.order(); ++x) {
        TensorElement gx(j.grp(), 2, e);
        gx.add({static_cast<int>(x), static_cast<int>(x), -1}, Cyclotomic(e, Rational(1)));
        out.delta.push_back(j * gx * *inv);
    }
    return out;
}

struct CoassocReport {
    bool coassociative = true;
    bool cocommutative = true;
    std::optional<int> coassoc_witness;
    std::optional<int> cocomm_witness;
};

inline CoassocReport check_coassociativity(const TwistedCoproduct& tc) {
    CoassocReport rep;
    const auto& g = *tc.j.grp();
    for (size_t x = 0; x < g.order(); ++x) {
        auto l = tc.apply_to_leg(tc.delta[x], 0);
        auto r = tc.apply_to_leg(tc.delta[x], 1);
        if (!(l == r)) {
            rep.coassociative = false;
            if (!rep.coassoc_witness) rep.coassoc_witness = static_cast<int>(x);
        }
        if (!(tc.delta[x].swap_legs() == tc.delta[x])) {
            rep.cocommutative = false;
            if (!rep.cocomm_witness) rep.cocomm_witness = static_cast<int>(x);
        }
    }
    return rep;
}

}  // namespace exalg
