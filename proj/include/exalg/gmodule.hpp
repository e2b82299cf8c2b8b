#pragma once

#include "exalg/finab.hpp"
#include "exalg/perm_group.hpp"

#include <random>

namespace exalg {

/// Finite abelian group with an action of a finite group, given per group
/// element by an integer matrix acting on invariant-factor coordinates
/// (row i taken mod n_i). The assignment must be a homomorphism and every
/// matrix invertible mod the factors; construction verifies both.
struct GModule {
    GroupPtr grp;
    FinAb ab;
    // mats[g][i][j]: coefficient of x_j in row i of the action of group element g
    std::vector<std::vector<std::vector<long>>> mats;

    long apply(int g, long a) const {
        const auto& m = mats[g];
        auto x = ab.decode(a);
        std::vector<long> y(ab.rank(), 0);
        for (size_t i = 0; i < ab.rank(); ++i) {
            long acc = 0;
            long ni = ab.factors()[i];
            for (size_t j = 0; j < ab.rank(); ++j) acc = (acc + m[i][j] % ni * x[j]) % ni;
            y[i] = acc < 0 ? acc + ni : acc;
        }
        return ab.encode(y);
    }

    static GModule trivial(GroupPtr g, FinAb a) {
        GModule m{std::move(g), std::move(a), {}};
        size_t k = m.ab.rank();
        std::vector<std::vector<long>> id(k, std::vector<long>(k, 0));
        for (size_t i = 0; i < k; ++i) id[i][i] = 1;
        m.mats.assign(m.grp->order(), id);
        return m;
    }

    /// Homomorphism + invertibility check; exhaustive on generators plus a
    /// seeded sample of products, as bijectivity of each element map.
    void validate(unsigned seed = 0) const {
        if (mats.size() != grp->order()) throw std::domain_error("GModule: bad table size");
        for (size_t g = 0; g < grp->order(); ++g) {
            std::vector<bool> seen(ab.size(), false);
            for (long a = 0; a < ab.size(); ++a) {
                long im = apply(static_cast<int>(g), a);
                if (seen[im]) throw std::domain_error("GModule: action matrix not invertible");
                seen[im] = true;
            }
        }
        auto check_pair = [&](int g, int h) {
            int gh = grp->mul(g, h);
            for (long a = 0; a < ab.size(); ++a)
                if (apply(gh, a) != apply(g, apply(h, a)))
                    throw std::domain_error("GModule: action is not a homomorphism");
        };
        for (const auto& gen : grp->generators()) {
            int g = grp->index_of(gen);
            for (size_t h = 0; h < grp->order(); ++h) check_pair(g, static_cast<int>(h));
        }
        std::mt19937_64 rng(seed);
        size_t samples = std::min<size_t>(64, grp->order() * grp->order());
        for (size_t t = 0; t < samples; ++t)
            check_pair(static_cast<int>(rng() % grp->order()),
                       static_cast<int>(rng() % grp->order()));
        if (apply(grp->id(), 1 % ab.size()) != 1 % ab.size())
            throw std::domain_error("GModule: identity acts nontrivially");
    }
};

/// Contragredient module A^vee: same invariant factors, action determined by
/// <g.y, x> = <y, g^-1.x> (inverse-transpose when all factors coincide).
inline GModule dual_module(const GModule& m) {
    GModule d{m.grp, m.ab, {}};
    size_t k = m.ab.rank();
    long n = m.ab.exponent();
    d.mats.resize(m.grp->order());
    for (size_t g = 0; g < m.grp->order(); ++g) {
        int ginv = m.grp->inv(static_cast<int>(g));
        std::vector<std::vector<long>> mat(k, std::vector<long>(k, 0));
        for (size_t j = 0; j < k; ++j) {
            // image of the j-th dual generator e_j^vee
            for (size_t col = 0; col < k; ++col) {
                // coordinate `col` of the image: determined by pairing with e_col
                long r = 0;
                // <e_j^vee, g^-1 e_col> = (n/n_j) * (M(g^-1) e_col)_j
                long entry = m.mats[ginv][j][col] % m.ab.factors()[j];
                if (entry < 0) entry += m.ab.factors()[j];
                r = (n / m.ab.factors()[j]) * entry % n;
                // solve (n/n_col) * y = r mod n for y mod n_col
                long scale = n / m.ab.factors()[col];
                if (r % scale != 0) throw std::logic_error("dual_module: pairing not divisible");
                mat[col][j] = (r / scale) % m.ab.factors()[col];
            }
        }
        d.mats[g] = std::move(mat);
    }
    d.validate();
    // double dual is naturally the original: check via the pairing
    for (size_t g = 0; g < m.grp->order(); ++g) {
        for (long y = 0; y < m.ab.size(); ++y)
            for (long x = 0; x < m.ab.size(); ++x) {
                long lhs = m.ab.pairing(d.apply(static_cast<int>(g), y), x);
                long rhs = m.ab.pairing(y, m.apply(m.grp->inv(static_cast<int>(g)), x));
                if (lhs != rhs) throw std::logic_error("dual_module: pairing equivariance failed");
            }
    }
    return d;
}

/// Smallest m and witness generators whose H-orbit spans the module, found by
/// exhaustive search over element subsets in increasing size.
inline std::pair<int, std::vector<long>> min_module_generators(const GModule& m) {
    long sz = m.ab.size();
    if (sz == 1) return {0, {}};
    std::vector<std::vector<long>> orbit_span(sz);
    for (long a = 0; a < sz; ++a) {
        std::vector<long> orbit;
        for (size_t g = 0; g < m.grp->order(); ++g) orbit.push_back(m.apply(static_cast<int>(g), a));
        orbit_span[a] = std::move(orbit);
    }
    for (int k = 1; k <= static_cast<int>(m.ab.rank()); ++k) {
        std::vector<long> pick(k, 0);
        std::function<bool(int, long)> rec = [&](int depth, long start) -> bool {
            if (depth == k) {
                std::vector<long> gens;
                for (long a : pick)
                    gens.insert(gens.end(), orbit_span[a].begin(), orbit_span[a].end());
                return static_cast<long>(m.ab.span(gens).size()) == sz;
            }
            for (long a = start; a < sz; ++a) {
                pick[depth] = a;
                if (rec(depth + 1, a + 1)) return true;
            }
            return false;
        };
        if (rec(0, 1)) return {k, pick};
    }
    throw std::logic_error("min_module_generators: rank bound violated");
}

/// Structure of an abelian subgroup of a permutation group: an explicit
/// isomorphism with a FinAb in invariant-factor form.
struct AbelianStructure {
    FinAb ab;
    std::vector<int> basis;        // group element index generating each factor
    std::vector<int> members;      // sorted group element indices
    std::vector<long> elem_to_ab;  // indexed by position in members
    std::vector<int> ab_to_elem;   // ab index -> group element index

    long ab_of(int elem_index) const {
        auto it = std::lower_bound(members.begin(), members.end(), elem_index);
        if (it == members.end() || *it != elem_index)
            throw std::domain_error("AbelianStructure: element not in subgroup");
        return elem_to_ab[it - members.begin()];
    }
};

namespace detail {

// Basis of an abelian p-subgroup by depth-first search over element tuples
// with prescribed orders (largest first), checking stepwise independence.
inline bool p_basis_search(const GroupPtr& g, const std::vector<int>& elems,
                           const std::vector<long>& target_orders, size_t depth,
                           std::vector<int>& chosen) {
    if (depth == target_orders.size()) return true;
    // current span
    std::vector<int> seed(chosen.begin(), chosen.begin() + depth);
    auto span_now = seed.empty() ? std::vector<int>{g->id()} : g->subgroup_closure(seed);
    long expect = 1;
    for (size_t i = 0; i < depth; ++i) expect *= target_orders[i];
    for (int e : elems) {
        if (g->elem_order(e) != target_orders[depth]) continue;
        std::vector<int> s2 = seed;
        s2.push_back(e);
        auto sp = g->subgroup_closure(s2);
        if (static_cast<long>(sp.size()) != expect * target_orders[depth]) continue;
        chosen[depth] = e;
        if (p_basis_search(g, elems, target_orders, depth + 1, chosen)) return true;
    }
    return false;
}

}  // namespace detail

/// Invariant-factor decomposition of an abelian subgroup, with explicit maps.
inline AbelianStructure abelian_decompose(const GroupPtr& g, const Subgroup& a) {
    if (!a.is_abelian) throw NotAbelian("abelian_decompose: subgroup not abelian");
    long n = static_cast<long>(a.members.size());
    // primes dividing |A|
    std::vector<long> primes;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);

    // per-prime bases
    struct PPart {
        long p;
        std::vector<long> orders;  // descending prime-power orders
        std::vector<int> basis;
    };
    std::vector<PPart> parts;
    for (long p : primes) {
        std::vector<int> pelems;
        for (int e : a.members) {
            long o = g->elem_order(e);
            bool ppow = true;
            while (o > 1) {
                if (o % p != 0) {
                    ppow = false;
                    break;
                }
                o /= p;
            }
            if (ppow) pelems.push_back(e);
        }
        // counts N_j = #elements killed by p^j determine the type
        std::vector<long> type;  // exponents e_1 >= e_2 >= ...
        {
            long total = static_cast<long>(pelems.size());
            std::vector<long> nj;
            long j = 0, prev = 1;
            nj.push_back(1);
            while (nj.back() < total) {
                ++j;
                long cnt = 0;
                for (int e : pelems) {
                    long o = g->elem_order(e);
                    long pj = 1;
                    for (long t = 0; t < j; ++t) pj *= p;
                    if (pj % o == 0) ++cnt;
                }
                nj.push_back(cnt);
            }
            (void)prev;
            // e_i = #{j >= 1 : dim growth at step j >= i}, standard reconstruction
            std::vector<long> growth;
            for (size_t jj = 1; jj < nj.size(); ++jj) {
                long ratio = nj[jj] / nj[jj - 1];
                long log = 0;
                while (ratio > 1) {
                    ratio /= p;
                    ++log;
                }
                growth.push_back(log);
            }
            if (!growth.empty()) {
                for (long i = 0; i < growth[0]; ++i) {
                    long e_i = 0;
                    for (long gl : growth)
                        if (gl > i) ++e_i;
                    type.push_back(e_i);
                }
            }
        }
        std::vector<long> orders;
        for (long e : type) {
            long q = 1;
            for (long t = 0; t < e; ++t) q *= p;
            orders.push_back(q);
        }
        std::vector<int> chosen(orders.size(), g->id());
        if (!orders.empty() &&
            !detail::p_basis_search(g, pelems, orders, 0, chosen))
            throw std::logic_error("abelian_decompose: basis search failed");
        parts.push_back(PPart{p, orders, chosen});
    }
    // CRT-combine aligned largest-with-largest into invariant factors
    size_t rank = 0;
    for (const auto& pp : parts) rank = std::max(rank, pp.orders.size());
    std::vector<long> factors(rank, 1);
    std::vector<int> basis(rank, g->id());
    for (const auto& pp : parts) {
        for (size_t i = 0; i < pp.orders.size(); ++i) {
            size_t slot = rank - 1 - i;  // largest factors at the end
            factors[slot] *= pp.orders[i];
            basis[slot] = g->mul(basis[slot], pp.basis[i]);
        }
    }
    AbelianStructure out{FinAb(factors), basis, a.members, {}, {}};
    // enumerate tuples -> elements
    out.ab_to_elem.assign(out.ab.size(), -1);
    for (long idx = 0; idx < out.ab.size(); ++idx) {
        auto t = out.ab.decode(idx);
        int e = g->id();
        for (size_t i = 0; i < rank; ++i) {
            for (long c = 0; c < t[i]; ++c) e = g->mul(e, basis[i]);
        }
        if (out.ab_to_elem[idx] != -1) throw std::logic_error("abelian_decompose: not bijective");
        out.ab_to_elem[idx] = e;
    }
    out.elem_to_ab.assign(a.members.size(), -1);
    for (long idx = 0; idx < out.ab.size(); ++idx) {
        int e = out.ab_to_elem[idx];
        auto it = std::lower_bound(a.members.begin(), a.members.end(), e);
        if (it == a.members.end() || *it != e)
            throw std::logic_error("abelian_decompose: image escapes subgroup");
        out.elem_to_ab[it - a.members.begin()] = idx;
    }
    for (long v : out.elem_to_ab)
        if (v < 0) throw std::logic_error("abelian_decompose: not surjective");
    return out;
}

}  // namespace exalg
