#pragma once

#include "exalg/gmodule.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace exalg {

struct NotCertified : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bijective 1-cocycle pi: G -> A for a G-module A: pi(gh) = pi(g) + g.pi(h),
/// pi bijective (pi(1) = 0 follows).
struct BijCocycle {
    GModule mod;
    std::vector<long> pi;  // G element index -> ab element index

    void validate() const {
        const auto& g = *mod.grp;
        if (pi.size() != g.order() || static_cast<long>(g.order()) != mod.ab.size())
            throw std::domain_error("BijCocycle: size mismatch");
        std::vector<bool> seen(mod.ab.size(), false);
        for (long v : pi) {
            if (seen[v]) throw std::domain_error("BijCocycle: not bijective");
            seen[v] = true;
        }
        if (pi[g.id()] != 0) throw std::domain_error("BijCocycle: pi(1) != 0");
        for (size_t a = 0; a < g.order(); ++a)
            for (size_t b = 0; b < g.order(); ++b)
                if (pi[g.mul(static_cast<int>(a), static_cast<int>(b))] !=
                    mod.ab.add(pi[a], mod.apply(static_cast<int>(a), pi[b])))
                    throw std::domain_error("BijCocycle: cocycle identity fails");
    }

    int g_of_a(long a) const {  // pi^{-1}
        for (size_t g = 0; g < pi.size(); ++g)
            if (pi[g] == a) return static_cast<int>(g);
        throw std::domain_error("BijCocycle: value not attained");
    }
};

struct CocycleSearchResult {
    std::vector<BijCocycle> found;
    bool size_mismatch = false;
};

namespace detail {

// All automorphisms of a FinAb, as generator-image matrices (column j = image
// of e_j in coordinates).
inline std::vector<std::vector<std::vector<long>>> finab_automorphisms(const FinAb& a) {
    size_t k = a.rank();
    std::vector<std::vector<std::vector<long>>> out;
    std::vector<long> imgs(k, 0);
    std::function<void(size_t)> rec = [&](size_t depth) {
        if (depth == k) {
            // build matrix, check it defines an automorphism
            std::vector<std::vector<long>> m(k, std::vector<long>(k));
            for (size_t j = 0; j < k; ++j) {
                auto t = a.decode(imgs[j]);
                for (size_t i = 0; i < k; ++i) m[i][j] = t[i];
            }
            // well-defined: n_j * image of e_j must vanish (automatic: order of
            // img divides n_j required)
            for (size_t j = 0; j < k; ++j)
                if (a.smul(a.factors()[j], imgs[j]) != 0) return;
            // bijective on elements
            std::vector<bool> seen(a.size(), false);
            for (long x = 0; x < a.size(); ++x) {
                auto t = a.decode(x);
                long acc = 0;
                for (size_t j = 0; j < k; ++j) acc = a.add(acc, a.smul(t[j], imgs[j]));
                if (seen[acc]) return;
                seen[acc] = true;
            }
            out.push_back(std::move(m));
            return;
        }
        for (long v = 0; v < a.size(); ++v) {
            imgs[depth] = v;
            rec(depth + 1);
        }
    };
    rec(0);
    return out;
}

// All homomorphisms G -> Aut(A), via generator assignments propagated over
// the Cayley graph.
inline std::vector<GModule> action_homomorphisms(const GroupPtr& g, const FinAb& a) {
    auto auts = finab_automorphisms(a);
    size_t na = auts.size();
    // compose automorphisms as permutations of elements for the propagation
    auto apply_mat = [&](const std::vector<std::vector<long>>& m, long x) {
        auto t = a.decode(x);
        std::vector<long> y(a.rank(), 0);
        for (size_t i = 0; i < a.rank(); ++i) {
            long acc = 0;
            long ni = a.factors()[i];
            for (size_t j = 0; j < a.rank(); ++j) acc = (acc + m[i][j] % ni * t[j]) % ni;
            y[i] = acc < 0 ? acc + ni : acc;
        }
        return a.encode(y);
    };
    std::vector<std::vector<long>> aut_perm(na, std::vector<long>(a.size()));
    for (size_t i = 0; i < na; ++i)
        for (long x = 0; x < a.size(); ++x) aut_perm[i][x] = apply_mat(auts[i], x);
    auto aut_index = [&](const std::vector<long>& p) {
        for (size_t i = 0; i < na; ++i)
            if (aut_perm[i] == p) return static_cast<int>(i);
        throw std::logic_error("action_homomorphisms: composition escaped Aut");
    };
    int aut_id = aut_index([&] {
        std::vector<long> idp(a.size());
        std::iota(idp.begin(), idp.end(), 0);
        return idp;
    }());

    std::vector<int> gen_idx;
    for (const auto& gen : g->generators()) gen_idx.push_back(g->index_of(gen));
    if (gen_idx.empty()) gen_idx.push_back(g->id());

    std::vector<GModule> result;
    std::vector<int> assign(gen_idx.size(), 0);
    std::function<void(size_t)> rec = [&](size_t depth) {
        if (depth == assign.size()) {
            // propagate: image of every element or contradiction
            std::vector<int> img(g->order(), -1);
            img[g->id()] = aut_id;
            std::vector<int> frontier = {g->id()};
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int x : frontier)
                    for (size_t gi = 0; gi < gen_idx.size(); ++gi) {
                        int y = g->mul(gen_idx[gi], x);
                        // img(y) = img(gen) compose img(x)
                        std::vector<long> comp(a.size());
                        for (long e = 0; e < a.size(); ++e)
                            comp[e] = aut_perm[assign[gi]][aut_perm[img[x]][e]];
                        int ci = aut_index(comp);
                        if (img[y] < 0) {
                            img[y] = ci;
                            next.push_back(y);
                        } else if (img[y] != ci) {
                            return;  // not a homomorphism
                        }
                    }
                frontier = std::move(next);
            }
            // full consistency check, then build GModule
            for (size_t x = 0; x < g->order(); ++x)
                for (size_t y = 0; y < g->order(); ++y) {
                    std::vector<long> comp(a.size());
                    for (long e = 0; e < a.size(); ++e)
                        comp[e] = aut_perm[img[x]][aut_perm[img[y]][e]];
                    if (aut_index(comp) != img[g->mul(static_cast<int>(x), static_cast<int>(y))])
                        return;
                }
            GModule m{g, a, {}};
            m.mats.resize(g->order());
            for (size_t x = 0; x < g->order(); ++x) m.mats[x] = auts[img[x]];
            m.validate();
            result.push_back(std::move(m));
            return;
        }
        for (size_t v = 0; v < na; ++v) {
            assign[depth] = static_cast<int>(v);
            rec(depth + 1);
        }
    };
    rec(0);
    return result;
}

}  // namespace detail

/// Exhaustive search for bijective 1-cocycles: all action homomorphisms
/// G -> Aut(A), and per action all assignments of generator values propagated
/// through pi(gh) = pi(g) + g.pi(h). Deduplicated by (action, table).
inline CocycleSearchResult search_bijective_cocycles(const GroupPtr& g, const FinAb& a) {
    CocycleSearchResult res;
    if (static_cast<long>(g->order()) != a.size()) {
        res.size_mismatch = true;
        return res;
    }
    if (g->order() > 12) throw BudgetExceeded("search_bijective_cocycles: |G| > 12");
    std::set<std::pair<std::vector<std::vector<std::vector<long>>>, std::vector<long>>> seen;
    for (const auto& mod : detail::action_homomorphisms(g, a)) {
        std::vector<int> gen_idx;
        for (const auto& gen : g->generators()) gen_idx.push_back(g->index_of(gen));
        if (gen_idx.empty()) gen_idx.push_back(g->id());
        std::vector<long> assign(gen_idx.size(), 0);
        std::function<void(size_t)> rec = [&](size_t depth) {
            if (depth == assign.size()) {
                std::vector<long> pi(g->order(), -1);
                pi[g->id()] = 0;
                std::vector<int> frontier = {g->id()};
                while (!frontier.empty()) {
                    std::vector<int> next;
                    for (int x : frontier)
                        for (size_t gi = 0; gi < gen_idx.size(); ++gi) {
                            int y = g->mul(gen_idx[gi], x);
                            // pi(s x) = pi(s) + s.pi(x)
                            long v = a.add(assign[gi],
                                           mod.apply(gen_idx[gi], pi[x]));
                            if (pi[y] < 0) {
                                pi[y] = v;
                                next.push_back(y);
                            } else if (pi[y] != v) {
                                return;
                            }
                        }
                    frontier = std::move(next);
                }
                // bijectivity + full identity
                std::vector<bool> hit(a.size(), false);
                for (long v : pi) {
                    if (v < 0 || hit[v]) return;
                    hit[v] = true;
                }
                BijCocycle c{mod, pi};
                try {
                    c.validate();
                } catch (const std::domain_error&) {
                    return;
                }
                if (seen.insert({mod.mats, pi}).second) res.found.push_back(std::move(c));
                return;
            }
            for (long v = 0; v < a.size(); ++v) {
                assign[depth] = v;
                rec(depth + 1);
            }
        };
        rec(0);
    }
    return res;
}

/// Finite set X = G x S with h.(g,s) = (hg,s), phi(g,s) = g.phi_S(s), the
/// derived Yang-Baxter map R, and certification flags.
struct SymmetricSet {
    BijCocycle coc;
    int s_size = 1;
    std::vector<long> phi_s;                 // S index -> ab element
    std::vector<std::pair<int, int>> labels;  // x -> (g, s)
    std::vector<std::vector<int>> action;     // [g][x] -> x
    std::vector<long> phi;                    // x -> ab element
    std::vector<std::vector<std::pair<int, int>>> r;  // [x][y] -> (x', y')
    bool involutive = false;
    bool nondegenerate = false;
    bool ybe_certified = false;

    size_t size() const { return labels.size(); }
};

struct YbeReport {
    bool braid_ok = true;
    bool involutive_ok = true;
    bool nondeg_ok = true;
    std::optional<std::array<int, 3>> braid_witness;
    std::optional<std::array<int, 2>> involutive_witness;
    std::optional<std::array<int, 2>> nondeg_witness;
    bool ok() const { return braid_ok && involutive_ok && nondeg_ok; }
};

/// Exhaustive verification over X^3 / X^2: braid form of the YBE,
/// involutivity, and nondegeneracy (for fixed x, y -> first component of
/// R(x,y) is bijective; for fixed y, x -> second component is bijective).
inline YbeReport verify_ybe(const std::vector<std::vector<std::pair<int, int>>>& r) {
    YbeReport rep;
    int n = static_cast<int>(r.size());
    auto R1 = [&](int x, int y) { return r[x][y].first; };
    auto R2 = [&](int x, int y) { return r[x][y].second; };
    // involutivity
    for (int x = 0; x < n && rep.involutive_ok; ++x)
        for (int y = 0; y < n; ++y) {
            auto [a, b] = r[x][y];
            if (r[a][b] != std::make_pair(x, y)) {
                rep.involutive_ok = false;
                rep.involutive_witness = {x, y};
                break;
            }
        }
    // braid relation (R x id)(id x R)(R x id) = (id x R)(R x id)(id x R)
    auto r12 = [&](std::array<int, 3> t) {
        auto [a, b] = r[t[0]][t[1]];
        return std::array<int, 3>{a, b, t[2]};
    };
    auto r23 = [&](std::array<int, 3> t) {
        auto [a, b] = r[t[1]][t[2]];
        return std::array<int, 3>{t[0], a, b};
    };
    for (int x = 0; x < n && rep.braid_ok; ++x)
        for (int y = 0; y < n && rep.braid_ok; ++y)
            for (int z = 0; z < n; ++z) {
                std::array<int, 3> t{x, y, z};
                if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
                    rep.braid_ok = false;
                    rep.braid_witness = {x, y, z};
                    break;
                }
            }
    // nondegeneracy
    for (int x = 0; x < n && rep.nondeg_ok; ++x) {
        std::vector<bool> seen(n, false);
        for (int y = 0; y < n; ++y) {
            int v = R1(x, y);
            if (seen[v]) {
                rep.nondeg_ok = false;
                rep.nondeg_witness = {x, y};
                break;
            }
            seen[v] = true;
        }
    }
    for (int y = 0; y < n && rep.nondeg_ok; ++y) {
        std::vector<bool> seen(n, false);
        for (int x = 0; x < n; ++x) {
            int v = R2(x, y);
            if (seen[v]) {
                rep.nondeg_ok = false;
                rep.nondeg_witness = {x, y};
                break;
            }
            seen[v] = true;
        }
    }
    return rep;
}

/// R(x,y) = (g_{x'} . y, x') with x' = g_y^{-1} . x and g_x = pi^{-1}(phi(x)).
/// This is the orientation matching the twist J = sum_g g (x) 1_pi(g): as an
/// operator on kX (x) kX, J(x (x) y) = (g_y . x) (x) y, so the relation span
/// {w - R(w)} equals J applied to the antisymmetric square. Involutivity is
/// built in; the YBE and nondegeneracy are certified exhaustively and the
/// flags are set only on success.
inline void derive_R(SymmetricSet& x) {
    size_t n = x.size();
    x.r.assign(n, std::vector<std::pair<int, int>>(n, {0, 0}));
    const auto& g = *x.coc.mod.grp;
    std::vector<int> gx(n);
    for (size_t i = 0; i < n; ++i) gx[i] = x.coc.g_of_a(x.phi[i]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int xp = x.action[g.inv(gx[j])][i];
            int yp = x.action[gx[xp]][j];
            x.r[i][j] = {yp, xp};
        }
    auto rep = verify_ybe(x.r);
    x.involutive = rep.involutive_ok;
    x.nondegenerate = rep.nondeg_ok;
    x.ybe_certified = rep.ok();
}

/// Builds X = G x S with the stated action and equivariant map (equivariance
/// verified exhaustively), then derives and certifies R.
inline SymmetricSet build_symmetric_set(const BijCocycle& c, const std::vector<long>& phi_s) {
    SymmetricSet x{c, static_cast<int>(phi_s.size()), phi_s, {}, {}, {}, {}, false, false, false};
    const auto& g = *c.mod.grp;
    size_t gn = g.order();
    size_t n = gn * phi_s.size();
    x.labels.resize(n);
    x.phi.resize(n);
    auto xidx = [&](int gi, int s) { return static_cast<size_t>(gi) * phi_s.size() + s; };
    for (size_t gi = 0; gi < gn; ++gi)
        for (size_t s = 0; s < phi_s.size(); ++s) {
            x.labels[xidx(static_cast<int>(gi), static_cast<int>(s))] = {static_cast<int>(gi),
                                                                          static_cast<int>(s)};
            x.phi[xidx(static_cast<int>(gi), static_cast<int>(s))] =
                c.mod.apply(static_cast<int>(gi), phi_s[s]);
        }
    x.action.assign(gn, std::vector<int>(n));
    for (size_t h = 0; h < gn; ++h)
        for (size_t i = 0; i < n; ++i) {
            auto [gi, s] = x.labels[i];
            x.action[h][i] = static_cast<int>(xidx(g.mul(static_cast<int>(h), gi), s));
        }
    // equivariance phi(h.x) = h.phi(x), exhaustive
    for (size_t h = 0; h < gn; ++h)
        for (size_t i = 0; i < n; ++i)
            if (x.phi[x.action[h][i]] != c.mod.apply(static_cast<int>(h), x.phi[i]))
                throw std::logic_error("build_symmetric_set: equivariance fails");
    derive_R(x);
    return x;
}

/// Quadratic algebra on generators b_x with one relation per unordered
/// 2-orbit of R on X^2: the word (x,y) is identified with the word R(x,y).
struct QuadraticAlgebra {
    int nx = 0;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> relations;
};

inline QuadraticAlgebra quadratic_algebra(const SymmetricSet& x) {
    if (!x.ybe_certified) throw NotCertified("quadratic_algebra: R not certified");
    QuadraticAlgebra qa;
    qa.nx = static_cast<int>(x.size());
    int n = qa.nx;
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (used[a][b]) continue;
            auto [c, d] = x.r[a][b];
            used[a][b] = true;
            if (c == a && d == b) continue;  // fixed pair: no relation
            used[c][d] = true;
            qa.relations.push_back({{a, b}, {c, d}});
        }
    return qa;
}

/// Word quotient of the free algebra on X by the two-sided relation ideal.
/// The degree-n relation space is spanned by u (xy - R(xy)) v over words
/// u, v; every spanning vector is a difference of two words, so its rank is
/// computed exactly by connected components over the word set, and the
/// quotient dimension is the number of components.
struct WordQuotient {
    int nx = 0;
    int maxdeg = 0;
    // per degree d: root word index (canonical representative) per word
    std::vector<std::vector<int64_t>> root;
    std::vector<std::vector<int64_t>> canon;  // sorted list of canonical word codes per degree

    int64_t encode(const std::vector<int>& w) const {
        int64_t code = 0;
        for (int c : w) code = code * nx + c;
        return code;
    }
    std::vector<int> decode(int64_t code, int deg) const {
        std::vector<int> w(deg);
        for (int i = deg - 1; i >= 0; --i) {
            w[i] = static_cast<int>(code % nx);
            code /= nx;
        }
        return w;
    }
    int64_t find(int deg, int64_t w) const {
        while (root[deg][w] != w) w = root[deg][w];
        return w;
    }
    long dim(int deg) const { return static_cast<long>(canon[deg].size()); }
};

inline WordQuotient word_quotient(const QuadraticAlgebra& qa, int maxdeg,
                                  long budget = 100000) {
    WordQuotient wq;
    wq.nx = qa.nx;
    wq.maxdeg = maxdeg;
    wq.root.resize(maxdeg + 1);
    wq.canon.resize(maxdeg + 1);
    // relation lookup: for pair (a,b) its R-image (or itself when fixed)
    std::vector<std::vector<std::pair<int, int>>> image(qa.nx,
                                                        std::vector<std::pair<int, int>>(qa.nx));
    for (int a = 0; a < qa.nx; ++a)
        for (int b = 0; b < qa.nx; ++b) image[a][b] = {a, b};
    for (const auto& rel : qa.relations) {
        image[rel.first.first][rel.first.second] = rel.second;
        image[rel.second.first][rel.second.second] = rel.first;
    }
    for (int d = 0; d <= maxdeg; ++d) {
        double words = std::pow(static_cast<double>(qa.nx), d);
        if (words > static_cast<double>(budget))
            throw BudgetExceeded("word_quotient: |X|^" + std::to_string(d) + " exceeds budget");
        int64_t total = 1;
        for (int t = 0; t < d; ++t) total *= qa.nx;
        auto& root = wq.root[d];
        root.resize(total);
        std::iota(root.begin(), root.end(), 0);
        std::function<int64_t(int64_t)> find = [&](int64_t w) {
            while (root[w] != w) {
                root[w] = root[root[w]];
                w = root[w];
            }
            return w;
        };
        // union each word with its one-step rewrites
        std::vector<int64_t> pow(d + 1, 1);
        for (int t = 1; t <= d; ++t) pow[t] = pow[t - 1] * qa.nx;
        for (int64_t w = 0; w < total; ++w) {
            for (int p = 0; p + 2 <= d; ++p) {
                // letters at positions p, p+1 (position 0 is the most significant)
                int64_t hi = w / pow[d - p];            // prefix above position p
                int64_t rest = w % pow[d - p];
                int a = static_cast<int>(rest / pow[d - p - 1]);
                int64_t rest2 = rest % pow[d - p - 1];
                int b = static_cast<int>(rest2 / pow[d - p - 2]);
                int64_t tail = rest2 % pow[d - p - 2];
                auto [c, e] = image[a][b];
                if (c == a && e == b) continue;
                int64_t w2 = ((hi * qa.nx + c) * qa.nx + e) * pow[d - p - 2] + tail;
                int64_t ra = find(w), rb = find(w2);
                if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
        for (int64_t w = 0; w < total; ++w) root[w] = find(w);
        for (int64_t w = 0; w < total; ++w)
            if (root[w] == w) wq.canon[d].push_back(w);
    }
    return wq;
}

/// Dimensions of the degree-0..maxdeg components of the quadratic algebra.
inline std::vector<long> hilbert_coeffs(const QuadraticAlgebra& qa, int maxdeg,
                                        long budget = 100000) {
    auto wq = word_quotient(qa, maxdeg, budget);
    std::vector<long> dims;
    for (int d = 0; d <= maxdeg; ++d) dims.push_back(wq.dim(d));
    return dims;
}

struct FaithfulnessReport {
    bool action_faithful = false;
    bool phi_generates_group = false;
    bool phi_generates_module = false;
    bool linear_action_faithful = false;
    bool ok() const { return action_faithful && phi_generates_module && linear_action_faithful; }
};

/// (i) trivial kernel of the G-action on X, (ii) phi(X) generates A (as a
/// group and as a G-module - for X = GxS these agree), (iii) trivial kernel
/// of the monomial action of A^vee x| G on span(X): (chi, g) acts by
/// b_x -> chi(phi(gx)) b_{gx}; two monomial matrices over Q(zeta_e) coincide
/// iff the permutations and all root-of-unity exponents coincide.
inline FaithfulnessReport faithfulness_check(const SymmetricSet& x) {
    FaithfulnessReport rep;
    const auto& g = *x.coc.mod.grp;
    const FinAb& a = x.coc.mod.ab;
    size_t n = x.size();
    // (i)
    rep.action_faithful = true;
    for (size_t h = 0; h < g.order(); ++h) {
        if (static_cast<int>(h) == g.id()) continue;
        bool fixes_all = true;
        for (size_t i = 0; i < n; ++i)
            if (x.action[h][i] != static_cast<int>(i)) fixes_all = false;
        if (fixes_all) rep.action_faithful = false;
    }
    // (ii)
    std::vector<long> vals(x.phi.begin(), x.phi.end());
    rep.phi_generates_group = static_cast<long>(a.span(vals).size()) == a.size();
    std::vector<long> orbit_vals;
    for (long v : x.phi_s)
        for (size_t h = 0; h < g.order(); ++h) orbit_vals.push_back(x.coc.mod.apply(static_cast<int>(h), v));
    rep.phi_generates_module = static_cast<long>(a.span(orbit_vals).size()) == a.size();
    // (iii): (chi, g) acts trivially iff g acts trivially on X and the scalar
    // chi(phi(x)) = 1 for all x; kernel trivial iff only (0, 1) acts trivially.
    rep.linear_action_faithful = true;
    long nchi = a.size();  // A^vee ~ A
    for (long chi = 0; chi < nchi; ++chi)
        for (size_t h = 0; h < g.order(); ++h) {
            if (chi == 0 && static_cast<int>(h) == g.id()) continue;
            bool trivial = true;
            for (size_t i = 0; i < n && trivial; ++i) {
                if (x.action[h][i] != static_cast<int>(i)) trivial = false;
                // scalar exponent: pairing(chi, phi(g.x)) must be 0 mod n
                if (a.pairing(chi, x.phi[x.action[h][i]]) != 0) trivial = false;
            }
            if (trivial) rep.linear_action_faithful = false;
        }
    return rep;
}

}  // namespace exalg
