#pragma once

#include "exalg/cyclotomic.hpp"
#include "exalg/findim_algebra.hpp"

#include <random>

namespace exalg {

/// d_*(A) outcome: exact value when every simple block was certified, or
/// lower/upper bounds when some center could not be split over the base field.
struct DStarResult {
    bool exact = false;
    int value = 0;   // meaningful when exact
    int lower = 0;
    int upper = 0;
    std::vector<std::pair<size_t, size_t>> blocks;  // (dim over K, center dim over K)
};

namespace detail {

// --- univariate polynomial helpers over a coefficient field (ascending) ---

template <CoeffField K>
using KPoly = std::vector<K>;

template <CoeffField K>
void kpoly_trim(KPoly<K>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <CoeffField K>
KPoly<K> kpoly_mul(const KPoly<K>& a, const KPoly<K>& b, const K& zero) {
    if (a.empty() || b.empty()) return {};
    KPoly<K> r(a.size() + b.size() - 1, zero);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    kpoly_trim(r);
    return r;
}

// division with remainder
template <CoeffField K>
std::pair<KPoly<K>, KPoly<K>> kpoly_divmod(KPoly<K> num, const KPoly<K>& den, const K& zero) {
    KPoly<K> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, zero);
    K lead_inv = den.back().inv();
    while (num.size() >= den.size()) {
        size_t shift = num.size() - den.size();
        K c = num.back() * lead_inv;
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] = num[shift + i] - c * den[i];
        kpoly_trim(num);
        if (!num.empty() && num.size() >= den.size() + shift && num.size() > shift + den.size() - 1)
            break;  // no progress guard (cannot happen with exact arithmetic)
    }
    return {q, num};
}

template <CoeffField K>
KPoly<K> kpoly_gcd(KPoly<K> a, KPoly<K> b, const K& zero) {
    kpoly_trim(a);
    kpoly_trim(b);
    while (!b.empty()) {
        auto [q, r] = kpoly_divmod(a, b, zero);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        K inv = a.back().inv();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

template <CoeffField K>
KPoly<K> kpoly_derivative(const KPoly<K>& a, const K& zero) {
    KPoly<K> d;
    for (size_t i = 1; i < a.size(); ++i) {
        K c = zero;
        for (size_t t = 0; t < i; ++t) c = c + a[i];
        d.push_back(c);
    }
    kpoly_trim(d);
    return d;
}

// Scale a rational vector to a primitive integer vector (keeps spans, tames
// coefficient growth in downstream Krylov computations).
inline void make_primitive(std::vector<Rational>& v) {
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& c : v) lcm_den = boost::multiprecision::lcm(lcm_den, c.den());
    for (const auto& c : v) gcd_num = boost::multiprecision::gcd(gcd_num, c.num() * (lcm_den / c.den()));
    if (gcd_num == 0) return;
    Rational scale(lcm_den, gcd_num);
    if (scale.sign() < 0) scale = -scale;
    for (auto& c : v) c = c * scale;
}
inline void make_primitive(std::vector<Cyclotomic>& v) {
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& c : v)
        for (const auto& r : c.coeffs()) lcm_den = boost::multiprecision::lcm(lcm_den, r.den());
    for (const auto& c : v)
        for (const auto& r : c.coeffs())
            gcd_num = boost::multiprecision::gcd(gcd_num, r.num() * (lcm_den / r.den()));
    if (gcd_num == 0) return;
    Rational scale(lcm_den, gcd_num);
    if (scale.sign() < 0) scale = -scale;
    for (auto& c : v) c = c * scale;
}

// rational roots of a polynomial with Rational coefficients (used to split
// commutative semisimple centers). Deliberately bounded: a small-candidate
// scan always runs; the divisor search only runs for moderate integer sizes,
// so callers degrade to Bounds instead of stalling on huge coefficients.
inline std::vector<Rational> rational_roots(const KPoly<Rational>& p) {
    std::vector<Rational> roots;
    if (p.size() <= 1) return roots;
    BigInt lcm_den = 1;
    for (const auto& c : p) lcm_den = boost::multiprecision::lcm(lcm_den, c.den());
    std::vector<BigInt> ip;
    for (const auto& c : p) ip.push_back(c.num() * (lcm_den / c.den()));
    while (!ip.empty() && ip.back() == 0) ip.pop_back();
    size_t low = 0;
    while (low < ip.size() && ip[low] == 0) ++low;
    auto eval = [&](const Rational& x) {
        Rational acc;
        for (size_t i = ip.size(); i-- > low;) acc = acc * x + Rational(ip[i]);
        return acc;
    };
    auto push = [&](const Rational& cand) {
        for (const auto& r : roots)
            if (r == cand) return;
        if (eval(cand).is_zero()) roots.push_back(cand);
    };
    if (low > 0) roots.push_back(Rational(0));
    BigInt a0 = ip[low], an = ip.back();
    // small-candidate scan
    for (long num = -64; num <= 64; ++num)
        for (long den = 1; den <= 12; ++den) push(Rational(num, den));
    // bounded divisor search for moderate sizes
    const BigInt big_cap = BigInt("1000000000000");
    if (boost::multiprecision::abs(a0) <= big_cap && boost::multiprecision::abs(an) <= big_cap) {
        auto divisors = [](BigInt n) {
            std::vector<BigInt> out;
            n = boost::multiprecision::abs(n);
            for (BigInt d = 1; d * d <= n && d <= 1000000; ++d) {
                if (n % d == 0) {
                    out.push_back(d);
                    out.push_back(n / d);
                }
            }
            return out;
        };
        auto da = divisors(a0), db = divisors(an);
        if (da.size() * db.size() <= 40000) {
            for (const auto& pd : da)
                for (const auto& qd : db) {
                    push(Rational(pd, qd));
                    push(Rational(-pd, qd));
                }
        }
    }
    return roots;
}

// roots in the base field: Rational directly; Cyclotomic looks for rational
// roots of polynomials that happen to have rational coefficients.
inline std::vector<Rational> field_roots(const KPoly<Rational>& p) { return rational_roots(p); }
inline std::vector<Cyclotomic> field_roots(const KPoly<Cyclotomic>& p) {
    std::vector<Cyclotomic> out;
    if (p.empty()) return out;
    int e = p[0].order();
    KPoly<Rational> q;
    for (const auto& c : p) {
        if (!c.is_rational()) return out;  // only the rational-coefficient case is handled
        q.push_back(c.rational_part());
    }
    for (const auto& r : rational_roots(q)) out.push_back(Cyclotomic(e, r));
    return out;
}

}  // namespace detail

/// Subalgebra spanned by the given vectors closed under multiplication (the
/// unit must be included by the caller); returns an echelonized basis.
template <CoeffField K>
std::vector<std::vector<K>> close_subalgebra(const FinDimAlgebra<K>& amb,
                                             std::vector<std::vector<K>> seed) {
    auto basis = echelon_basis(seed, amb.zero);
    while (true) {
        std::vector<std::vector<K>> fresh;
        for (const auto& a : basis)
            for (const auto& b : basis) {
                auto p = amb.mul(a, b);
                auto res = echelon_reduce(p, basis);
                bool zero = true;
                for (const auto& c : res)
                    if (!c.is_zero()) zero = false;
                if (!zero) fresh.push_back(std::move(res));
            }
        if (fresh.empty()) return basis;
        for (auto& v : fresh) basis.push_back(std::move(v));
        basis = echelon_basis(basis, amb.zero);
    }
}

/// Structure constants of a subalgebra presented by an independent spanning
/// set inside an ambient algebra (coordinates solved exactly).
template <CoeffField K>
AlgebraWithUnit<K> subalgebra_structure(const FinDimAlgebra<K>& amb,
                                        const std::vector<std::vector<K>>& basis,
                                        const std::vector<K>& unit_vec) {
    size_t d = basis.size(), n = amb.dim();
    Matrix<K> bm(n, d, amb.zero);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < n; ++i) bm.at(i, j) = basis[j][i];
    AlgebraWithUnit<K> out{FinDimAlgebra<K>(amb.zero), {}};
    out.alg.basis.resize(d);
    for (size_t i = 0; i < d; ++i) out.alg.basis[i] = "s" + std::to_string(i);
    out.alg.unit = -1;
    out.alg.sc.assign(d, std::vector<std::vector<K>>(d, std::vector<K>(d, amb.zero)));
    std::vector<std::vector<K>> rhs;
    rhs.reserve(d * d + 1);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) rhs.push_back(amb.mul(basis[i], basis[j]));
    rhs.push_back(unit_vec);
    auto sols = bm.solve_many(rhs);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            auto& coords = sols[i * d + j];
            if (!coords) throw std::logic_error("subalgebra_structure: not closed");
            out.alg.sc[i][j] = std::move(*coords);
        }
    if (!sols.back()) throw std::logic_error("subalgebra_structure: unit outside span");
    out.unit_vector = std::move(*sols.back());
    return out;
}

namespace detail {

// multiplication in coordinates for AlgebraWithUnit
template <CoeffField K>
std::vector<K> awu_mul(const AlgebraWithUnit<K>& a, const std::vector<K>& x,
                       const std::vector<K>& y) {
    return a.alg.mul(x, y);
}

// Jacobson radical in characteristic zero: kernel of (x,y) -> tr(L_x L_y).
template <CoeffField K>
std::vector<std::vector<K>> trace_form_radical(const AlgebraWithUnit<K>& a) {
    size_t d = a.dim();
    std::vector<Matrix<K>> lmats;
    for (size_t i = 0; i < d; ++i) lmats.push_back(a.alg.left_mult_matrix(a.alg.basis_vec(i)));
    // sparse views: nonzero (r, s) entries per left-multiplication matrix
    std::vector<std::vector<std::tuple<size_t, size_t>>> nz(d);
    for (size_t i = 0; i < d; ++i)
        for (size_t r = 0; r < d; ++r)
            for (size_t s = 0; s < d; ++s)
                if (!lmats[i].at(r, s).is_zero()) nz[i].push_back({r, s});
    Matrix<K> t(d, d, a.alg.zero);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = i; j < d; ++j) {
            K acc = a.alg.zero;
            for (auto [r, s] : nz[i]) {
                const K& other = lmats[j].at(s, r);
                if (!other.is_zero()) acc = acc + lmats[i].at(r, s) * other;
            }
            t.at(i, j) = acc;
            t.at(j, i) = acc;
        }
    }
    return t.kernel();
}

// quotient by a radical: pick a complement basis, project products
template <CoeffField K>
AlgebraWithUnit<K> quotient_by_radical(const AlgebraWithUnit<K>& a,
                                       const std::vector<std::vector<K>>& radical) {
    size_t d = a.dim();
    auto rad_ech = echelon_basis(radical, a.alg.zero);
    // complement: basis vectors whose reduction is independent
    std::vector<std::vector<K>> full = rad_ech;
    std::vector<size_t> comp_idx;
    for (size_t i = 0; i < d; ++i) {
        auto v = echelon_reduce(a.alg.basis_vec(i), full);
        bool zero = true;
        for (const auto& c : v)
            if (!c.is_zero()) zero = false;
        if (!zero) {
            comp_idx.push_back(i);
            full.push_back(v);
            full = echelon_basis(full, a.alg.zero);
        }
    }
    size_t q = comp_idx.size();
    // coordinates: x mod radical in terms of comp basis: solve [comp | rad] c = x
    size_t rd = rad_ech.size();
    Matrix<K> m(d, q + rd, a.alg.zero);
    for (size_t j = 0; j < q; ++j)
        for (size_t i = 0; i < d; ++i) m.at(i, j) = a.alg.basis_vec(comp_idx[j])[i];
    for (size_t j = 0; j < rd; ++j)
        for (size_t i = 0; i < d; ++i) m.at(i, q + j) = rad_ech[j][i];
    AlgebraWithUnit<K> out{FinDimAlgebra<K>(a.alg.zero), {}};
    out.alg.basis.resize(q);
    for (size_t i = 0; i < q; ++i) out.alg.basis[i] = "q" + std::to_string(i);
    out.alg.unit = -1;
    out.alg.sc.assign(q, std::vector<std::vector<K>>(q, std::vector<K>(q, a.alg.zero)));
    std::vector<std::vector<K>> rhs;
    rhs.reserve(q * q + 1);
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j)
            rhs.push_back(a.alg.mul(a.alg.basis_vec(comp_idx[i]), a.alg.basis_vec(comp_idx[j])));
    rhs.push_back(a.unit_vector);
    auto sols = m.solve_many(rhs);
    auto take = [&](std::optional<std::vector<K>>& sol) {
        if (!sol) throw std::logic_error("quotient_by_radical: projection failed");
        return std::vector<K>(sol->begin(), sol->begin() + q);
    };
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j) out.alg.sc[i][j] = take(sols[i * q + j]);
    out.unit_vector = take(sols.back());
    return out;
}

// center of an algebra-with-unit
template <CoeffField K>
std::vector<std::vector<K>> center_basis(const AlgebraWithUnit<K>& a) {
    size_t d = a.dim();
    Matrix<K> stacked(d * d, d, a.alg.zero);
    for (size_t b = 0; b < d; ++b) {
        auto l = a.alg.left_mult_matrix(a.alg.basis_vec(b));
        auto r = a.alg.right_mult_matrix(a.alg.basis_vec(b));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) stacked.at(b * d + i, j) = l.at(i, j) - r.at(i, j);
    }
    return stacked.kernel();
}

// minimal polynomial of an element inside a (semisimple commutative) algebra
template <CoeffField K>
KPoly<K> minimal_polynomial(const AlgebraWithUnit<K>& a, const std::vector<K>& x) {
    size_t d = a.dim();
    std::vector<std::vector<K>> powers;
    powers.push_back(a.unit_vector);
    while (powers.size() <= d + 1) {
        // dependence test
        Matrix<K> m(d, powers.size(), a.alg.zero);
        for (size_t j = 0; j < powers.size(); ++j)
            for (size_t i = 0; i < d; ++i) m.at(i, j) = powers[j][i];
        auto ker = m.kernel();
        if (!ker.empty()) {
            // lowest-degree dependence: normalize leading coefficient
            auto& rel = ker[0];
            size_t lead = rel.size();
            while (lead > 0 && rel[lead - 1].is_zero()) --lead;
            K inv = rel[lead - 1].inv();
            KPoly<K> p;
            for (size_t i = 0; i < lead; ++i) p.push_back(rel[i] * inv);
            return p;
        }
        powers.push_back(a.alg.mul(powers.back(), x));
    }
    throw std::logic_error("minimal_polynomial: no dependence found");
}

template <CoeffField K>
struct SplitOutcome {
    bool complete = true;
    std::vector<std::pair<size_t, size_t>> blocks;  // (dim_K, center_dim_K)
};

template <CoeffField K>
AlgebraWithUnit<K> subalgebra_structure_ideal(const AlgebraWithUnit<K>& amb,
                                              const std::vector<std::vector<K>>& ideal_basis);

// recursively split a semisimple algebra into simple blocks via central
// idempotents from rational roots of central minimal polynomials
template <CoeffField K>
void split_components(const AlgebraWithUnit<K>& a, std::mt19937_64& rng, SplitOutcome<K>& out,
                      int depth = 0) {
    auto center = center_basis(a);
    size_t cdim = center.size();
    if (cdim == 1) {
        out.blocks.push_back({a.dim(), 1});
        return;
    }
    if (depth > 8) {
        out.complete = false;
        out.blocks.push_back({a.dim(), cdim});
        return;
    }
    for (auto& c : center) make_primitive(c);
    // candidates: single center basis vectors first, then random small combos
    int total_attempts = static_cast<int>(center.size()) + 8;
    for (int attempt = 0; attempt < total_attempts; ++attempt) {
        std::vector<K> z(a.dim(), a.alg.zero);
        if (attempt < static_cast<int>(center.size())) {
            z = center[attempt];
        } else {
            for (const auto& c : center) {
                long coeff = static_cast<long>(rng() % 3) - 1;
                for (size_t i = 0; i < a.dim(); ++i) {
                    K add = a.alg.zero;
                    long cnt = coeff < 0 ? -coeff : coeff;
                    for (long t = 0; t < cnt; ++t) add = add + c[i];
                    if (coeff < 0) add = -add;
                    z[i] = z[i] + add;
                }
            }
        }
        auto p = minimal_polynomial(a, z);
        auto roots = field_roots(p);
        if (roots.empty()) {
            // irreducible over K when squarefree of degree <= 3 without roots
            size_t deg = p.size() - 1;
            auto dp = kpoly_derivative(p, a.alg.zero);
            bool squarefree = kpoly_gcd(p, dp, a.alg.zero).size() == 1;
            if (squarefree && deg == cdim && deg <= 3) {
                // center is a field of degree cdim over K
                out.blocks.push_back({a.dim(), cdim});
                return;
            }
            continue;
        }
        // split off eigencomponents: for each root r, the subalgebra
        // ann-image e = prod_{s != r} (z - s)/(r - s) when p splits completely;
        // otherwise use the factor (x - r): component = kernel of (z - r)^m
        // acting by multiplication; with semisimplicity m = 1.
        bool progressed = false;
        for (const auto& r : roots) {
            // component = kernel of L_{z - r*1}
            auto zr = z;
            for (size_t i = 0; i < a.dim(); ++i) zr[i] = zr[i] - r * a.unit_vector[i];
            auto lm = a.alg.left_mult_matrix(zr);
            auto comp = lm.kernel();
            if (comp.empty() || comp.size() == a.dim()) continue;
            // the component is an ideal = unital algebra with its own unit;
            // its unit is the projection of 1: solve inside the component
            auto sub = subalgebra_structure_ideal(a, comp);
            split_components(sub, rng, out, depth + 1);
            progressed = true;
        }
        if (!progressed) continue;
        // remaining part: kernel of the product of (z - r) over found roots
        // = complement ideal where none of the roots act as zero
        std::vector<K> q = a.unit_vector;
        // build prod (z - r) as an element? rather: remaining ideal = image of
        // prod L_{z-r}; compute complement via kernel of the product map from
        // the other side: elements killed by no root: use the polynomial
        // p(x) / prod(x - r): remaining = kernel of L_{that evaluated at z}
        {
            KPoly<K> rem = p;
            for (const auto& r : roots) {
                KPoly<K> lin = {-r, a.alg.zero.one_like()};
                auto [quo, rest] = kpoly_divmod(rem, lin, a.alg.zero);
                kpoly_trim(rest);
                if (!rest.empty()) throw std::logic_error("split_components: root division");
                rem = quo;
            }
            if (rem.size() > 1) {
                // evaluate rem at z: sum rem[i] z^i
                std::vector<K> val(a.dim(), a.alg.zero);
                std::vector<K> zp = a.unit_vector;
                for (size_t i = 0; i < rem.size(); ++i) {
                    for (size_t t = 0; t < a.dim(); ++t) val[t] = val[t] + zp[t] * rem[i];
                    zp = a.alg.mul(zp, z);
                }
                auto lm = a.alg.left_mult_matrix(val);
                auto comp = lm.kernel();
                if (!comp.empty()) {
                    auto sub = subalgebra_structure_ideal(a, comp);
                    split_components(sub, rng, out, depth + 1);
                }
            }
        }
        return;
    }
    out.complete = false;
    out.blocks.push_back({a.dim(), cdim});
}

// an ideal of a semisimple algebra is unital with its own identity: find it
// by solving e*x = x for all basis x of the ideal
template <CoeffField K>
AlgebraWithUnit<K> subalgebra_structure_ideal(const AlgebraWithUnit<K>& amb,
                                              const std::vector<std::vector<K>>& ideal_basis) {
    size_t d = ideal_basis.size(), n = amb.dim();
    Matrix<K> bm(n, d, amb.alg.zero);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < n; ++i) bm.at(i, j) = ideal_basis[j][i];
    AlgebraWithUnit<K> out{FinDimAlgebra<K>(amb.alg.zero), {}};
    out.alg.basis.resize(d);
    for (size_t i = 0; i < d; ++i) out.alg.basis[i] = "e" + std::to_string(i);
    out.alg.unit = -1;
    out.alg.sc.assign(d, std::vector<std::vector<K>>(d, std::vector<K>(d, amb.alg.zero)));
    std::vector<std::vector<K>> rhs;
    rhs.reserve(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) rhs.push_back(amb.alg.mul(ideal_basis[i], ideal_basis[j]));
    auto sols = bm.solve_many(rhs);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (!sols[i * d + j]) throw std::logic_error("subalgebra_structure_ideal: not an ideal");
            out.alg.sc[i][j] = std::move(*sols[i * d + j]);
        }
    // unit: solve sum c_j (b_j * b_i) = b_i for all i
    Matrix<K> sys(n * d, d, amb.alg.zero);
    std::vector<K> unit_rhs(n * d, amb.alg.zero);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            auto prod = amb.alg.mul(ideal_basis[j], ideal_basis[i]);
            for (size_t r = 0; r < n; ++r) sys.at(i * n + r, j) = prod[r];
        }
        for (size_t r = 0; r < n; ++r) unit_rhs[i * n + r] = ideal_basis[i][r];
    }
    auto e = sys.solve(unit_rhs);
    if (!e) throw std::logic_error("subalgebra_structure_ideal: no unit");
    out.unit_vector = *e;
    return out;
}

}  // namespace detail

/// d_*: the largest irreducible matrix-representation dimension over an
/// algebraic closure. Radical via the trace form (characteristic zero),
/// semisimple quotient, center split by rational roots of central minimal
/// polynomials; certified Bounds when a center resists splitting.
template <CoeffField K>
DStarResult d_star_algebra(const AlgebraWithUnit<K>& a, unsigned seed = 0) {
    std::mt19937_64 rng(seed);
    auto radical = detail::trace_form_radical(a);
    AlgebraWithUnit<K> ss = radical.empty() ? a : detail::quotient_by_radical(a, radical);
    detail::SplitOutcome<K> out;
    detail::split_components(ss, rng, out);
    DStarResult res;
    res.blocks = out.blocks;
    res.exact = out.complete;
    int best = 0, worst = 0;
    for (auto [dim, cdim] : out.blocks) {
        if (out.complete || cdim == 1 || dim % cdim == 0) {
            size_t over_center = dim / std::max<size_t>(cdim, 1);
            int d = 1;
            while (static_cast<size_t>(d) * d < over_center) ++d;
            if (static_cast<size_t>(d) * d == over_center) {
                best = std::max(best, d);
                worst = std::max(worst, d);
                continue;
            }
        }
        // unsplit block: bounds only
        res.exact = false;
        int up = 1;
        while (static_cast<size_t>(up) * up < dim) ++up;
        worst = std::max(worst, up);
        best = std::max(best, 1);
    }
    res.lower = best;
    res.upper = worst;
    if (res.exact) res.value = best;
    return res;
}

template <CoeffField K>
DStarResult d_star_algebra(const FinDimAlgebra<K>& alg, unsigned seed = 0) {
    if (!alg.has_basis_unit()) throw std::domain_error("d_star_algebra: unit required");
    AlgebraWithUnit<K> a{alg, alg.unit_vec()};
    return d_star_algebra(a, seed);
}

struct MonotonicityReport {
    int trials = 0;
    int violations = 0;
    int bounds_cases = 0;  // trials where d_*(B) came back as Bounds
    std::vector<std::string> notes;
};

/// Randomized check of d_*(B) <= d_*(A) for A a sum of matrix algebras over Q
/// and B a random unital subalgebra (closure of a few random elements).
inline MonotonicityReport subalgebra_monotonicity_harness(int trials, unsigned seed) {
    using K = Rational;
    MonotonicityReport rep;
    std::mt19937_64 master(seed);
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(master());
        int summands = 1 + static_cast<int>(rng() % 3);
        std::vector<int> sizes;
        AlgebraWithUnit<K> a = matrix_algebra_with_unit(1 + static_cast<int>(rng() % 4), Rational(1));
        sizes.push_back(static_cast<int>(std::sqrt(static_cast<double>(a.dim()))));
        for (int s = 1; s < summands; ++s) {
            int n = 1 + static_cast<int>(rng() % 4);
            sizes.push_back(n);
            a = direct_sum(a, matrix_algebra_with_unit(n, Rational(1)));
        }
        int da = 0;
        for (int n : sizes) da = std::max(da, n);
        // random unital subalgebra
        int gens = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<K>> seedvecs = {a.unit_vector};
        for (int g = 0; g < gens; ++g) {
            std::vector<K> v(a.dim(), Rational());
            for (size_t i = 0; i < a.dim(); ++i)
                v[i] = Rational(static_cast<long>(rng() % 5) - 2);
            seedvecs.push_back(std::move(v));
        }
        auto basis = close_subalgebra(a.alg, seedvecs);
        auto b = subalgebra_structure(a.alg, basis, a.unit_vector);
        auto res = d_star_algebra(b, static_cast<unsigned>(rng()));
        ++rep.trials;
        if (res.exact) {
            if (res.value > da) {
                ++rep.violations;
                rep.notes.push_back("violation at trial " + std::to_string(t));
            }
        } else {
            ++rep.bounds_cases;
            if (res.lower > da) {
                ++rep.violations;
                rep.notes.push_back("lower-bound violation at trial " + std::to_string(t));
            }
        }
    }
    return rep;
}

}  // namespace exalg
