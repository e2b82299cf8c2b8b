#pragma once

#include "exalg/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace exalg {

template <class K>
concept CoeffField = requires(const K& a, const K& b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inv() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a.zero_like() } -> std::same_as<K>;
    { a.one_like() } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
};

/// Multivariate polynomial over a coefficient field K. Terms are kept in a
/// map from exponent vector to nonzero coefficient; exponent vectors all have
/// length nvars. The zero coefficient prototype carries field context
/// (cyclotomic order etc.) for fields that need it.
template <CoeffField K>
class MPoly {
public:
    using Exps = std::vector<int>;

    MPoly(int nvars, K proto) : nvars_(nvars), proto_(proto.zero_like()) {}

    static MPoly zero(int nvars, const K& proto) { return MPoly(nvars, proto); }
    static MPoly constant(int nvars, const K& c) {
        MPoly p(nvars, c);
        if (!c.is_zero()) p.terms_.emplace(Exps(nvars, 0), c);
        return p;
    }
    static MPoly variable(int nvars, int v, const K& one) {
        MPoly p(nvars, one);
        Exps e(nvars, 0);
        e[v] = 1;
        p.terms_.emplace(e, one.one_like());
        return p;
    }
    static MPoly monomial(int nvars, const Exps& e, const K& c) {
        MPoly p(nvars, c);
        if (!c.is_zero()) p.terms_.emplace(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    const K& proto() const { return proto_; }
    const std::map<Exps, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
    }
    bool is_one() const {
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
               terms_.begin()->second.is_one();
    }
    K constant_value() const {
        if (terms_.empty()) return proto_;
        return terms_.begin()->second;
    }

    static int total_degree(const Exps& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }
    int degree_in(int v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

    void add_term(const Exps& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(nvars_, proto_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r(nvars_, proto_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exps e(nvars_);
                for (int v = 0; v < nvars_; ++v) e[v] = e1[v] + e2[v];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MPoly operator*(const K& s) const {
        MPoly r(nvars_, proto_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const { return terms_ < o.terms_; }

    MPoly pow(int k) const {
        MPoly acc = constant(nvars_, proto_.one_like());
        MPoly base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Leading term in degree-lexicographic order (total degree first, then lex).
    std::pair<Exps, K> leading_term() const {
        if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
            if (deglex_less(best->first, it->first)) best = it;
        }
        return {best->first, best->second};
    }

    static bool deglex_less(const Exps& a, const Exps& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }

    K eval(const std::vector<K>& point) const {
        K acc = proto_;
        for (const auto& [e, c] : terms_) {
            K term = c;
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[v]; ++k) term = term * point[v];
            acc = acc + term;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c) << ")";
            for (int v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                os << "*" << names[v];
                if (e[v] > 1) os << "^" << e[v];
            }
        }
        return os.str();
    }

private:
    template <class C>
    static std::string coeff_str(const C& c) {
        std::ostringstream os;
        os << c;
        return os.str();
    }

    int nvars_;
    K proto_;
    std::map<Exps, K> terms_;
};

namespace detail {

// -- recursive multivariate exact division and subresultant-PRS gcd --

// Univariate view in variable v: degree -> coefficient polynomial (exponent of v zeroed).
template <CoeffField K>
std::map<int, MPoly<K>> univariate_view(const MPoly<K>& p, int v) {
    std::map<int, MPoly<K>> out;
    for (const auto& [e, c] : p.terms()) {
        auto e0 = e;
        int d = e0[v];
        e0[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, MPoly<K>::zero(p.nvars(), p.proto())).first;
        it->second.add_term(e0, c);
    }
    return out;
}

template <CoeffField K>
MPoly<K> from_univariate(int nvars, const K& proto, int v, const std::map<int, MPoly<K>>& u) {
    MPoly<K> out = MPoly<K>::zero(nvars, proto);
    for (const auto& [d, coeff] : u) {
        for (const auto& [e, c] : coeff.terms()) {
            auto e2 = e;
            e2[v] += d;
            out.add_term(e2, c);
        }
    }
    return out;
}

template <CoeffField K>
int top_variable(const MPoly<K>& a, const MPoly<K>& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

template <CoeffField K>
MPoly<K> mpoly_divexact(const MPoly<K>& num, const MPoly<K>& den);

// Long division in variable v assuming exactness of every leading-coefficient step.
template <CoeffField K>
MPoly<K> divexact_univariate(const MPoly<K>& num, const MPoly<K>& den, int v) {
    auto n = univariate_view(num, v);
    auto d = univariate_view(den, v);
    int dd = d.empty() ? -1 : d.rbegin()->first;
    if (dd < 0) throw std::domain_error("mpoly divexact: zero divisor");
    const MPoly<K>& dl = d.rbegin()->second;
    MPoly<K> quotient = MPoly<K>::zero(num.nvars(), num.proto());
    MPoly<K> rem = num;
    while (!rem.is_zero()) {
        auto r = univariate_view(rem, v);
        int rd = r.rbegin()->first;
        if (rd < dd) throw std::domain_error("mpoly divexact: inexact (degree)");
        MPoly<K> qc = mpoly_divexact(r.rbegin()->second, dl);
        MPoly<K> qterm = MPoly<K>::zero(num.nvars(), num.proto());
        for (const auto& [e, c] : qc.terms()) {
            auto e2 = e;
            e2[v] += rd - dd;
            qterm.add_term(e2, c);
        }
        quotient += qterm;
        rem -= qterm * den;
        if (!rem.is_zero() && univariate_view(rem, v).rbegin()->first >= rd)
            throw std::domain_error("mpoly divexact: no progress");
    }
    return quotient;
}

template <CoeffField K>
MPoly<K> mpoly_divexact(const MPoly<K>& num, const MPoly<K>& den) {
    if (den.is_zero()) throw std::domain_error("mpoly divexact: zero divisor");
    if (num.is_zero()) return num;
    if (den.is_constant()) {
        K inv = den.constant_value().inv();
        return num * inv;
    }
    int v = top_variable(num, den);
    return divexact_univariate(num, den, v);
}

template <CoeffField K>
MPoly<K> mpoly_gcd(const MPoly<K>& a, const MPoly<K>& b);

// gcd of the coefficients of the univariate view (the content w.r.t. v).
template <CoeffField K>
MPoly<K> content_in(const std::map<int, MPoly<K>>& u, int nvars, const K& proto) {
    MPoly<K> g = MPoly<K>::zero(nvars, proto);
    for (const auto& [d, c] : u) g = mpoly_gcd(g, c);
    return g;
}

// Pseudo-remainder prem(F, G) = lc(G)^(dF-dG+1) * F mod G, in variable v.
template <CoeffField K>
std::map<int, MPoly<K>> prem(std::map<int, MPoly<K>> f, const std::map<int, MPoly<K>>& g, int v,
                             int nvars, const K& proto) {
    int dg = g.rbegin()->first;
    const MPoly<K>& lg = g.rbegin()->second;
    auto deg = [](const std::map<int, MPoly<K>>& p) { return p.empty() ? -1 : p.rbegin()->first; };
    int df = deg(f);
    int steps = df - dg + 1;
    for (int s = 0; s < steps; ++s) {
        int d = deg(f);
        if (d < dg) {
            // multiply remaining factor of lc(G) to keep the subresultant bookkeeping exact
            for (auto& [dd, c] : f) c *= lg;
            continue;
        }
        MPoly<K> lf = f.rbegin()->second;
        // f = lg*f - lf * x^(d-dg) * g
        std::map<int, MPoly<K>> nf;
        for (const auto& [dd, c] : f) {
            if (dd == d) continue;
            nf.insert_or_assign(dd, c * lg);
        }
        for (const auto& [dd, c] : g) {
            if (dd == dg) continue;  // cancels against dropped leading term of f
            int target = dd + d - dg;
            auto it = nf.find(target);
            if (it == nf.end())
                nf.insert_or_assign(target, -(lf * c));
            else {
                it->second -= lf * c;
                if (it->second.is_zero()) nf.erase(it);
            }
        }
        // leading terms lg*lf*x^d cancel by construction
        f = std::move(nf);
        for (auto it = f.begin(); it != f.end();) {
            if (it->second.is_zero()) it = f.erase(it); else ++it;
        }
    }
    return f;
}

// Subresultant polynomial remainder sequence gcd of primitive parts.
template <CoeffField K>
MPoly<K> gcd_primitive(std::map<int, MPoly<K>> f, std::map<int, MPoly<K>> g, int v, int nvars,
                       const K& proto) {
    auto deg = [](const std::map<int, MPoly<K>>& p) { return p.empty() ? -1 : p.rbegin()->first; };
    if (deg(f) < deg(g)) std::swap(f, g);
    MPoly<K> one = MPoly<K>::constant(nvars, proto.one_like());
    MPoly<K> gg = one, hh = one;
    while (true) {
        int df = deg(f), dg = deg(g);
        int delta = df - dg;
        auto r = prem(f, g, v, nvars, proto);
        if (r.empty()) break;
        if (deg(r) == 0) {
            // gcd is a constant in v: primitive part is 1
            g.clear();
            g.insert_or_assign(0, one);
            break;
        }
        MPoly<K> beta = gg * hh.pow(delta);
        for (auto& [d, c] : r) c = mpoly_divexact(c, beta);
        f = std::move(g);
        g = std::move(r);
        gg = f.rbegin()->second;
        if (delta > 0) {
            MPoly<K> num = gg.pow(delta);
            hh = delta == 1 ? num : mpoly_divexact(num, hh.pow(delta - 1));
        }
    }
    // primitive part of g
    MPoly<K> cont = content_in(g, nvars, proto);
    MPoly<K> result = MPoly<K>::zero(nvars, proto);
    for (auto& [d, c] : g) {
        MPoly<K> q = mpoly_divexact(c, cont);
        for (const auto& [e, cc] : q.terms()) {
            auto e2 = e;
            e2[v] += d;
            result.add_term(e2, cc);
        }
    }
    return result;
}

// Normalize so the deglex-leading coefficient is one.
template <CoeffField K>
MPoly<K> monic_normalize(const MPoly<K>& p) {
    if (p.is_zero()) return p;
    auto [e, c] = p.leading_term();
    if (c.is_one()) return p;
    return p * c.inv();
}

template <CoeffField K>
MPoly<K> mpoly_gcd(const MPoly<K>& a, const MPoly<K>& b) {
    if (a.is_zero()) return monic_normalize(b);
    if (b.is_zero()) return monic_normalize(a);
    if (a.is_constant() || b.is_constant())
        return MPoly<K>::constant(a.nvars(), a.proto().one_like());
    int v = top_variable(a, b);
    auto ua = univariate_view(a, v);
    auto ub = univariate_view(b, v);
    MPoly<K> ca = content_in(ua, a.nvars(), a.proto());
    MPoly<K> cb = content_in(ub, a.nvars(), a.proto());
    for (auto& [d, c] : ua) c = mpoly_divexact(c, ca);
    for (auto& [d, c] : ub) c = mpoly_divexact(c, cb);
    MPoly<K> cg = mpoly_gcd(ca, cb);
    MPoly<K> pg = gcd_primitive(std::move(ua), std::move(ub), v, a.nvars(), a.proto());
    return monic_normalize(cg * pg);
}

}  // namespace detail

template <CoeffField K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b) {
    return detail::mpoly_gcd(a, b);
}

template <CoeffField K>
MPoly<K> divexact(const MPoly<K>& num, const MPoly<K>& den) {
    return detail::mpoly_divexact(num, den);
}

/// Perfect-square test for polynomials that are univariate in one of their
/// variables (or constant); fills *root on success.
template <CoeffField K>
bool mpoly_is_square(const MPoly<K>& p, MPoly<K>* root, bool (*coeff_sqrt)(const K&, K*)) {
    if (p.is_zero()) {
        if (root) *root = p;
        return true;
    }
    int used = -1;
    for (int v = 0; v < p.nvars(); ++v) {
        if (p.degree_in(v) > 0) {
            if (used >= 0) return false;  // genuinely multivariate: unsupported
            used = v;
        }
    }
    if (used < 0) {
        K r = p.proto();
        if (!coeff_sqrt(p.constant_value(), &r)) return false;
        if (root) *root = MPoly<K>::constant(p.nvars(), r);
        return true;
    }
    auto u = detail::univariate_view(p, used);
    int d = u.rbegin()->first;
    if (d % 2 != 0) return false;
    // coefficient matching from the top; all coefficients are constants here
    std::vector<K> c(d + 1, p.proto());
    for (const auto& [deg, coeff] : u) c[deg] = coeff.constant_value();
    int h = d / 2;
    std::vector<K> s(h + 1, p.proto());
    K lead_root = p.proto();
    if (!coeff_sqrt(c[d], &lead_root)) return false;
    s[h] = lead_root;
    K two_lead_inv = (lead_root + lead_root).inv();
    for (int i = h - 1; i >= 0; --i) {
        // coefficient of x^(i+h) in s^2 must equal c[i+h]
        K acc = c[i + h];
        for (int j = i + 1; j < h; ++j) {
            int other = i + h - j;
            if (other > h || other < 0) continue;
            acc = acc - s[j] * s[other];
        }
        s[i] = acc * two_lead_inv;
    }
    // verify
    MPoly<K> cand = MPoly<K>::zero(p.nvars(), p.proto());
    for (int i = 0; i <= h; ++i) {
        std::vector<int> e(p.nvars(), 0);
        e[used] = i;
        cand.add_term(e, s[i]);
    }
    if (cand * cand == p) {
        if (root) *root = cand;
        return true;
    }
    return false;
}

}  // namespace exalg
