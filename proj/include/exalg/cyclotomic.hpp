#pragma once

#include "exalg/rational.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

namespace exalg {

namespace detail {

// Dense univariate polynomials over Rational, ascending coefficients, used for
// cyclotomic modulus arithmetic. Trailing zeros trimmed.
using UPoly = std::vector<Rational>;

inline void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    upoly_trim(r);
    return r;
}

inline UPoly upoly_sub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    upoly_trim(a);
    return a;
}

// Exact division, throws if the remainder is nonzero.
inline UPoly upoly_divexact(UPoly num, const UPoly& den) {
    if (den.empty()) throw std::domain_error("upoly: division by zero");
    UPoly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0);
    while (num.size() >= den.size()) {
        size_t shift = num.size() - den.size();
        Rational c = num.back() / den.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        upoly_trim(num);
        if (!num.empty() && num.size() >= den.size() && num.back().is_zero())
            throw std::logic_error("upoly_divexact: trim failure");
    }
    if (!num.empty()) throw std::domain_error("upoly_divexact: inexact division");
    upoly_trim(q);
    return q;
}

// Remainder of num modulo den.
inline UPoly upoly_mod(UPoly num, const UPoly& den) {
    while (num.size() >= den.size()) {
        size_t shift = num.size() - den.size();
        Rational c = num.back() / den.back();
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        upoly_trim(num);
    }
    return num;
}

inline int euler_phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Cyclotomic polynomial Phi_e, cached. Computed as (x^e - 1) / prod_{d|e, d<e} Phi_d.
inline const UPoly& cyclotomic_polynomial(int e) {
    static std::map<int, UPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    std::function<UPoly(int)> compute = [&](int n) -> UPoly {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        UPoly p(n + 1);
        p[0] = Rational(-1);
        p[n] = Rational(1);
        for (int d = 1; d < n; ++d)
            if (n % d == 0) p = upoly_divexact(p, compute(d));
        cache[n] = p;
        return p;
    };
    compute(e);
    return cache.at(e);
}

}  // namespace detail

/// Element of the cyclotomic field Q(zeta_e), stored as a residue modulo Phi_e.
/// Coefficient vector has fixed length phi(e); equality is coefficient-wise.
class Cyclotomic {
public:
    explicit Cyclotomic(int order) : order_(order), c_(detail::euler_phi(order)) {
        if (order < 1) throw std::domain_error("Cyclotomic: order must be >= 1");
    }

    Cyclotomic(int order, const Rational& r) : Cyclotomic(order) { c_[0] = r; }

    /// Canonical generator zeta_e^k (k may be negative).
    static Cyclotomic zeta(int order, long k = 1) {
        k %= order;
        if (k < 0) k += order;
        Cyclotomic z(order);
        // reduce x^k modulo Phi_order
        detail::UPoly raw(static_cast<size_t>(k) + 1);
        raw[k] = Rational(1);
        z.assign_reduced(raw);
        return z;
    }

    /// Reduces an arbitrary polynomial in zeta (ascending coefficients) modulo Phi_e.
    static Cyclotomic from_poly(int order, const std::vector<Rational>& raw) {
        Cyclotomic z(order);
        detail::UPoly p = raw;
        detail::upoly_trim(p);
        z.assign_reduced(p);
        return z;
    }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    const Rational& rational_part() const { return c_[0]; }

    Cyclotomic zero_like() const { return Cyclotomic(order_); }
    Cyclotomic one_like() const { return Cyclotomic(order_, Rational(1)); }

    Cyclotomic operator-() const {
        Cyclotomic r(order_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    Cyclotomic operator+(const Cyclotomic& o) const {
        check(o);
        Cyclotomic r(order_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Cyclotomic operator-(const Cyclotomic& o) const {
        check(o);
        Cyclotomic r(order_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Cyclotomic operator*(const Cyclotomic& o) const {
        check(o);
        detail::UPoly a(c_.begin(), c_.end()), b(o.c_.begin(), o.c_.end());
        detail::upoly_trim(a);
        detail::upoly_trim(b);
        Cyclotomic r(order_);
        r.assign_reduced(detail::upoly_mul(a, b));
        return r;
    }
    Cyclotomic operator*(const Rational& s) const {
        Cyclotomic r(order_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inv(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Inverse via extended Euclid against Phi_e.
    Cyclotomic inv() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
        using detail::UPoly;
        UPoly a(c_.begin(), c_.end());
        detail::upoly_trim(a);
        UPoly b = detail::cyclotomic_polynomial(order_);
        // extended euclid: find u with u*a = gcd (mod Phi)
        UPoly r0 = b, r1 = a;
        UPoly s0 = {}, s1 = {Rational(1)};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            UPoly q;
            UPoly rem = r0;
            while (rem.size() >= r1.size() && !rem.empty()) {
                size_t shift = rem.size() - r1.size();
                Rational c = rem.back() / r1.back();
                if (q.size() < shift + 1) q.resize(shift + 1);
                q[shift] += c;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                detail::upoly_trim(rem);
            }
            UPoly s2 = detail::upoly_sub(s0, detail::upoly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd (a unit since Phi_e is irreducible and a != 0 mod Phi)
        if (r0.size() != 1) throw std::logic_error("Cyclotomic::inv: gcd not constant");
        Rational lead = r0[0];
        Cyclotomic result(order_);
        UPoly u = s0;
        for (auto& x : u) x /= lead;
        result.assign_reduced(u);
        return result;
    }

    Cyclotomic pow(long k) const {
        Cyclotomic base = *this;
        if (k < 0) {
            base = base.inv();
            k = -k;
        }
        Cyclotomic acc = one_like();
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    bool operator==(const Cyclotomic& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    bool operator<(const Cyclotomic& o) const {
        if (order_ != o.order_) return order_ < o.order_;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << c_[i].str();
            if (i > 0) os << "*z" << order_ << "^" << i;
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

private:
    void check(const Cyclotomic& o) const {
        if (order_ != o.order_) throw std::domain_error("Cyclotomic: mixed orders");
    }

    void assign_reduced(const detail::UPoly& raw) {
        detail::UPoly r = detail::upoly_mod(raw, detail::cyclotomic_polynomial(order_));
        for (size_t i = 0; i < c_.size(); ++i) c_[i] = i < r.size() ? r[i] : Rational();
    }

    int order_;
    std::vector<Rational> c_;
};

/// Reduction of a raw polynomial in zeta_e to the canonical representative.
inline Cyclotomic cyclotomic_reduce(int e, const std::vector<Rational>& raw) {
    return Cyclotomic::from_poly(e, raw);
}

}  // namespace exalg
