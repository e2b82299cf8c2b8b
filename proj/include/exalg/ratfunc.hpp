#pragma once

#include "exalg/mpoly.hpp"

#include <optional>

namespace exalg {

/// Fraction field element num/den over MPoly<K>, kept in canonical form:
/// gcd(num, den) = 1 and den has deglex-leading coefficient one, so equality
/// is plain componentwise comparison.
template <CoeffField K>
class RatFunc {
public:
    explicit RatFunc(const MPoly<K>& num)
        : num_(num), den_(MPoly<K>::constant(num.nvars(), num.proto().one_like())) {}
    RatFunc(MPoly<K> num, MPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc zero(int nvars, const K& proto) {
        return RatFunc(MPoly<K>::zero(nvars, proto));
    }
    static RatFunc constant(int nvars, const K& c) { return RatFunc(MPoly<K>::constant(nvars, c)); }
    static RatFunc variable(int nvars, int v, const K& one) {
        return RatFunc(MPoly<K>::variable(nvars, v, one));
    }

    const MPoly<K>& num() const { return num_; }
    const MPoly<K>& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc zero_like() const { return RatFunc(MPoly<K>::zero(num_.nvars(), num_.proto())); }
    RatFunc one_like() const {
        return RatFunc(MPoly<K>::constant(num_.nvars(), num_.proto().one_like()));
    }

    RatFunc operator-() const { return RatFunc(unchecked{}, -num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    /// Evaluation at a point of K^nvars; nullopt when the denominator vanishes.
    std::optional<K> eval(const std::vector<K>& point) const {
        K d = den_.eval(point);
        if (d.is_zero()) return std::nullopt;
        return num_.eval(point) * d.inv();
    }

    std::string str(const std::vector<std::string>& names) const {
        if (den_.is_one()) return num_.str(names);
        return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
    }

private:
    struct unchecked {};
    RatFunc(unchecked, MPoly<K> num, MPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = MPoly<K>::constant(num_.nvars(), num_.proto().one_like());
            return;
        }
        if (!den_.is_one()) {
            MPoly<K> g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = divexact(num_, g);
                den_ = divexact(den_, g);
            }
        }
        auto [e, lc] = den_.leading_term();
        if (!lc.is_one()) {
            K s = lc.inv();
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }

    MPoly<K> num_;
    MPoly<K> den_;
};

}  // namespace exalg
