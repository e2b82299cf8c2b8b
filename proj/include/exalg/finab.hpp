#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace exalg {

/// Finite abelian group in invariant-factor form n_1 | n_2 | ... | n_k.
/// Elements are indexed 0..size-1 via mixed-radix encoding of their tuples.
class FinAb {
public:
    explicit FinAb(std::vector<long> invariant_factors) : factors_(std::move(invariant_factors)) {
        size_ = 1;
        for (size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 1) throw std::domain_error("FinAb: factors must be >= 1");
            if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
                throw std::domain_error("FinAb: invariant factors must divide in turn");
            size_ *= factors_[i];
        }
    }

    const std::vector<long>& factors() const { return factors_; }
    size_t rank() const { return factors_.size(); }
    long size() const { return size_; }
    long exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    std::vector<long> decode(long idx) const {
        std::vector<long> t(factors_.size());
        for (size_t i = 0; i < factors_.size(); ++i) {
            t[i] = idx % factors_[i];
            idx /= factors_[i];
        }
        return t;
    }
    long encode(const std::vector<long>& t) const {
        long idx = 0;
        for (size_t i = factors_.size(); i-- > 0;) {
            long c = t[i] % factors_[i];
            if (c < 0) c += factors_[i];
            idx = idx * factors_[i] + c;
        }
        return idx;
    }

    long zero() const { return 0; }
    long add(long a, long b) const {
        auto ta = decode(a), tb = decode(b);
        for (size_t i = 0; i < factors_.size(); ++i) ta[i] = (ta[i] + tb[i]) % factors_[i];
        return encode(ta);
    }
    long neg(long a) const {
        auto t = decode(a);
        for (size_t i = 0; i < factors_.size(); ++i) t[i] = (factors_[i] - t[i]) % factors_[i];
        return encode(t);
    }
    long sub(long a, long b) const { return add(a, neg(b)); }
    long smul(long k, long a) const {
        auto t = decode(a);
        for (size_t i = 0; i < factors_.size(); ++i) {
            long c = (k % factors_[i]) * t[i] % factors_[i];
            t[i] = c < 0 ? c + factors_[i] : c;
        }
        return encode(t);
    }
    long order_of(long a) const {
        long k = 1;
        long x = a;
        while (x != 0) {
            x = add(x, a);
            ++k;
        }
        return k;
    }

    /// Pairing A^dual x A -> Z_n (n = exponent): <y, x> = sum_i y_i x_i n/n_i.
    long pairing(long dual_idx, long idx) const {
        long n = exponent();
        auto y = decode(dual_idx), x = decode(idx);
        long acc = 0;
        for (size_t i = 0; i < factors_.size(); ++i)
            acc = (acc + y[i] * x[i] % n * (n / factors_[i])) % n;
        return acc;
    }

    /// Subgroup generated by a set of element indices.
    std::vector<long> span(const std::vector<long>& gens) const {
        std::vector<bool> in(size_, false);
        in[0] = true;
        std::vector<long> frontier = {0};
        while (!frontier.empty()) {
            std::vector<long> next;
            for (long a : frontier)
                for (long g : gens) {
                    long s = add(a, g);
                    if (!in[s]) {
                        in[s] = true;
                        next.push_back(s);
                    }
                }
            frontier = std::move(next);
        }
        std::vector<long> out;
        for (long i = 0; i < size_; ++i)
            if (in[i]) out.push_back(i);
        return out;
    }

    bool operator==(const FinAb& o) const { return factors_ == o.factors_; }

    std::string str() const {
        std::string s = "Z[";
        for (size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(factors_[i]);
        }
        return s + "]";
    }

private:
    std::vector<long> factors_;
    long size_;
};

}  // namespace exalg
