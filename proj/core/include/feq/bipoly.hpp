#pragma once

#include <map>
#include <utility>
#include <vector>

#include "feq/rational.hpp"

namespace feq {

/// Sparse bivariate polynomial over a scalar ring S (exact rationals or
/// number-field elements). No zero coefficient is ever stored.
/// S needs +, -, *, *(Rational) and is_zero().
template <class S>
class BiPoly {
public:
    using Key = std::pair<int, int>; // (x exponent, y exponent)

    BiPoly() = default;

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, S>& terms() const { return c_; }

    void add_term(int xe, int ye, const S& coeff) {
        if (coeff.is_zero()) return;
        const Key k{xe, ye};
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, v] : o.c_) add_term(k.first, k.second, v);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, v] : o.c_) add_term(k.first, k.second, v * Rational(-1));
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }

    BiPoly scaled(const Rational& s) const {
        BiPoly r;
        for (const auto& [k, v] : c_) r.add_term(k.first, k.second, v * s);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        auto ia = a.c_.begin(), ib = b.c_.begin();
        for (; ia != a.c_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!(ia->second - ib->second).is_zero()) return false;
        }
        return true;
    }

private:
    std::map<Key, S> c_;
};

/// Exact expansion of sum_k f[k] * (ax*x + by*y)^k by the binomial theorem.
template <class S>
BiPoly<S> expand_composite(const std::vector<S>& f, const S& ax, const S& by) {
    BiPoly<S> out;
    if (f.empty()) return out;
    const int deg = static_cast<int>(f.size()) - 1;
    // apow[j-1] = ax^j, bpow[j-1] = by^j
    std::vector<S> apow{ax}, bpow{by};
    for (int j = 1; j < deg; ++j) {
        apow.push_back(apow.back() * ax);
        bpow.push_back(bpow.back() * by);
    }
    for (int k = 0; k <= deg; ++k) {
        if (f[static_cast<size_t>(k)].is_zero()) continue;
        for (int j = 0; j <= k; ++j) {
            S term = f[static_cast<size_t>(k)] * binomial(k, j);
            if (j > 0) term = term * apow[static_cast<size_t>(j - 1)];
            if (k - j > 0) term = term * bpow[static_cast<size_t>(k - j - 1)];
            out.add_term(j, k - j, term);
        }
    }
    return out;
}

} // namespace feq
