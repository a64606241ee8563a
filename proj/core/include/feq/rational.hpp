#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "feq/errors.hpp"

namespace feq {

using Int = mpz_class;

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);
Int int_pow(const Int& base, unsigned long e);
/// floor(sqrt(n)) for n >= 0.
Int int_isqrt(const Int& n);

/// Arbitrary-precision rational number, always canonical:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    /// Parses "n", "-n" or "n/d"; throws DivisionByZero on zero denominator.
    explicit Rational(const std::string& text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational reciprocal() const;
    /// x^e with integer e; negative e inverts (throws DivisionByZero on 0).
    Rational pow(long e) const;

    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

/// C(n, k) as an exact rational.
Rational binomial(int n, int k);

} // namespace feq
