#pragma once

#include <string>
#include <utility>

#include "feq/rational.hpp"

namespace feq {

/// Dyadic number man * 2^exp with arbitrary-precision mantissa.
/// Canonical: man is odd or zero; zero has exp = 0. Addition and
/// multiplication are exact; rounding happens only when asked for.
class Dyadic {
public:
    Dyadic() : man_(0), exp_(0) {}
    Dyadic(long v) : man_(v), exp_(0) { normalize(); }
    Dyadic(Int man, long exp) : man_(std::move(man)), exp_(exp) { normalize(); }

    const Int& mantissa() const { return man_; }
    long exponent() const { return exp_; }

    bool is_zero() const { return sgn(man_) == 0; }
    int sign() const { return sgn(man_); }
    Dyadic neg() const { return Dyadic(-man_, exp_); }
    Dyadic abs() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a) { return a.neg(); }

    /// Exact three-way comparison.
    static int compare(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return compare(a, b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

    /// Smallest e with |x| < 2^e (and |x| >= 2^(e-1)); 0 for x = 0.
    long mag_bits() const;

    /// Round to `prec` mantissa bits (to nearest). *err, when given, receives
    /// an upper bound on |x - result|.
    Dyadic round_nearest(long prec, Dyadic* err = nullptr) const;
    /// Returns r >= |x| with at most `prec` mantissa bits.
    Dyadic round_up_mag(long prec) const;

    /// Approximate quotient a/b with about `prec` significant bits.
    /// No error accounting; for heuristic iteration only.
    static Dyadic div_approx(const Dyadic& a, const Dyadic& b, long prec);

    /// lb, ub with lb <= sqrt(x) <= ub, relative gap about 2^-prec. Pre: x >= 0.
    static std::pair<Dyadic, Dyadic> sqrt_bounds(const Dyadic& x, long prec);

    Rational to_rational() const;
    static Dyadic power_of_two(long e) { return Dyadic(Int(1), e); }
    /// Nearest dyadic with `prec` significant bits; *err bounds |q - result|.
    static Dyadic from_rational(const Rational& q, long prec, Dyadic* err = nullptr);

    double to_double() const;
    /// Plain decimal rendering with the given number of significant digits.
    std::string decimal(int sig_digits) const;

private:
    void normalize();
    Int man_;
    long exp_;
};

} // namespace feq
