#pragma once

#include "feq/dyadic.hpp"
#include "feq/rational.hpp"

namespace feq {

/// Complex midpoint-radius enclosure: the closed disc of radius `rad`
/// around re + im*i. Every operation returns a Ball containing all exact
/// results over the input discs (containment soundness); midpoints are
/// rounded to the working precision with the error folded into the radius.
class Ball {
public:
    Ball() = default;
    Ball(Dyadic re, Dyadic im, Dyadic rad);

    static Ball exact_int(long re);
    static Ball exact_point(Dyadic re, Dyadic im);
    /// Disc around the exact rational point; radius covers the midpoint rounding.
    static Ball from_rational(const Rational& re, const Rational& im, long prec);

    const Dyadic& re() const { return re_; }
    const Dyadic& im() const { return im_; }
    const Dyadic& rad() const { return rad_; }

    bool is_exact() const { return rad_.is_zero(); }
    bool contains_zero() const;
    bool excludes_zero() const { return !contains_zero(); }
    /// Exact membership test for a rational point.
    bool contains_point(const Rational& re, const Rational& im) const;

    /// Upper bound on |z| over the disc.
    Dyadic abs_upper() const;
    /// Lower bound on |z| over the disc (0 if the disc meets 0).
    Dyadic abs_lower() const;

    friend Ball ball_add(const Ball& a, const Ball& b, long prec);
    friend Ball ball_sub(const Ball& a, const Ball& b, long prec);
    friend Ball ball_neg(const Ball& a);
    friend Ball ball_mul(const Ball& a, const Ball& b, long prec);

private:
    Dyadic re_, im_, rad_;
};

Ball ball_add(const Ball& a, const Ball& b, long prec);
Ball ball_sub(const Ball& a, const Ball& b, long prec);
Ball ball_neg(const Ball& a);
Ball ball_mul(const Ball& a, const Ball& b, long prec);
Ball ball_pow(const Ball& a, unsigned long k, long prec);
/// Scale by an exact rational (coefficient application).
Ball ball_scale(const Rational& s, const Ball& a, long prec);

/// True when the discs share no point (exact test on squared distances).
bool balls_disjoint(const Ball& a, const Ball& b);

} // namespace feq
