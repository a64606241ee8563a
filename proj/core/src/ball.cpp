#include "feq/ball.hpp"

namespace feq {

namespace {

constexpr long kRadiusBits = 32; // radius mantissa cap; always rounded up

Dyadic mid_abs_upper(const Dyadic& re, const Dyadic& im) {
    const Dyadic s = re * re + im * im;
    return Dyadic::sqrt_bounds(s, 48).second;
}

Dyadic mid_abs_lower(const Dyadic& re, const Dyadic& im) {
    const Dyadic s = re * re + im * im;
    return Dyadic::sqrt_bounds(s, 48).first;
}

} // namespace

Ball::Ball(Dyadic re, Dyadic im, Dyadic rad)
    : re_(std::move(re)), im_(std::move(im)), rad_(std::move(rad)) {
    if (rad_.sign() < 0) throw Error("negative ball radius");
}

Ball Ball::exact_int(long re) { return Ball(Dyadic(re), Dyadic(), Dyadic()); }

Ball Ball::exact_point(Dyadic re, Dyadic im) {
    return Ball(std::move(re), std::move(im), Dyadic());
}

Ball Ball::from_rational(const Rational& re, const Rational& im, long prec) {
    Dyadic er, ei;
    Dyadic dre = Dyadic::from_rational(re, prec, &er);
    Dyadic dim = Dyadic::from_rational(im, prec, &ei);
    return Ball(std::move(dre), std::move(dim), (er + ei).round_up_mag(kRadiusBits));
}

bool Ball::contains_zero() const {
    return re_ * re_ + im_ * im_ <= rad_ * rad_;
}

bool Ball::contains_point(const Rational& re, const Rational& im) const {
    const Rational dr = re_.to_rational() - re;
    const Rational di = im_.to_rational() - im;
    const Rational r = rad_.to_rational();
    return dr * dr + di * di <= r * r;
}

Dyadic Ball::abs_upper() const { return mid_abs_upper(re_, im_) + rad_; }

Dyadic Ball::abs_lower() const {
    const Dyadic lb = mid_abs_lower(re_, im_) - rad_;
    return lb.sign() > 0 ? lb : Dyadic();
}

namespace {

Ball rounded(Dyadic re, Dyadic im, Dyadic rad, long prec) {
    Dyadic er, ei;
    re = re.round_nearest(prec, &er);
    im = im.round_nearest(prec, &ei);
    return Ball(std::move(re), std::move(im), (rad + er + ei).round_up_mag(kRadiusBits));
}

} // namespace

Ball ball_add(const Ball& a, const Ball& b, long prec) {
    return rounded(a.re_ + b.re_, a.im_ + b.im_, a.rad_ + b.rad_, prec);
}

Ball ball_sub(const Ball& a, const Ball& b, long prec) { return ball_add(a, ball_neg(b), prec); }

Ball ball_neg(const Ball& a) { return Ball(a.re_.neg(), a.im_.neg(), a.rad_); }

Ball ball_mul(const Ball& a, const Ball& b, long prec) {
    // (ma + da)(mb + db): |result - ma*mb| <= |ma| rb + |mb| ra + ra rb
    Dyadic re = a.re_ * b.re_ - a.im_ * b.im_;
    Dyadic im = a.re_ * b.im_ + a.im_ * b.re_;
    const Dyadic abs_a = mid_abs_upper(a.re_, a.im_);
    const Dyadic abs_b = mid_abs_upper(b.re_, b.im_);
    Dyadic rad = abs_a * b.rad_ + abs_b * a.rad_ + a.rad_ * b.rad_;
    return rounded(std::move(re), std::move(im), std::move(rad), prec);
}

Ball ball_pow(const Ball& a, unsigned long k, long prec) {
    if (k == 0) return Ball::exact_int(1);
    Ball acc = a;
    // square-and-multiply, most significant bit first
    int top = 63;
    while (top > 0 && !((k >> top) & 1UL)) --top;
    for (int i = top - 1; i >= 0; --i) {
        acc = ball_mul(acc, acc, prec);
        if ((k >> i) & 1UL) acc = ball_mul(acc, a, prec);
    }
    return acc;
}

Ball ball_scale(const Rational& s, const Ball& a, long prec) {
    return ball_mul(Ball::from_rational(s, Rational(0), prec), a, prec);
}

bool balls_disjoint(const Ball& a, const Ball& b) {
    const Dyadic dr = a.re() - b.re();
    const Dyadic di = a.im() - b.im();
    const Dyadic rr = a.rad() + b.rad();
    return dr * dr + di * di > rr * rr;
}

} // namespace feq
