#include "feq/dyadic.hpp"

#include <cmath>
#include <sstream>

namespace feq {

namespace {

long bit_length(const Int& v) {
    if (sgn(v) == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Int shift_left(const Int& v, long k) {
    Int r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return r;
}

} // namespace

void Dyadic::normalize() {
    if (sgn(man_) == 0) {
        exp_ = 0;
        return;
    }
    const mp_bitcnt_t tz = mpz_scan1(man_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
        exp_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::abs() const {
    Dyadic r = *this;
    mpz_abs(r.man_.get_mpz_t(), r.man_.get_mpz_t());
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long e = std::min(a.exp_, b.exp_);
    Int m = shift_left(a.man_, a.exp_ - e) + shift_left(b.man_, b.exp_ - e);
    return Dyadic(std::move(m), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + b.neg(); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_);
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
    const int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    const Dyadic d = a - b;
    return d.sign();
}

long Dyadic::mag_bits() const {
    if (is_zero()) return 0;
    return bit_length(man_) + exp_;
}

Dyadic Dyadic::round_nearest(long prec, Dyadic* err) const {
    const long bits = bit_length(man_);
    if (bits <= prec) {
        if (err) *err = Dyadic();
        return *this;
    }
    const long shift = bits - prec;
    Int q, r;
    mpz_tdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_tdiv_r_2exp(r.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_abs(r.get_mpz_t(), r.get_mpz_t());
    if (shift_left(r, 1) >= shift_left(Int(1), shift)) q += sign();
    if (err) *err = Dyadic(Int(1), exp_ + shift - 1);
    return Dyadic(std::move(q), exp_ + shift);
}

Dyadic Dyadic::round_up_mag(long prec) const {
    if (is_zero()) return Dyadic();
    Int m;
    mpz_abs(m.get_mpz_t(), man_.get_mpz_t());
    const long bits = bit_length(m);
    if (bits <= prec) return Dyadic(std::move(m), exp_);
    const long shift = bits - prec;
    Int q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    return Dyadic(std::move(q), exp_ + shift);
}

Dyadic Dyadic::div_approx(const Dyadic& a, const Dyadic& b, long prec) {
    if (a.is_zero()) return Dyadic();
    if (b.is_zero()) throw DivisionByZero("dyadic division by zero");
    const long t = prec + bit_length(b.man_) - bit_length(a.man_) + 2;
    Int num = t >= 0 ? shift_left(a.man_, t) : a.man_;
    Int den = t >= 0 ? b.man_ : shift_left(b.man_, -t);
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(std::move(q), a.exp_ - b.exp_ - t);
}

std::pair<Dyadic, Dyadic> Dyadic::sqrt_bounds(const Dyadic& x, long prec) {
    if (x.sign() < 0) throw Error("sqrt of a negative dyadic");
    if (x.is_zero()) return {Dyadic(), Dyadic()};
    long s = std::max(0L, 2 * prec - bit_length(x.man_));
    if ((x.exp_ - s) % 2 != 0) ++s;
    const Int m = shift_left(x.man_, s);
    const Int r = int_isqrt(m);
    const long half = (x.exp_ - s) / 2;
    return {Dyadic(r, half), Dyadic(r + 1, half)};
}

Rational Dyadic::to_rational() const {
    if (is_zero()) return Rational(0);
    if (exp_ >= 0) return Rational(shift_left(man_, exp_));
    return Rational(man_, shift_left(Int(1), -exp_));
}

Dyadic Dyadic::from_rational(const Rational& q, long prec, Dyadic* err) {
    if (q.is_zero()) {
        if (err) *err = Dyadic();
        return Dyadic();
    }
    const Int n = q.numerator();
    const Int d = q.denominator();
    if (d == 1) {
        Dyadic exact(n, 0);
        // integers beyond prec bits still get rounded
        return exact.round_nearest(prec, err);
    }
    const long t = prec + bit_length(d) - bit_length(n) + 2;
    Int num = t >= 0 ? shift_left(n, t) : n;
    Int den = t >= 0 ? d : shift_left(d, -t);
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_abs(rem.get_mpz_t(), rem.get_mpz_t());
    if (2 * rem >= den) quot += q.sign();
    if (err) *err = Dyadic(Int(1), -t - 1);
    return Dyadic(std::move(quot), -t);
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    const long bits = bit_length(man_);
    if (bits <= 900) return mpz_get_d(man_.get_mpz_t()) * std::ldexp(1.0, static_cast<int>(exp_));
    Int top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 64));
    return mpz_get_d(top.get_mpz_t()) * std::ldexp(1.0, static_cast<int>(exp_ + bits - 64));
}

std::string Dyadic::decimal(int sig_digits) const {
    if (is_zero()) return "0";
    // decimal exponent of |x|: floor(log10|x|), via bit length estimate then fix-up
    Int absman;
    mpz_abs(absman.get_mpz_t(), man_.get_mpz_t());
    const double log10x = (bit_length(absman) + static_cast<double>(exp_)) * 0.30102999566398119;
    long dec_e = static_cast<long>(std::floor(log10x));
    // digits string N = round(|x| * 10^(sig-1-dec_e))
    auto scaled = [&](long s) {
        // |x| * 10^s as a rounded integer
        Int num = absman, den(1);
        if (exp_ >= 0)
            mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
        else
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
        if (s >= 0)
            num *= int_pow(Int(10), static_cast<unsigned long>(s));
        else
            den *= int_pow(Int(10), static_cast<unsigned long>(-s));
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (2 * r >= den) q += 1;
        return q;
    };
    Int digits = scaled(sig_digits - 1 - dec_e);
    std::string ds = digits.get_str();
    // rounding may add a digit (e.g. 999.9 -> 1000) or the log estimate may be off by one
    while (static_cast<int>(ds.size()) > sig_digits) {
        ++dec_e;
        digits = scaled(sig_digits - 1 - dec_e);
        ds = digits.get_str();
    }
    while (static_cast<int>(ds.size()) < sig_digits) {
        --dec_e;
        digits = scaled(sig_digits - 1 - dec_e);
        ds = digits.get_str();
    }
    std::ostringstream out;
    if (sign() < 0) out << "-";
    if (dec_e >= 0 && dec_e < sig_digits) {
        out << ds.substr(0, static_cast<size_t>(dec_e) + 1);
        std::string frac = ds.substr(static_cast<size_t>(dec_e) + 1);
        if (!frac.empty()) out << "." << frac;
    } else if (dec_e < 0 && dec_e > -7) {
        out << "0.";
        for (long i = 1; i < -dec_e; ++i) out << "0";
        out << ds;
    } else {
        out << ds.substr(0, 1);
        if (ds.size() > 1) out << "." << ds.substr(1);
        out << "e" << dec_e;
    }
    return out.str();
}

} // namespace feq
