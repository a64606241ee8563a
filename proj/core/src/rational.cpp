#include "feq/rational.hpp"

namespace feq {

Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int int_isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const std::string& text) {
    if (mpq_set_str(v_.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error("malformed rational literal: " + text);
    if (sgn(v_.get_den()) == 0) throw DivisionByZero("rational literal with zero denominator");
    v_.canonicalize();
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    Rational r(num, den);
    return invert ? r.reciprocal() : r;
}

Rational binomial(int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

} // namespace feq
