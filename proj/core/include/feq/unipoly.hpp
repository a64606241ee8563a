#pragma once

#include <string>
#include <utility>
#include <vector>

#include "feq/rational.hpp"

namespace feq {

/// Dense univariate polynomial over Q. Coefficients are stored lowest
/// degree first with no trailing zero; the zero polynomial is the empty list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly x();
    static UniPoly monomial(int k, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& leading() const;
    bool is_monic() const;

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend UniPoly operator-(const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder over Q; throws DivisionByZero if b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; returns 0 only when both inputs are 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
bool is_squarefree(const UniPoly& f);

/// Res(f, g) per the Sylvester definition: Res = lc(f)^deg(g) * prod g(r)
/// over the roots r of f. Throws BothZero when f = g = 0.
/// Degree <= 4 goes through the Sylvester determinant, larger inputs through
/// the subresultant pseudo-remainder sequence.
Rational poly_resultant(const UniPoly& f, const UniPoly& g);
Rational resultant_subresultant(const UniPoly& f, const UniPoly& g);
Rational resultant_sylvester(const UniPoly& f, const UniPoly& g);

/// Positive rational B with |r - r'| >= B for all distinct roots r, r' of m
/// (Mahler-style bound). Pre: m squarefree of degree >= 2.
Rational separation_bound(const UniPoly& m);

/// Integer image of f with content 1 and positive leading coefficient.
/// Scaling does not move the roots.
std::vector<Int> integer_primitive(const UniPoly& f);

} // namespace feq
