#include <doctest.h>

#include "feq/unipoly.hpp"
#include "testutil.hpp"

using namespace feqtest;

TEST_CASE("rationals stay canonical") {
    CHECK(Rational(Int(2), Int(4)).str() == "1/2");
    CHECK(Rational(Int(-2), Int(4)).str() == "-1/2");
    CHECK(Rational(Int(3), Int(-6)).str() == "-1/2");
    CHECK(Rational("3/9").str() == "1/3");
    CHECK((rat(1, 3) + rat(1, 6)).str() == "1/2");
    CHECK(rat(2, 3).pow(-2) == rat(9, 4));
    CHECK(rat(7).denominator() == 1);
    CHECK_THROWS_AS(rat(1) / rat(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), DivisionByZero);
}

TEST_CASE("polynomial basics") {
    const UniPoly f = upoly({-2, 0, 1});
    CHECK(f.degree() == 2);
    CHECK(f.str() == "t^2 - 2");
    CHECK(UniPoly().is_zero());
    CHECK((f * upoly({1, 1})).str() == "t^3 + t^2 - 2*t - 2");
    CHECK(f.eval(rat(3)) == rat(7));
    CHECK(f.derivative() == upoly({0, 2}));
    const auto [q, r] = divmod(upoly({1, 0, 0, 1}), upoly({1, 1}));
    CHECK(q * upoly({1, 1}) + r == upoly({1, 0, 0, 1}));
    CHECK(poly_gcd(upoly({-1, 0, 1}), upoly({1, 1})).str() == "t + 1");
    CHECK(is_squarefree(upoly({-2, 0, 1})));
    CHECK(!is_squarefree(upoly({1, 2, 1})));
}

TEST_CASE("resultant examples") {
    const UniPoly f = upoly({-2, 0, 1}); // t^2 - 2
    const UniPoly g = upoly({-3, 0, 1}); // t^2 - 3
    CHECK(poly_resultant(f, g) == rat(1)); // prod over +-sqrt2 of (r^2 - 3)
    CHECK(poly_resultant(upoly({-2, 1}), upoly({-3, 1})) == rat(-1));
    CHECK(poly_resultant(f, f) == rat(0));
    CHECK_THROWS_AS(poly_resultant(UniPoly(), UniPoly()), BothZero);
    // constants: Res(c, g) = c^deg(g)
    CHECK(poly_resultant(upoly({5}), g) == rat(25));
    CHECK(poly_resultant(UniPoly(), g) == rat(0));
}

TEST_CASE("subresultant and Sylvester routes agree") {
    Rng rng(20240811);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Rational> fc, gc;
        const int df = static_cast<int>(rng.integer(1, 7));
        const int dg = static_cast<int>(rng.integer(1, 7));
        for (int i = 0; i <= df; ++i) fc.push_back(rng.rational(6, 3));
        for (int i = 0; i <= dg; ++i) gc.push_back(rng.rational(6, 3));
        if (fc.back().is_zero()) fc.back() = rat(1);
        if (gc.back().is_zero()) gc.back() = rat(1);
        const UniPoly f{fc}, g{gc};
        CHECK(resultant_subresultant(f, g) == resultant_sylvester(f, g));
    }
}

TEST_CASE("resultant multiplicativity") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto rand_poly = [&](int deg) {
            std::vector<Rational> c;
            for (int i = 0; i <= deg; ++i) c.push_back(rng.rational(5, 2));
            if (c.back().is_zero()) c.back() = rat(1);
            return UniPoly(std::move(c));
        };
        const UniPoly f = rand_poly(static_cast<int>(rng.integer(1, 3)));
        const UniPoly g = rand_poly(static_cast<int>(rng.integer(1, 3)));
        const UniPoly h = rand_poly(static_cast<int>(rng.integer(1, 3)));
        CHECK(poly_resultant(f, g * h) == poly_resultant(f, g) * poly_resultant(f, h));
    }
}

TEST_CASE("separation bound") {
    // true separations: 2*sqrt(2) ~ 2.828, 2*sqrt(3) ~ 3.46, |i - (-i)| = 2
    const Rational b1 = separation_bound(upoly({-2, 0, 1}));
    CHECK(b1 > rat(0));
    CHECK(b1 <= rat(2829, 1000));
    const Rational b2 = separation_bound(upoly({-3, 0, 1}));
    CHECK(b2 > rat(0));
    CHECK(b2 <= rat(3465, 1000));
    const Rational b3 = separation_bound(upoly({1, 0, 1}));
    CHECK(b3 > rat(0));
    CHECK(b3 <= rat(2));
    CHECK_THROWS_AS(separation_bound(upoly({-5, 1})), DegreeTooSmall);
    CHECK_THROWS_AS(separation_bound(upoly({1, 2, 1})), NotSquarefree);
}

TEST_CASE("separation bound stays below a known minimal gap") {
    // roots 0, 1/3, 1: minimal gap 1/3
    const UniPoly m = upoly({0, 1}) * upoly({1, -3}) * upoly({-1, 1});
    const Rational b = separation_bound(m);
    CHECK(b > rat(0));
    CHECK(b <= rat(1, 3));
}
