#include <doctest.h>

#include "feq/bipoly.hpp"
#include "testutil.hpp"

using namespace feqtest;

namespace {

// independent route: expand sum_k f[k] (ax*x + by*y)^k by repeated naive
// multiplication
template <class S>
BiPoly<S> expand_by_repeated_mul(const std::vector<S>& f, const S& ax, const S& by) {
    BiPoly<S> linear;
    linear.add_term(1, 0, ax);
    linear.add_term(0, 1, by);
    BiPoly<S> out;
    for (size_t k = 0; k < f.size(); ++k) {
        if (f[k].is_zero()) continue;
        if (k == 0) {
            out.add_term(0, 0, f[0]);
            continue;
        }
        BiPoly<S> pw = linear;
        for (size_t j = 1; j < k; ++j) pw = pw * linear;
        for (const auto& [key, c] : pw.terms()) out.add_term(key.first, key.second, c * f[k]);
    }
    return out;
}

Rational coeff_of(const BiPoly<Rational>& p, int xe, int ye) {
    auto it = p.terms().find({xe, ye});
    return it == p.terms().end() ? Rational(0) : it->second;
}

} // namespace

TEST_CASE("expand f = x^2 at alpha = beta = 1") {
    const std::vector<Rational> f{rat(0), rat(0), rat(1)};
    const auto out = expand_composite(f, rat(1), rat(1));
    CHECK(coeff_of(out, 2, 0) == rat(1));
    CHECK(coeff_of(out, 1, 1) == rat(2));
    CHECK(coeff_of(out, 0, 2) == rat(1));
    CHECK(out.terms().size() == 3);
}

TEST_CASE("expand f = x at alpha = 2, beta = 3") {
    const std::vector<Rational> f{rat(0), rat(1)};
    const auto out = expand_composite(f, rat(2), rat(3));
    CHECK(coeff_of(out, 1, 0) == rat(2));
    CHECK(coeff_of(out, 0, 1) == rat(3));
    CHECK(out.terms().size() == 2);
}

TEST_CASE("expand f = x^3 at alpha = 1/3, beta = 2/3") {
    const std::vector<Rational> f{rat(0), rat(0), rat(0), rat(1)};
    const auto out = expand_composite(f, rat(1, 3), rat(2, 3));
    // trinomial expansion of ((1/3)x + (2/3)y)^3, checked against the
    // repeated-multiplication oracle and the direct values
    CHECK(coeff_of(out, 3, 0) == rat(1, 27));
    CHECK(coeff_of(out, 2, 1) == rat(3) * rat(1, 9) * rat(2, 3)); // 2/9
    CHECK(coeff_of(out, 1, 2) == rat(3) * rat(1, 3) * rat(4, 9)); // 4/9
    CHECK(coeff_of(out, 0, 3) == rat(8, 27));
    CHECK(out == expand_by_repeated_mul(f, rat(1, 3), rat(2, 3)));
}

TEST_CASE("binomial route equals repeated multiplication on random input") {
    Rng rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        const int deg = static_cast<int>(rng.integer(0, 6));
        std::vector<Rational> f;
        for (int i = 0; i <= deg; ++i) f.push_back(rng.rational(8, 5));
        const Rational ax = rng.rational(8, 5), by = rng.rational(8, 5);
        CHECK(expand_composite(f, ax, by) == expand_by_repeated_mul(f, ax, by));
    }
}

TEST_CASE("binomial route over a quadratic field") {
    const NumberField::Ptr K = sqrt2_field();
    const FieldElement u = FieldElement::generator(K);
    Rng rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        const int deg = static_cast<int>(rng.integer(0, 5));
        std::vector<FieldElement> f;
        for (int i = 0; i <= deg; ++i)
            f.push_back(fel(K, rng.integer(-4, 4)) + u * rng.rational(3, 2));
        const FieldElement ax = fel(K, rng.integer(-3, 3)) + u * rng.rational(2, 2);
        const FieldElement by = fel(K, rng.integer(-3, 3)) - u * rng.rational(2, 2);
        CHECK(expand_composite(f, ax, by) == expand_by_repeated_mul(f, ax, by));
    }
}

TEST_CASE("no zero coefficients are stored") {
    BiPoly<Rational> p;
    p.add_term(1, 1, rat(2));
    p.add_term(1, 1, rat(-2));
    CHECK(p.is_zero());
    p.add_term(0, 0, rat(0));
    CHECK(p.terms().empty());
}
