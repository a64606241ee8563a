#include <doctest.h>

#include <algorithm>

#include "feq/equation.hpp"
#include "testutil.hpp"

using namespace feqtest;

namespace {

const NumberField::Ptr Q = NumberField::rationals();

EquationSpec qspec(std::vector<Rational> a, std::vector<Rational> alpha,
                   std::vector<Rational> beta) {
    std::vector<FieldElement> ea, eal, ebe;
    for (auto& x : a) ea.push_back(FieldElement::from_rational(Q, x));
    for (auto& x : alpha) eal.push_back(FieldElement::from_rational(Q, x));
    for (auto& x : beta) ebe.push_back(FieldElement::from_rational(Q, x));
    return make_spec(Q, std::move(ea), std::move(eal), std::move(ebe));
}

} // namespace

TEST_CASE("validation accepts a clean spec") {
    const auto r = validate(qspec({rat(1), rat(1)}, {rat(2), rat(1)}, {rat(1), rat(3)}));
    CHECK(r.ok);
    CHECK(r.violations.empty());
}

TEST_CASE("validation flags collinear rows") {
    const auto r = validate(qspec({rat(1), rat(1)}, {rat(1), rat(2)}, {rat(2), rat(4)}));
    CHECK_FALSE(r.ok);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::CollinearPair);
    CHECK(r.violations[0].indices == std::vector<int>{1, 2});
}

TEST_CASE("validation flags degenerate rows") {
    const auto r = validate(qspec({rat(1), rat(1)}, {rat(1), rat(2)}, {rat(-1), rat(3)}));
    CHECK_FALSE(r.ok);
    REQUIRE(!r.violations.empty());
    CHECK(r.violations[0].kind == ViolationKind::DegenerateRow);
    CHECK(r.violations[0].indices == std::vector<int>{1});
}

TEST_CASE("validation flags zero coefficients") {
    const auto r = validate(qspec({rat(0), rat(1)}, {rat(2), rat(1)}, {rat(1), rat(3)}));
    CHECK_FALSE(r.ok);
    bool found = false;
    for (const auto& v : r.violations)
        if (v.kind == ViolationKind::ZeroCoefficient && v.indices == std::vector<int>{1})
            found = true;
    CHECK(found);
}

TEST_CASE("validation is invariant under row permutation") {
    Rng rng(135);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3;
        std::vector<Rational> a, al, be;
        for (int i = 0; i < n; ++i) {
            a.push_back(rng.rational());
            al.push_back(rng.rational());
            be.push_back(rng.rational());
        }
        const bool ok_before = validate(qspec(a, al, be)).ok;
        std::vector<int> perm{0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng.gen());
        std::vector<Rational> a2, al2, be2;
        for (int i : perm) {
            a2.push_back(a[static_cast<size_t>(i)]);
            al2.push_back(al[static_cast<size_t>(i)]);
            be2.push_back(be[static_cast<size_t>(i)]);
        }
        CHECK(validate(qspec(a2, al2, be2)).ok == ok_before);
    }
}

TEST_CASE("collinearity is flagged symmetrically") {
    // rows 1 and 3 collinear; the pair must appear exactly once, as (1,3)
    const auto r =
        validate(qspec({rat(1), rat(1), rat(1)}, {rat(1), rat(1), rat(2)},
                       {rat(3), rat(4), rat(6)}));
    int pair_count = 0;
    for (const auto& v : r.violations)
        if (v.kind == ViolationKind::CollinearPair) {
            ++pair_count;
            CHECK(v.indices == std::vector<int>{1, 3});
        }
    CHECK(pair_count == 1);
}

TEST_CASE("degree bound is 2n-1 and monotone") {
    CHECK(degree_bound(qspec({rat(1)}, {rat(1)}, {rat(2)})) == 1);
    CHECK(degree_bound(qspec({rat(1), rat(1)}, {rat(2), rat(1)}, {rat(1), rat(3)})) == 3);
    int prev = 0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<Rational> a, al, be;
        for (int i = 0; i < n; ++i) {
            a.push_back(rat(1));
            al.push_back(rat(i + 1));
            be.push_back(rat(1));
        }
        const int bound = degree_bound(qspec(a, al, be));
        CHECK(bound == 2 * n - 1);
        CHECK(bound > prev);
        prev = bound;
    }
}

TEST_CASE("structure flags") {
    // endpoint/interior shape: beta = 1 - alpha
    const auto s54 = detect_structure(weighted_onethird_spec());
    CHECK(s54.beta_is_one_minus_alpha);
    CHECK_FALSE(s54.alpha_all_one);
    CHECK_FALSE(s54.symmetric_swap);
    CHECK(s54.coeff_sum_nonzero);

    // alpha = 1 everywhere
    const auto s53 = detect_structure(qspec({rat(1), rat(1)}, {rat(1), rat(1)},
                                            {rat(0), rat(1, 2)}));
    CHECK(s53.alpha_all_one);

    // symmetric swap shape
    const auto s51 = detect_structure(qspec({rat(1), rat(1)}, {rat(2), rat(1)},
                                            {rat(1), rat(2)}));
    CHECK(s51.symmetric_swap);

    const auto s55 = detect_structure(symmetric_sqrt3_spec());
    CHECK(s55.symmetric_swap);
    CHECK(s55.beta_is_one_minus_alpha);
}

TEST_CASE("fingerprints track spec content") {
    const auto s1 = symmetric_sqrt3_spec();
    const auto s2 = symmetric_sqrt3_spec();
    CHECK(spec_fingerprint(s1) == spec_fingerprint(s2));
    CHECK(spec_fingerprint(s1) != spec_fingerprint(weighted_onethird_spec()));
}

TEST_CASE("make_spec rejects mismatched lists") {
    std::vector<FieldElement> two{fel(Q, 1), fel(Q, 1)};
    std::vector<FieldElement> one{fel(Q, 1)};
    CHECK_THROWS_AS(make_spec(Q, two, two, one), PreconditionFailed);
    CHECK_THROWS_AS(make_spec(Q, {}, {}, {}), PreconditionFailed);
}
