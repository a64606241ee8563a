#include <benchmark/benchmark.h>

#include "feq/analysis.hpp"
#include "feq/parser.hpp"
#include "feq/roots.hpp"
#include "feq/solver.hpp"

namespace {

feq::UniPoly poly(std::initializer_list<long> coeffs) {
    std::vector<feq::Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return feq::UniPoly(std::move(c));
}

void bm_resultant_prs(benchmark::State& state) {
    const feq::UniPoly f = poly({-7, 0, 3, 0, 0, 1, 2});
    const feq::UniPoly g = poly({4, -1, 0, 5, 1});
    for (auto _ : state) benchmark::DoNotOptimize(feq::resultant_subresultant(f, g));
}
BENCHMARK(bm_resultant_prs);

void bm_resultant_sylvester(benchmark::State& state) {
    const feq::UniPoly f = poly({-7, 0, 3, 0, 1});
    const feq::UniPoly g = poly({4, -1, 0, 5, 1});
    for (auto _ : state) benchmark::DoNotOptimize(feq::resultant_sylvester(f, g));
}
BENCHMARK(bm_resultant_sylvester);

void bm_root_isolate_quartic(benchmark::State& state) {
    const feq::UniPoly m = poly({1, 1, 0, 0, 1}); // t^4 + t + 1
    for (auto _ : state) benchmark::DoNotOptimize(feq::root_isolate(m, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_root_isolate_quartic)->Arg(64)->Arg(256)->Arg(1024);

const char* kSymmetricInput =
    "field u: t^2 - 3\n"
    "a = [1/2, 1/2]\n"
    "alpha = [(3+u)/6, (3-u)/6]\n"
    "beta = [(3-u)/6, (3+u)/6]\n";

void bm_analyze_quadratic_field(benchmark::State& state) {
    const feq::EquationSpec spec = feq::parse(kSymmetricInput);
    for (auto _ : state) benchmark::DoNotOptimize(feq::analyze(spec));
}
BENCHMARK(bm_analyze_quadratic_field);

void bm_verify_identity(benchmark::State& state) {
    const feq::EquationSpec spec = feq::parse(kSymmetricInput);
    std::vector<feq::FieldElement> f{feq::FieldElement::zero(spec.field),
                                     feq::FieldElement::zero(spec.field),
                                     feq::FieldElement::one(spec.field)};
    const std::vector<feq::FieldElement> F = feq::reconstruct_F(spec, f);
    for (auto _ : state) benchmark::DoNotOptimize(feq::verify_identity(spec, f, F));
}
BENCHMARK(bm_verify_identity);

} // namespace

BENCHMARK_MAIN();
