#include <benchmark/benchmark.h>

#include <jetgeom/correspondences.hpp>
#include <jetgeom/parser.hpp>

using namespace jetgeom;

static void BM_normalize_rational(benchmark::State& state) {
    auto ch = Chart::make({"x", "y", "z"});
    auto a = parse("(x^3 - y^3)*(x + y + z)^2", ch);
    auto b = parse("x - y", ch);
    for (auto _ : state) {
        auto q = a / b;
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_normalize_rational);

static void BM_schouten_nijenhuis(benchmark::State& state) {
    auto ch = Chart::make({"x", "y", "z"});
    Multivector pi(ch, 2);
    pi.add({0, 1}, parse("x*z + y^2", ch));
    pi.add({0, 2}, parse("x^2 - y*z", ch));
    pi.add({1, 2}, parse("x*y + z^2", ch));
    for (auto _ : state) {
        auto br = schouten_nijenhuis(pi, pi);
        benchmark::DoNotOptimize(br);
    }
}
BENCHMARK(BM_schouten_nijenhuis);

static void BM_schouten_jacobi_square(benchmark::State& state) {
    auto ch = Chart::make({"x", "y", "z"});
    Multivector lam(ch, 2);
    lam.add({0, 1}, parse("x*z + y^2", ch));
    lam.add({1, 2}, parse("x + z^2", ch));
    Multivector e(ch, 1);
    e.add({0}, parse("y*z", ch));
    e.add({2}, parse("x - y", ch));
    MultiDerivation j = MultiDerivation::make(lam, e);
    for (auto _ : state) {
        auto br = schouten_jacobi(j, j);
        benchmark::DoNotOptimize(br);
    }
}
BENCHMARK(BM_schouten_jacobi_square);

static void BM_contact_to_jacobi(benchmark::State& state) {
    auto ch = Chart::make({"t", "x1", "y1", "x2", "y2"});
    DiffForm theta(ch, 1);
    theta.add({0}, parse("1", ch));
    theta.add({1}, parse("-y1", ch));
    theta.add({3}, parse("-y2", ch));
    for (auto _ : state) {
        auto j = contact_to_jacobi(theta);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_contact_to_jacobi);

static void BM_poissonize_roundtrip(benchmark::State& state) {
    auto ch = Chart::make({"x", "y", "z"});
    Multivector lam(ch, 2);
    lam.add({0, 1}, parse("z", ch));
    lam.add({1, 2}, parse("x^2", ch));
    MultiDerivation j = MultiDerivation::make(lam, unit_vector(ch, 1));
    for (auto _ : state) {
        auto rt = restrict_homogeneous(poissonize(j).pi, "s");
        benchmark::DoNotOptimize(rt);
    }
}
BENCHMARK(BM_poissonize_roundtrip);

static void BM_holomorphic_jacobi_equivalences(benchmark::State& state) {
    DarbouxExample d0 = darboux_example(0);
    for (auto _ : state) {
        auto tw = check_holomorphic_jacobi_equivalences(d0.j, d0.cc);
        benchmark::DoNotOptimize(tw);
    }
}
BENCHMARK(BM_holomorphic_jacobi_equivalences);

BENCHMARK_MAIN();
