// Microbenchmarks for the hot paths: sigma evaluation routes, inner-product
// engines, and the section-level linear algebra.  Run with --benchmark_filter
// to narrow; nothing here asserts, timings are for regression eyeballing.

#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "gaborfock/dual_systems.hpp"
#include "gaborfock/fock_function.hpp"
#include "gaborfock/inner_product.hpp"
#include "gaborfock/quadrature.hpp"
#include "gaborfock/rng.hpp"
#include "gaborfock/series_verify.hpp"
#include "gaborfock/sigma.hpp"

using namespace gaborfock;

namespace {

std::vector<cplx> probe_points(std::uint64_t seed, std::size_t count, double half) {
    SplitMix64 rng(seed);
    std::vector<cplx> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back(rng.square(half));
    return pts;
}

void bm_sigma_reduced(benchmark::State& state) {
    const SigmaEvaluator& ev = sigma_evaluator();
    std::vector<cplx> pts = probe_points(1, 256, 6.0);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.log_sigma(pts[i]));
        i = (i + 1) & 255;
    }
}
BENCHMARK(bm_sigma_reduced);

void bm_sigma_product(benchmark::State& state) {
    const SigmaEvaluator& ev = sigma_evaluator();
    std::vector<cplx> pts = probe_points(2, 16, 2.5);
    double taper = static_cast<double>(state.range(0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.log_sigma_product(pts[i], taper));
        i = (i + 1) & 15;
    }
}
BENCHMARK(bm_sigma_product)->Arg(40)->Arg(80);

void bm_sigma_theta(benchmark::State& state) {
    const SigmaEvaluator& ev = sigma_evaluator();
    std::vector<cplx> pts = probe_points(3, 256, 2.5);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.sigma_theta(pts[i]));
        i = (i + 1) & 255;
    }
}
BENCHMARK(bm_sigma_theta);

void bm_growth_ratio(benchmark::State& state) {
    const SigmaEvaluator& ev = sigma_evaluator();
    std::vector<cplx> pts = probe_points(4, 256, 6.0);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.growth_ratio(pts[i]));
        i = (i + 1) & 255;
    }
}
BENCHMARK(bm_growth_ratio);

void bm_inner_taylor_kernels(benchmark::State& state) {
    FockFunction a = FockFunction::kernel({1.2, -0.7});
    FockFunction b = FockFunction::kernel({-0.4, 2.1});
    for (auto _ : state) benchmark::DoNotOptimize(fock_inner_taylor(a, b, 1e-10));
}
BENCHMARK(bm_inner_taylor_kernels);

void bm_inner_quadrature_kernels(benchmark::State& state) {
    FockFunction a = FockFunction::kernel({1.2, -0.7});
    FockFunction b = FockFunction::kernel({-0.4, 2.1});
    double radius = std::max(a.suggested_radius(), b.suggested_radius());
    for (auto _ : state)
        benchmark::DoNotOptimize(fock_inner_quadrature(a, b, radius));
}
BENCHMARK(bm_inner_quadrature_kernels);

void bm_biorth_pairings(benchmark::State& state) {
    GeneratingFunction g(GeneratorSpec::lattice());
    PointSet pts = PointSet::lattice_disk_punctured(3.0);
    BiorthogonalElement e = biorth_element(g, {1.0, 0.0});
    for (auto _ : state)
        for (cplx w : pts.points()) benchmark::DoNotOptimize(biorth_pairing(e, w));
}
BENCHMARK(bm_biorth_pairings);

void bm_gram_min_sv(benchmark::State& state) {
    PointSet pts = PointSet::lattice_disk_punctured(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(min_singular_value(pts));
}
BENCHMARK(bm_gram_min_sv)->Arg(3)->Arg(5);

void bm_reconstruct(benchmark::State& state) {
    FockFunction e3 = FockFunction::normalized_monomial(3);
    GeneratorSpec lat = GeneratorSpec::lattice();
    for (auto _ : state)
        benchmark::DoNotOptimize(finite_section_reconstruct(e3, lat, 4.0));
}
BENCHMARK(bm_reconstruct);

void bm_coeff_bound(benchmark::State& state) {
    SplitMix64 rng(9001);
    FockFunction s;
    for (int j = 0; j < 5; ++j) {
        cplx a = rng.square(1.5);
        double re = rng.uniform(-1.0, 1.0);
        double im = rng.uniform(-1.0, 1.0);
        s += FockFunction::kernel(a, cplx(re, im));
    }
    for (auto _ : state) benchmark::DoNotOptimize(verify_coeff_bound(s, 8.0));
}
BENCHMARK(bm_coeff_bound);

} // namespace

BENCHMARK_MAIN();
