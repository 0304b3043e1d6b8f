// Benchmark comparing the OpenMP kernels to their serial references on
// catalog-sized and synthetic inputs. Run manually:
//   build/specon_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <random>

#include "specon/catalog.hpp"
#include "specon/kernels.hpp"

using namespace specon;
namespace k = specon::kernels;

namespace {

std::vector<Mat> adjoints_of_so(size_t n) { return basis_adjoints(so_algebra(n)); }

Tensor3 random_product(size_t p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    Tensor3 t(p);
    for (Rat& x : t.a)
        if (rng() % 3 == 0) {
            x = Rat(num(rng), 1 + static_cast<int>(rng() % 3));
            x.canonicalize();
        }
    return t;
}

Tensor4 canonical_curvature_like(size_t p, uint64_t seed) {
    Tensor4 dbl(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-2, 2);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < i; ++j)
            for (size_t l = 0; l < p; ++l)
                for (size_t m = 0; m < p; ++m) {
                    Rat v(num(rng));
                    dbl(i, j, l, m) = v;
                    dbl(j, i, l, m) = -v;
                }
    return dbl;
}

}  // namespace

static void BM_trace_form_serial(benchmark::State& state) {
    auto ads = adjoints_of_so(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(k::trace_form_serial(ads));
}
BENCHMARK(BM_trace_form_serial)->Arg(6)->Arg(8);

static void BM_trace_form_omp(benchmark::State& state) {
    auto ads = adjoints_of_so(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(k::trace_form_parallel(ads));
}
BENCHMARK(BM_trace_form_omp)->Arg(6)->Arg(8);

static void BM_curvature_serial(benchmark::State& state) {
    size_t p = state.range(0);
    Tensor3 a = random_product(p, 1);
    Tensor4 dbl = canonical_curvature_like(p, 2);
    for (auto _ : state) benchmark::DoNotOptimize(k::curvature_tensor_serial(a, dbl));
}
BENCHMARK(BM_curvature_serial)->Arg(6)->Arg(10);

static void BM_curvature_omp(benchmark::State& state) {
    size_t p = state.range(0);
    Tensor3 a = random_product(p, 1);
    Tensor4 dbl = canonical_curvature_like(p, 2);
    for (auto _ : state) benchmark::DoNotOptimize(k::curvature_tensor_parallel(a, dbl));
}
BENCHMARK(BM_curvature_omp)->Arg(6)->Arg(10);

static void BM_semi_symmetry_serial(benchmark::State& state) {
    size_t p = state.range(0);
    SymmetricPair pair = sphere_pair(p);
    CurvatureTensor r = curvature(pair, ProductTensor(pair.m_dim()));
    for (auto _ : state) benchmark::DoNotOptimize(k::semi_symmetry_violation_serial(r.r));
}
BENCHMARK(BM_semi_symmetry_serial)->Arg(4)->Arg(6);

static void BM_semi_symmetry_omp(benchmark::State& state) {
    size_t p = state.range(0);
    SymmetricPair pair = sphere_pair(p);
    CurvatureTensor r = curvature(pair, ProductTensor(pair.m_dim()));
    for (auto _ : state) benchmark::DoNotOptimize(k::semi_symmetry_violation_parallel(r.r));
}
BENCHMARK(BM_semi_symmetry_omp)->Arg(4)->Arg(6);

static void BM_constraint_rows_serial(benchmark::State& state) {
    SymmetricPair p = sphere_pair(state.range(0));
    auto images = isotropy(p).rep.images;
    for (auto _ : state)
        benchmark::DoNotOptimize(k::product_constraint_rows_serial(p.m_dim(), images));
}
BENCHMARK(BM_constraint_rows_serial)->Arg(4)->Arg(6);

static void BM_constraint_rows_omp(benchmark::State& state) {
    SymmetricPair p = sphere_pair(state.range(0));
    auto images = isotropy(p).rep.images;
    for (auto _ : state)
        benchmark::DoNotOptimize(k::product_constraint_rows_parallel(p.m_dim(), images));
}
BENCHMARK(BM_constraint_rows_omp)->Arg(4)->Arg(6);

static void BM_associator_serial(benchmark::State& state) {
    Tensor3 a = random_product(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(k::associator_violation_serial(a));
}
BENCHMARK(BM_associator_serial)->Arg(8)->Arg(12);

static void BM_associator_omp(benchmark::State& state) {
    Tensor3 a = random_product(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(k::associator_violation_parallel(a));
}
BENCHMARK(BM_associator_omp)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
