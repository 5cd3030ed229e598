#include <benchmark/benchmark.h>

#include "rdo/classify.hpp"
#include "rdo/dickson.hpp"
#include "rdo/field.hpp"
#include "rdo/verify.hpp"

namespace {

void BM_ClosedFormFirst(benchmark::State& state) {
    const uint64_t n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdo::closed_form(rdo::Kind::first, 3, n, 2));
    }
}
BENCHMARK(BM_ClosedFormFirst)->Arg(30)->Arg(150)->Arg(600);

void BM_RecurrenceFamily(benchmark::State& state) {
    const uint64_t n_max = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdo::generate_by_recurrence(rdo::Kind::second, 3, n_max, 2));
    }
}
BENCHMARK(BM_RecurrenceFamily)->Arg(30)->Arg(150);

void BM_IsDo(benchmark::State& state) {
    const rdo::SparsePoly f = rdo::closed_form(rdo::Kind::first, 3, 7 * 81, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdo::is_do(f));
    }
}
BENCHMARK(BM_IsDo);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdo::classify(rdo::Kind::second, 3, 15, 36));
    }
}
BENCHMARK(BM_Classify);

void BM_FieldMul(benchmark::State& state) {
    const rdo::Field field = rdo::Field::make(7, 4);  // q = 2401
    const rdo::FieldElement a = field.element(1234);
    const rdo::FieldElement b = field.element(2345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(field.mul(a, b));
    }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInv(benchmark::State& state) {
    const rdo::Field field = rdo::Field::make(7, 4);
    const rdo::FieldElement a = field.element(1234);
    for (auto _ : state) {
        benchmark::DoNotOptimize(field.inv(a));
    }
}
BENCHMARK(BM_FieldInv);

void BM_PlanarScan(benchmark::State& state) {
    const uint64_t q_exp = static_cast<uint64_t>(state.range(0));
    const rdo::Field field = rdo::Field::make(3, static_cast<unsigned>(q_exp));
    const rdo::SparsePoly f = rdo::SparsePoly::monomial(3, 1, 2);  // x^2, always planar
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdo::is_planar_map(f, field));
    }
}
BENCHMARK(BM_PlanarScan)->Arg(2)->Arg(4)->Arg(6);

void BM_SweepSmall(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rdo::sweep(rdo::Kind::first, 3, 60, 20));
    }
}
BENCHMARK(BM_SweepSmall);

}  // namespace

BENCHMARK_MAIN();
