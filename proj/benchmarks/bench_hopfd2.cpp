#include <random>

#include <benchmark/benchmark.h>

#include "hopfd2/catalog.hpp"
#include "hopfd2/construct.hpp"
#include "hopfd2/d2.hpp"
#include "hopfd2/inverse.hpp"

using namespace hopfd2;

namespace {

const Field Q{};

void rigidity(benchmark::State& state, const std::string& name) {
    FrobeniusDatum f = extension_datum(catalog_extension(name, Q));
    for (auto _ : state) benchmark::DoNotOptimize(verify_rigidity(f));
}

void harmonic(benchmark::State& state, const std::string& name) {
    FrobeniusDatum f = extension_datum(catalog_extension(name, Q));
    for (auto _ : state) benchmark::DoNotOptimize(build_harmonic(f));
}

void quasibasis(benchmark::State& state, const std::string& name) {
    FrobeniusDatum f = extension_datum(catalog_extension(name, Q));
    Harmonic h = build_harmonic(f);
    auto legs = quasibasis_leg_spaces(h);
    for (auto _ : state) benchmark::DoNotOptimize(find_d2_quasibasis(f, h.A, 16, legs));
}

void construction(benchmark::State& state, const std::string& name) {
    FrobeniusDatum f = extension_datum(catalog_extension(name, Q));
    for (auto _ : state) benchmark::DoNotOptimize(construct(f));
}

void verify_A(benchmark::State& state, const std::string& name) {
    Construction c = construct(extension_datum(catalog_extension(name, Q)));
    for (auto _ : state) benchmark::DoNotOptimize(verify(c.A));
}

void duality(benchmark::State& state, const std::string& name) {
    Construction c = construct(extension_datum(catalog_extension(name, Q)));
    for (auto _ : state) {
        DualityIsos d = duality_isos(c.h, c.qb, c.A);
        benchmark::DoNotOptimize(verify_strict_duality(c.h, c.A, c.B, d));
    }
}

void roundtrip_hopf(benchmark::State& state, const std::string& name) {
    HopfExample ex = catalog_hopf(name, Q);
    for (auto _ : state) benchmark::DoNotOptimize(roundtrip(ex.hopf, ex.integral));
}

void roundtrip_constructed(benchmark::State& state, const std::string& name) {
    Construction c = construct(extension_datum(catalog_extension(name, Q)));
    for (auto _ : state) benchmark::DoNotOptimize(roundtrip(c.A, c.h.iA()));
}

void exact_rank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.set(i, j, Scalar(d(rng)));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

}  // namespace

int main(int argc, char** argv) {
    for (auto& name : extension_names()) {
        benchmark::RegisterBenchmark(("rigidity/" + name).c_str(), rigidity, name)->Unit(benchmark::kMillisecond);
        benchmark::RegisterBenchmark(("harmonic/" + name).c_str(), harmonic, name)->Unit(benchmark::kMillisecond);
        benchmark::RegisterBenchmark(("quasibasis/" + name).c_str(), quasibasis, name)->Unit(benchmark::kMillisecond);
        benchmark::RegisterBenchmark(("construct/" + name).c_str(), construction, name)->Unit(benchmark::kMillisecond);
        benchmark::RegisterBenchmark(("verify_A/" + name).c_str(), verify_A, name)->Unit(benchmark::kMillisecond);
        benchmark::RegisterBenchmark(("duality/" + name).c_str(), duality, name)->Unit(benchmark::kMillisecond);
    }
    for (auto name : {"qc2", "qc2-in-qc4", "mat2"})
        benchmark::RegisterBenchmark((std::string("roundtrip_A/") + name).c_str(), roundtrip_constructed, name)
            ->Unit(benchmark::kMillisecond);
    for (auto& name : hopf_names())
        if (name != "hopf-sweedler")
            benchmark::RegisterBenchmark(("roundtrip/" + name).c_str(), roundtrip_hopf, name)
                ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark("exact_rank", exact_rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
