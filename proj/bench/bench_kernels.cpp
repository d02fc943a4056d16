// Parallel kernels vs their serial references, plus the structured projector
// conjugation against the dense two-product route it replaces.

#include <benchmark/benchmark.h>

#include "clonot/kernels.hpp"
#include "clonot/linalg.hpp"
#include "clonot/rng.hpp"
#include "clonot/universal.hpp"

namespace {

using clonot::linalg::CMatrix;

CMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    clonot::rng::Stream stream(seed);
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = stream.gaussian_complex();
    return m;
}

CMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    CMatrix m = random_matrix(n, seed);
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

void BM_matmul_serial(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = random_matrix(n, 1);
    const CMatrix b = random_matrix(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(clonot::kernels::reference::matmul(a, b));
}

void BM_matmul_parallel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = random_matrix(n, 1);
    const CMatrix b = random_matrix(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(clonot::kernels::matmul(a, b));
}

void BM_kron_serial(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = random_matrix(n, 3);
    const CMatrix b = random_matrix(n, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(clonot::kernels::reference::kron(a, b));
}

void BM_kron_parallel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = random_matrix(n, 3);
    const CMatrix b = random_matrix(n, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(clonot::kernels::kron(a, b));
}

void BM_sym_conjugate_serial(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const CMatrix a = random_hermitian(std::size_t{1} << qubits, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(clonot::kernels::reference::sym_conjugate(a, qubits));
}

void BM_sym_conjugate_parallel(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const CMatrix a = random_hermitian(std::size_t{1} << qubits, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(clonot::kernels::sym_conjugate(a, qubits));
}

// The dense route the structured kernel replaces: P (.) P as two products.
void BM_sym_conjugate_dense(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const CMatrix a = random_hermitian(std::size_t{1} << qubits, 5);
    const CMatrix p = clonot::universal::sym_projector(qubits).matrix();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            clonot::kernels::matmul(clonot::kernels::matmul(p, a), p));
}

void BM_projection_cloner(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const clonot::fock::QubitAmplitudes zero(1.0, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(clonot::universal::projection_cloner(1, m, zero));
}

BENCHMARK(BM_matmul_serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_parallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kron_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kron_parallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sym_conjugate_serial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sym_conjugate_parallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sym_conjugate_dense)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_projection_cloner)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
