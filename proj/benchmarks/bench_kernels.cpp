#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>

#include "ecsmet/fock/fock.hpp"
#include "ecsmet/fock/kernels.hpp"
#include "ecsmet/fock/oracle.hpp"
#include "ecsmet/probe.hpp"

using namespace ecsmet;
using cd = std::complex<double>;

namespace {

uint64_t splitmix(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Eigen::MatrixXcd state_matrix(int nc) {
    const fock::FockVector v =
        fock::ecs_fock(ProbeSpec{1.0, -0.3, Sign::plus}, nc, 1.0);
    return v.amplitudes * v.amplitudes.adjoint();
}

Eigen::VectorXcd random_vector(int n) {
    uint64_t s = 0xbe7cULL;
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        const double re =
            static_cast<double>(splitmix(s) >> 11) * 0x1.0p-53 - 0.5;
        const double im =
            static_cast<double>(splitmix(s) >> 11) * 0x1.0p-53 - 0.5;
        v(i) = cd(re, im);
    }
    return v;
}

void bm_loss_serial(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const Eigen::MatrixXcd rho = state_matrix(nc);
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::loss_mode_a_serial(rho, nc, 0.3));
}

void bm_loss_parallel(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const Eigen::MatrixXcd rho = state_matrix(nc);
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::loss_mode_a(rho, nc, 0.3));
}

void bm_partial_transpose_serial(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const Eigen::MatrixXcd rho = state_matrix(nc);
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::partial_transpose_a_serial(rho, nc));
}

void bm_partial_transpose_parallel(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const Eigen::MatrixXcd rho = state_matrix(nc);
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::partial_transpose_a(rho, nc));
}

void bm_splitter_serial(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const fock::BeamSplitter bs(nc);
    const Eigen::VectorXcd psi = random_vector(fock::pair_dim(nc));
    for (auto _ : state) benchmark::DoNotOptimize(bs.apply_serial(psi));
}

void bm_splitter_parallel(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const fock::BeamSplitter bs(nc);
    const Eigen::VectorXcd psi = random_vector(fock::pair_dim(nc));
    for (auto _ : state) benchmark::DoNotOptimize(bs.apply(psi));
}

void bm_spectrum_dense(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const Eigen::MatrixXd rho = fock::lossy_output_real(
        ProbeSpec{1.0, -0.3, Sign::plus}, LossModel::both_arms, 0.3, nc);
    for (auto _ : state) benchmark::DoNotOptimize(fock::dense_spectrum(rho));
}

void bm_spectrum_subspace(benchmark::State& state) {
    const int nc = static_cast<int>(state.range(0));
    const Eigen::MatrixXd rho = fock::lossy_output_real(
        ProbeSpec{1.0, -0.3, Sign::plus}, LossModel::both_arms, 0.3, nc);
    for (auto _ : state)
        benchmark::DoNotOptimize(fock::subspace_spectrum(rho, 8));
}

} // namespace

BENCHMARK(bm_loss_serial)->Arg(16)->Arg(24)->Arg(32)->Arg(40);
BENCHMARK(bm_loss_parallel)->Arg(16)->Arg(24)->Arg(32)->Arg(40);
BENCHMARK(bm_partial_transpose_serial)->Arg(16)->Arg(24)->Arg(32)->Arg(40);
BENCHMARK(bm_partial_transpose_parallel)->Arg(16)->Arg(24)->Arg(32)->Arg(40);
BENCHMARK(bm_splitter_serial)->Arg(16)->Arg(24)->Arg(32)->Arg(40);
BENCHMARK(bm_splitter_parallel)->Arg(16)->Arg(24)->Arg(32)->Arg(40);
BENCHMARK(bm_spectrum_dense)->Arg(16)->Arg(20);
BENCHMARK(bm_spectrum_subspace)->Arg(16)->Arg(20)->Arg(32)->Arg(40);

BENCHMARK_MAIN();
