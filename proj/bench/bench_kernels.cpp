#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "curvlab/kernels.hpp"

using namespace curvlab;
namespace k = curvlab::kernels;

namespace {

Matrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (double& v : m.data()) v = g(rng);
  return m;
}

std::vector<double> random_tensor(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> t(n * n * n * n);
  for (double& v : t) v = g(rng);
  return t;
}

std::vector<Vector> random_dirs(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Vector> dirs(count, Vector(n));
  for (auto& d : dirs) {
    double s = 0.0;
    for (double& v : d) {
      v = g(rng);
      s += v * v;
    }
    for (double& v : d) v /= std::sqrt(s);
  }
  return dirs;
}

template <bool Parallel>
void BM_Assemble(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Matrix> mats;
  for (int i = 0; i < 9; ++i) mats.push_back(random_matrix(n, rng));
  std::vector<k::Term> terms;
  for (std::size_t i = 0; i < 8; ++i) {
    terms.push_back({k::TermKind::Wedge, 1.0, &mats[i], &mats[i]});
    terms.push_back({k::TermKind::Scalar, 2.0, &mats[i], &mats[i]});
  }
  std::vector<double> out(n * n * n * n);
  for (auto _ : state) {
    std::fill(out.begin(), out.end(), 0.0);
    if constexpr (Parallel)
      k::assemble(n, terms, out);
    else
      k::assemble_serial(n, terms, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_CliffordGradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const std::vector<double> r = random_tensor(n, rng);
  const Matrix j = random_matrix(n, rng);
  for (auto _ : state) {
    Matrix g = Parallel ? k::clifford_gradient(n, r, j) : k::clifford_gradient_serial(n, r, j);
    benchmark::DoNotOptimize(g.data().data());
  }
}

template <bool Parallel>
void BM_Ricci(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const std::vector<double> r = random_tensor(n, rng);
  for (auto _ : state) {
    Matrix ric = Parallel ? k::ricci(n, r) : k::ricci_serial(n, r);
    benchmark::DoNotOptimize(ric.data().data());
  }
}

template <bool Parallel>
void BM_ReducedSpectra(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  const std::vector<double> r = random_tensor(n, rng);
  const std::vector<Vector> dirs = random_dirs(n, 64, rng);
  for (auto _ : state) {
    auto s = Parallel ? k::reduced_spectra(n, r, dirs) : k::reduced_spectra_serial(n, r, dirs);
    benchmark::DoNotOptimize(s.data());
  }
}

}  // namespace

BENCHMARK(BM_Assemble<false>)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Assemble<true>)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_CliffordGradient<false>)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CliffordGradient<true>)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Ricci<false>)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Ricci<true>)->Arg(16)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_ReducedSpectra<false>)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedSpectra<true>)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
