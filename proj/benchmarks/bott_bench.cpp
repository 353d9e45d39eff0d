#include "bott/cohomology.hpp"
#include "bott/enumerate.hpp"
#include "bott/predicates.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

std::vector<bott::BottMatrix> sample(std::size_t n, std::size_t count) {
  std::mt19937_64 rng(n * 977 + count);
  std::vector<bott::BottMatrix> out;
  for (std::size_t k = 0; k < count; ++k) {
    // Column j may only use rows above the diagonal.
    std::vector<std::uint64_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = rng() & ((std::uint64_t{1} << j) - 1);
    out.push_back(bott::BottMatrix::from_columns(cols));
  }
  return out;
}

void BM_ParitySymplectic(benchmark::State& state) {
  const auto pool = sample(static_cast<std::size_t>(state.range(0)), 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bott::is_symplectic(pool[i++ & 1023]));
}
BENCHMARK(BM_ParitySymplectic)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_OracleMatching(benchmark::State& state) {
  const auto pool = sample(static_cast<std::size_t>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bott::cohomology::is_cohomologically_symplectic(
        pool[i++ & 255], bott::cohomology::OracleMode::matching));
  }
}
BENCHMARK(BM_OracleMatching)->Arg(4)->Arg(6)->Arg(8);

void BM_OracleRandomized(benchmark::State& state) {
  const auto pool = sample(static_cast<std::size_t>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bott::cohomology::is_cohomologically_symplectic(
        pool[i++ & 255], bott::cohomology::OracleMode::randomized));
  }
}
BENCHMARK(BM_OracleRandomized)->Arg(4)->Arg(6);

void BM_Betti(benchmark::State& state) {
  const auto pool = sample(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bott::cohomology::betti(pool[i++ & 63]));
}
BENCHMARK(BM_Betti)->Arg(6)->Arg(12)->Arg(20);

void BM_Census(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bott::enumerate::census(n, {}));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
