#include <benchmark/benchmark.h>

#include <vector>

#include "galoisrad/kernels.hpp"
#include "galoisrad/upoly.hpp"

using namespace galoisrad;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(kernel_threads()));
}

// prod over sigma in S4 of (y - phi_sigma), the shape of the generic resolvent.
void BM_Product(benchmark::State& state) {
  const int n = 4;
  MultiPoly y = MultiPoly::param(n, 1, 0);
  MultiPoly phi(n, 1);
  for (int i = 1; i <= n; ++i) phi += MultiPoly::constant(n, 1, make_rational(i)) * MultiPoly::root(n, 1, i);
  std::vector<MultiPoly> factors;
  for (const auto& sigma : all_permutations(n)) factors.push_back(y - phi.apply_permutation(sigma));
  factors.resize(12);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::product(factors, mode(state)));
  label(state);
}

void BM_PermutationImages(benchmark::State& state) {
  const int n = 5;
  MultiPoly f = (MultiPoly::root(n, 0, 1) + MultiPoly::root(n, 0, 2) * MultiPoly::root(n, 0, 3)).pow(4);
  std::vector<Permutation> perms = all_permutations(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::permutation_images(f, perms, mode(state)));
  label(state);
}

void BM_PhiValues(benchmark::State& state) {
  const int prec = 1024;
  std::vector<ApproxComplex> roots = numeric_roots(UniPoly::from_ints({3, 1, 0, 0, 0, 1}), prec);
  std::vector<Permutation> perms = all_permutations(5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::phi_values(roots, make_rational(3), perms, mode(state)));
  label(state);
}

void BM_CyclotomicIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::cyclotomic_identity_range(1, 120, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_Product)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermutationImages)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiValues)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclotomicIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
