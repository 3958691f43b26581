// Copyright 2026 The rootcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "rootcover/decide.hpp"
#include "rootcover/factor.hpp"
#include "rootcover/groups.hpp"
#include "rootcover/modpoly.hpp"
#include "rootcover/padic.hpp"
#include "rootcover/splitfield.hpp"

namespace rootcover {
namespace {

const IntPoly kBrandl5Product = IntPoly{-2, 0, 0, 0, 0, 1} * IntPoly{1, 1, 1, 1, 1};

void BM_Resultant(benchmark::State& state) {
  IntPoly f = kBrandl5Product;
  IntPoly g = f.derivative();
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant);

void BM_FactorOverRationals(benchmark::State& state) {
  // (x^5 - x - 1)(x^4 + 1)(x^3 - 2): three irreducible parts of degree 12
  IntPoly f = IntPoly{-1, -1, 0, 0, 0, 1} * IntPoly{1, 0, 0, 0, 1} * IntPoly{-2, 0, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_rationals(f));
}
BENCHMARK(BM_FactorOverRationals)->Unit(benchmark::kMillisecond);

void BM_RootsModP(benchmark::State& state) {
  ModPoly f(1000003, kBrandl5Product);
  for (auto _ : state) benchmark::DoNotOptimize(roots_mod_p(f));
}
BENCHMARK(BM_RootsModP)->Unit(benchmark::kMicrosecond);

void BM_HasQpRoot(benchmark::State& state) {
  // x^2 - 17 * 2^k: lifting runs deeper as k grows
  IntPoly g(std::vector<mpz_class>{mpz_class(-17) << static_cast<unsigned>(state.range(0)), 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(has_qp_root(g, 2));
}
BENCHMARK(BM_HasQpRoot)->Arg(0)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_SymmetricClosure(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup::symmetric(n));
}
BENCHMARK(BM_SymmetricClosure)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_MinCoverSymmetric(benchmark::State& state) {
  auto g = PermGroup::symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_cover_m(g, 2));
}
BENCHMARK(BM_MinCoverSymmetric)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_FrobeniusCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_catalog(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_FrobeniusCatalog)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SplittingBrandl3(benchmark::State& state) {
  std::vector<IntPoly> fs{IntPoly{1, 1, 1}, IntPoly{-2, 0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(splitting_data(fs));
}
BENCHMARK(BM_SplittingBrandl3)->Unit(benchmark::kMillisecond);

void BM_SplittingBrandl5(benchmark::State& state) {
  std::vector<IntPoly> fs{IntPoly{1, 1, 1, 1, 1}, IntPoly{-2, 0, 0, 0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(splitting_data(fs));
}
BENCHMARK(BM_SplittingBrandl5)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_StrongCheckTriple(benchmark::State& state) {
  auto inst = verify_instance("(x^2-2)(x^2-17)(x^2-34)");
  for (auto _ : state) benchmark::DoNotOptimize(strong_check(inst));
}
BENCHMARK(BM_StrongCheckTriple)->Unit(benchmark::kMillisecond);

void BM_SampleNoWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_no_witness(kBrandl5Product, 200));
}
BENCHMARK(BM_SampleNoWitness)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rootcover

BENCHMARK_MAIN();
