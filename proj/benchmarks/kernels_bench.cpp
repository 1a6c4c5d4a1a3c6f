// Copyright 2026 The logdiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "logdiff/fixtures.hpp"
#include "logdiff/jacobian.hpp"
#include "logdiff/linalg.hpp"
#include "logdiff/sampling.hpp"
#include "logdiff/tangent.hpp"

namespace logdiff {
namespace {

void BM_PermanentExpansion(benchmark::State& state) {
  Sampler rng(1);
  const auto m = rng.integer_matrix(static_cast<std::size_t>(state.range(0)), -5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_expansion(m));
}
BENCHMARK(BM_PermanentExpansion)->DenseRange(2, 8, 2);

void BM_PermanentRyser(benchmark::State& state) {
  Sampler rng(1);
  const auto m = rng.integer_matrix(static_cast<std::size_t>(state.range(0)), -5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser(m));
}
BENCHMARK(BM_PermanentRyser)->DenseRange(2, 8, 2);

Matrix<Poly> poly_matrix(std::size_t n) {
  Sampler rng(2);
  Matrix<Poly> m(n, n, Poly(3));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.poly(3, 2, 3);
  }
  return m;
}

void BM_DeterminantCofactor(benchmark::State& state) {
  const auto m = poly_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_cofactor(m));
}
BENCHMARK(BM_DeterminantCofactor)->DenseRange(2, 6, 1);

void BM_DeterminantBareiss(benchmark::State& state) {
  const auto m = poly_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_bareiss(m));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(2, 6, 1);

void BM_SymPowerCheck(benchmark::State& state) {
  Sampler rng(3);
  const auto m = rng.integer_matrix(3, -5, 5);
  const auto p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_sym_power_det(m, p));
}
BENCHMARK(BM_SymPowerCheck)->DenseRange(1, 4, 1);

void BM_HigherJacobianBoolean3(benchmark::State& state) {
  const Fixture fx = builtin_fixture("boolean3");
  const auto p = static_cast<unsigned>(state.range(0));
  const OpFamily theta = theta_power_family(std::span<const Derivation>(fx.basis), p);
  const std::vector<Poly> f = coordinates(3);
  for (auto _ : state) benchmark::DoNotOptimize(higher_jacobian(f, theta));
}
BENCHMARK(BM_HigherJacobianBoolean3)->DenseRange(1, 3, 1);

void BM_DecomposeTriple(benchmark::State& state) {
  const Fixture fx = builtin_fixture("triple2");
  const SaitoBasis basis = saito_check(fx.arrangement, fx.basis).basis();
  Sampler rng(4);
  std::vector<DiffOp> ops;
  for (int k = 0; k < 16; ++k) {
    ops.push_back(rng.delta_element(fx.basis, static_cast<unsigned>(state.range(0)), 2));
  }
  Decomposer dec(fx.arrangement, basis);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dec.run(ops[i++ % ops.size()]));
}
BENCHMARK(BM_DecomposeTriple)->DenseRange(1, 4, 1);

}  // namespace
}  // namespace logdiff

BENCHMARK_MAIN();
