//  Copyright 2026 The polaritykit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <benchmark/benchmark.h>

#include <memory>

#include "polaritykit/canonical_frame.hpp"
#include "polaritykit/io.hpp"
#include "polaritykit/sorted_relation.hpp"

namespace pk = polaritykit;

namespace {

void BM_StablePowerset(benchmark::State& state) {
  const pk::Polarity p = pk::io::random_polarity(1, state.range(0), state.range(0), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pk::all_stable_sets(p, pk::Sort::one, pk::StableEnumeration::powerset));
  }
}
BENCHMARK(BM_StablePowerset)->DenseRange(6, 16, 2);

void BM_StableIntersection(benchmark::State& state) {
  const pk::Polarity p = pk::io::random_polarity(1, state.range(0), state.range(0), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pk::all_stable_sets(p, pk::Sort::one, pk::StableEnumeration::intersection_closure));
  }
}
BENCHMARK(BM_StableIntersection)->DenseRange(6, 16, 2)->Arg(24)->Arg(32);

void BM_CanonicalFrame(benchmark::State& state) {
  const auto kind = state.range(1) == 0 ? pk::ChainKind::godel : pk::ChainKind::lukasiewicz;
  const pk::LatticeExpansion e = pk::make_flew_chain(state.range(0), kind);
  for (auto _ : state) benchmark::DoNotOptimize(pk::build_canonical_frame(e));
}
BENCHMARK(BM_CanonicalFrame)->ArgsProduct({{3, 4, 5, 6}, {0, 1}});

void BM_CanonicalPolarity(benchmark::State& state) {
  const pk::Lattice l = pk::make_boolean(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pk::canonical_polarity(l));
}
BENCHMARK(BM_CanonicalPolarity)->DenseRange(2, 5);

void BM_Additivity(benchmark::State& state) {
  const pk::CanonicalFrame cf = pk::build_canonical_frame(pk::make_flew_chain(state.range(0), pk::ChainKind::godel));
  const pk::SortedRelation& r = cf.relation("o");
  for (auto _ : state) benchmark::DoNotOptimize(pk::check_complete_additivity(r, 0));
}
BENCHMARK(BM_Additivity)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
