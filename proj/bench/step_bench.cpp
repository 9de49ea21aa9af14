// Copyright 2026 The starwalk Authors
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
#include <omp.h>

#include "starwalk/kernels.hpp"
#include "starwalk/walk.hpp"

using namespace starwalk;

namespace {

void BM_ReferenceStep(benchmark::State& st) {
    const auto g = StarChainGraph::three_star(static_cast<int>(st.range(0)), 3);
    const StateVector in = initial_state(g);
    StateVector out(g.state_count());
    for (auto _ : st) {
        apply_step_reference(g, in.span(), out.span());
        benchmark::DoNotOptimize(out.span().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(g.state_count()));
}

// Second argument is the OpenMP thread count.
void BM_ParallelStep(benchmark::State& st) {
    const auto g = StarChainGraph::three_star(static_cast<int>(st.range(0)), 3);
    const StepOperator op(g);
    const StateVector in = initial_state(g);
    StateVector out(g.state_count());
    const int saved = omp_get_max_threads();
    omp_set_num_threads(static_cast<int>(st.range(1)));
    for (auto _ : st) {
        apply_step(op, in.span(), out.span());
        benchmark::DoNotOptimize(out.span().data());
    }
    omp_set_num_threads(saved);
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(g.state_count()));
}

}  // namespace

BENCHMARK(BM_ReferenceStep)->Arg(100)->Arg(1000)->Arg(4000);
BENCHMARK(BM_ParallelStep)
    ->ArgsProduct({{100, 1000, 4000, 64000}, {1, 2, 4}})
    ->ArgNames({"prongs", "threads"});

BENCHMARK_MAIN();
