// Copyright 2026 The oqwc Authors
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

#include <cmath>
#include <random>

#include "oqwc/batch.hpp"
#include "oqwc/dataset.hpp"
#include "oqwc/oqw.hpp"

namespace {

using namespace oqwc;

const PreparedDataset& iris() {
    static const PreparedDataset data = standardize_normalize(load_csv(OQWC_BENCH_DATA));
    return data;
}

// Ring walk: a self loop and two neighbours per node, each operator a
// unitary scaled by 1/sqrt(3).
TransitionOperatorSet ring_walk(std::size_t nodes, std::size_t dim) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    auto phases = [&] {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = std::polar(1.0, angle(rng));
        }
        return m;
    };
    ComplexMatrix shift(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        shift((i + 1) % dim, i) = 1.0;
    }
    const Complex w = 1.0 / std::sqrt(3.0);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes; ++i) {
        edges.push_back({i, i, w * phases()});
        edges.push_back({i, (i + 1) % nodes, w * matmul(shift, phases())});
        edges.push_back({i, (i + nodes - 1) % nodes, w * matmul(dagger(shift), phases())});
    }
    return TransitionOperatorSet(nodes, dim, std::move(edges));
}

template <auto Step>
void BM_OqwStep(benchmark::State& state) {
    const auto nodes = static_cast<std::size_t>(state.range(0));
    const TransitionOperatorSet ops = ring_walk(nodes, 8);
    const OqwState start = OqwState::localized(nodes, 0, DensityBlock::pure(basis_state(8, 0)));
    OqwState s = Step(ops, start);
    for (auto _ : state) {
        s = Step(ops, s);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ops.edges().size()));
}

template <auto Classify>
void BM_ClassifyTriples(benchmark::State& state) {
    const std::vector<Triple> triples = sample_triples(iris(), static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        auto r = Classify(iris(), triples, WalkSchedule{0.7, 10});
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_OqwStep<oqw_step>)->Name("oqw_step/serial")->Arg(64)->Arg(1024);
BENCHMARK(BM_OqwStep<oqw_step_parallel>)->Name("oqw_step/parallel")->Arg(64)->Arg(1024);
BENCHMARK(BM_ClassifyTriples<classify_triples_serial>)->Name("classify_triples/serial")->Arg(2000);
BENCHMARK(BM_ClassifyTriples<classify_triples_parallel>)->Name("classify_triples/parallel")->Arg(2000);

BENCHMARK_MAIN();
