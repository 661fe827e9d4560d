/*
 * Copyright 2026 the elgot project contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "elgot/coalgebra.hpp"

using namespace elgot;

namespace {

CoalgPtr random_nfa(std::size_t states, std::size_t alphabet, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::string> syms;
    for (std::size_t i = 0; i < alphabet; ++i) syms.push_back(std::string(1, char('a' + i)));
    Instance inst = make_instance(VarietyId::Jsl, moore_shape(bool_labels(), make_finset(syms)));
    std::vector<std::string> names;
    std::vector<Val> step;
    for (std::size_t i = 0; i < states; ++i) {
        names.push_back("s" + std::to_string(i));
        std::vector<Val> kids;
        for (std::size_t a = 0; a < alphabet; ++a) {
            std::vector<Val> items;
            for (std::size_t t = 0; t < states; ++t)
                if (rng.coin()) items.push_back(atom(t));
            kids.push_back(tbox(VarietyId::Jsl, 0, std::move(items)));
        }
        step.push_back(node(rng.below(2), std::move(kids)));
    }
    return make_ffg_coalgebra(inst, make_finset(std::move(names)), std::move(step));
}

}  // namespace

static void BM_materialize_full(benchmark::State& state) {
    CoalgPtr c = random_nfa(static_cast<std::size_t>(state.range(0)), 2, 99);
    MaterializeOptions opts;
    opts.reachable_only = false;
    opts.max_states = 1u << 14;
    for (auto _ : state) benchmark::DoNotOptimize(materialize(*c, opts));
}
BENCHMARK(BM_materialize_full)->Arg(6)->Arg(8)->Arg(10);

static void BM_partition_refine(benchmark::State& state) {
    CoalgPtr c = random_nfa(static_cast<std::size_t>(state.range(0)), 2, 7);
    MaterializeOptions opts;
    opts.reachable_only = false;
    opts.max_states = 1u << 14;
    Machine m = materialize(*c, opts);
    for (auto _ : state) benchmark::DoNotOptimize(partition_refine(m));
}
BENCHMARK(BM_partition_refine)->Arg(6)->Arg(8)->Arg(10);

static void BM_behavioral_equiv(benchmark::State& state) {
    CoalgPtr c = random_nfa(static_cast<std::size_t>(state.range(0)), 2, 13);
    CoalgPtr d = random_nfa(static_cast<std::size_t>(state.range(0)), 2, 17);
    Val s = eta(VarietyId::Jsl, atom(0));
    for (auto _ : state) benchmark::DoNotOptimize(behavioral_equiv(c, s, d, s));
}
BENCHMARK(BM_behavioral_equiv)->Arg(4)->Arg(8);
