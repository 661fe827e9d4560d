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

#include "elgot/phi.hpp"

using namespace elgot;

namespace {

CoalgPtr cycle_of_size(std::size_t n) {
    std::vector<std::string> names;
    std::vector<Val> step;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("z" + std::to_string(i));
        step.push_back(node(0, {tbox(VarietyId::Unary, i % 5, {atom((i + 1) % n)})}));
    }
    return make_ffg_coalgebra(make_instance(VarietyId::Unary, id_shape()),
                              make_finset(std::move(names)), std::move(step));
}

}  // namespace

static void BM_stream_of(benchmark::State& state) {
    CoalgPtr c = cycle_of_size(static_cast<std::size_t>(state.range(0)));
    Val start = tbox(VarietyId::Unary, 0, {atom(0)});
    for (auto _ : state) benchmark::DoNotOptimize(stream_of(*c, start));
}
BENCHMARK(BM_stream_of)->Arg(8)->Arg(64)->Arg(512);

static void BM_ep_equiv(benchmark::State& state) {
    EpStream s = parse_epstream("(1,2,7,4)(1,3,2)^w");
    EpStream t = parse_epstream("(5,6)(0,4)^w");
    for (auto _ : state) benchmark::DoNotOptimize(ep_equiv(s, t));
}
BENCHMARK(BM_ep_equiv);

static void BM_zigzag_witness(benchmark::State& state) {
    CoalgPtr a = cycle_of_size(static_cast<std::size_t>(state.range(0)));
    CoalgPtr b = cycle_of_size(static_cast<std::size_t>(state.range(0)));
    Val start = tbox(VarietyId::Unary, 0, {atom(0)});
    for (auto _ : state) benchmark::DoNotOptimize(zigzag_witness(a, start, b, start));
}
BENCHMARK(BM_zigzag_witness)->Arg(8)->Arg(64);
