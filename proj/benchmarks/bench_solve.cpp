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

#include "elgot/enumerate.hpp"

using namespace elgot;

static void BM_solve_stream(benchmark::State& state) {
    BackendPtr phi = stream_backend();
    Instance inst = phi->inst();
    FinSetPtr xs = var_set("x", static_cast<std::size_t>(state.range(0)));
    AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
    std::vector<Val> pool = {realize_rational(Rational(1, 2))};
    auto steps = enum_step_values(inst, carrier, phi->algebra(), pool, EnumBounds::counters(2));
    Rng rng(5);
    FfgEquation e = random_equation(rng, inst, xs, phi->algebra(), steps);
    for (auto _ : state) benchmark::DoNotOptimize(solve_in_phi(phi, e));
}
BENCHMARK(BM_solve_stream)->Arg(2)->Arg(4)->Arg(8);

static void BM_solve_bisim(benchmark::State& state) {
    Instance inst = make_instance(VarietyId::Jsl, moore_shape(bool_labels(), make_finset({"a"})));
    BackendPtr phi = bisim_backend(inst);
    FinSetPtr xs = var_set("x", static_cast<std::size_t>(state.range(0)));
    AlgebraPtr carrier = free_algebra(VarietyId::Jsl, xs);
    std::vector<Val> pool = default_param_pool(phi);
    auto steps = enum_step_values(inst, carrier, phi->algebra(), pool, {});
    Rng rng(5);
    FfgEquation e = random_equation(rng, inst, xs, phi->algebra(), steps);
    for (auto _ : state) benchmark::DoNotOptimize(solve_in_phi(phi, e));
}
BENCHMARK(BM_solve_bisim)->Arg(2)->Arg(4);

static void BM_kleene(benchmark::State& state) {
    std::vector<std::string> names = {"c0", "c1", "c2", "c3"};
    AlgebraPtr carrier = finite_set(make_finset(names));
    std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) leq[i][j] = i <= j;
    auto structure = [](const Val& v) {
        return fin(std::min<std::uint64_t>(v.kids.at(0).tag + 1, 3));
    };
    PointedPosetAlgebra poset = make_poset_algebra(carrier, leq, 0, id_shape(), structure);
    Instance inst = make_instance(VarietyId::Set, id_shape());
    FinSetPtr xs = var_set("x", 2);
    AlgebraPtr xcar = free_algebra(VarietyId::Set, xs);
    FfgEquation e = make_equation(
        inst, xs, carrier,
        {eq_inl(inst, xcar, carrier, node(0, {free_eta(VarietyId::Set, 1)})),
         eq_inl(inst, xcar, carrier, node(0, {free_eta(VarietyId::Set, 0)}))});
    for (auto _ : state) benchmark::DoNotOptimize(kleene_solve(poset, e));
}
BENCHMARK(BM_kleene);

BENCHMARK_MAIN();
