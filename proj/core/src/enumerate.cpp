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

#include "elgot/enumerate.hpp"

namespace elgot {

FinSetPtr var_set(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return make_finset(std::move(names));
}

std::vector<Val> default_param_pool(const BackendPtr& backend) {
    std::vector<Val> pool;
    if (backend->inst().variety == VarietyId::Unary) {
        pool.push_back(realize_rational(Rational(1, 1)));
        pool.push_back(realize_rational(Rational(1, 2)));
        return pool;
    }
    // JSL: bottom plus the unit class of a small one-generator machine
    pool.push_back(backend->algebra()->bottom());
    const Instance& inst = backend->inst();
    FinSetPtr gens = make_finset({"p"});
    AlgebraPtr carrier = free_algebra(inst.variety, gens);
    const std::size_t width = inst.shape.arity(0);
    std::vector<Val> kids(width, tbox(VarietyId::Jsl, 0, {atom(0)}));
    Val n = node(inst.shape.label_count() - 1, kids);
    Val bval = bval_from_node(inst, carrier, n);
    CoalgPtr c = make_ffg_coalgebra(inst, gens, {bval}, "pool");
    pool.push_back(backend->class_of(c, free_eta(inst.variety, 0)));
    return pool;
}

std::vector<Val> enum_step_values(const Instance& inst, const AlgebraPtr& carrier,
                                  const AlgebraPtr& params, const std::vector<Val>& param_pool,
                                  const EnumBounds& bounds) {
    std::vector<Val> bvals = bnode_algebra(inst, carrier)->enumerate(bounds);
    Coproduct target = coproduct(bnode_algebra(inst, carrier), params);
    std::vector<Val> out;
    if (inst.variety == VarietyId::Jsl) {
        for (const Val& b : bvals)
            for (const Val& p : param_pool) out.push_back(pair(b, p));
    } else {
        for (const Val& b : bvals) out.push_back(target.inl(b));
        for (const Val& p : param_pool) out.push_back(target.inr(p));
    }
    return out;
}

std::vector<FfgEquation> enum_equations(const Instance& inst, FinSetPtr vars, AlgebraPtr params,
                                        const std::vector<Val>& step_values, std::size_t cap) {
    std::vector<FfgEquation> out;
    const std::size_t n = vars->size();
    if (step_values.empty()) return out;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        std::vector<Val> step;
        step.reserve(n);
        for (std::size_t i = 0; i < n; ++i) step.push_back(step_values[pick[i]]);
        FfgEquation e;
        e.inst = inst;
        e.vars = vars;
        e.params = params;
        e.step = std::move(step);
        out.push_back(std::move(e));
        if (out.size() >= cap) return out;
        std::size_t pos = 0;
        while (pos < n && ++pick[pos] == step_values.size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return out;
}

FfgEquation random_equation(Rng& rng, const Instance& inst, FinSetPtr vars, AlgebraPtr params,
                            const std::vector<Val>& step_values) {
    if (step_values.empty())
        throw Error(ErrorKind::InvalidArgument, "no step values to draw from");
    std::vector<Val> step;
    step.reserve(vars->size());
    for (std::size_t i = 0; i < vars->size(); ++i)
        step.push_back(step_values[static_cast<std::size_t>(rng.below(step_values.size()))]);
    FfgEquation e;
    e.inst = inst;
    e.vars = std::move(vars);
    e.params = std::move(params);
    e.step = std::move(step);
    return e;
}

Hom random_free_hom(Rng& rng, const AlgebraPtr& free_src, const AlgebraPtr& free_dst,
                    const EnumBounds& bounds) {
    const FinSetPtr* gens = free_src->free_gens();
    if (!gens) throw Error(ErrorKind::InvalidArgument, "random hom needs a free source");
    std::vector<Val> pool = free_dst->enumerate(bounds);
    std::vector<Val> images;
    images.reserve((*gens)->size());
    for (std::size_t i = 0; i < (*gens)->size(); ++i)
        images.push_back(pool[static_cast<std::size_t>(rng.below(pool.size()))]);
    return hom_from_gens(free_src, free_dst, std::move(images));
}

HarnessReport builtin_laws_report(const LawBounds& bounds) {
    HarnessReport rep;
    rep.axiom = "distributive-law";
    Shape moore2 = moore_shape(bool_labels(), make_finset({"a", "b"}));
    for (const DistLaw& law :
         {builtin_law(VarietyId::Set, moore2), builtin_law(VarietyId::Unary, id_shape()),
          builtin_law(VarietyId::Unary, moore2), builtin_law(VarietyId::Jsl, moore2)}) {
        LawReport r = check_dist_law(law, bounds);
        rep.instances += r.checked;
        if (!r.ok) rep.failures.push_back(law.name + ": " + r.axiom + " " + r.counterexample);
        LawReport n = check_law_naturality(law, bounds);
        rep.instances += n.checked;
        if (!n.ok) rep.failures.push_back(law.name + ": naturality " + n.counterexample);
    }
    return rep;
}

HarnessReport combinator_laws_report(std::size_t rounds_per_variety, std::uint64_t seed,
                                     std::size_t var_bound) {
    HarnessReport rep;
    rep.axiom = "combinators";
    rep.seed = seed;
    EnumBounds eb = EnumBounds::counters(2);
    for (VarietyId v : {VarietyId::Set, VarietyId::Unary, VarietyId::Jsl}) {
        Instance inst = v == VarietyId::Unary
                            ? make_instance(v, id_shape())
                            : make_instance(v, moore_shape(bool_labels(), make_finset({"a"})));
        FinSetPtr xs = var_set("x", std::max<std::size_t>(1, var_bound));
        FinSetPtr ys = var_set("y", std::max<std::size_t>(1, var_bound));
        FinSetPtr zs = var_set("z", 1);
        AlgebraPtr ty = free_algebra(v, ys);
        AlgebraPtr tz = free_algebra(v, zs);
        AlgebraPtr a = free_algebra(v, var_set("a", 2));
        AlgebraPtr b = free_algebra(v, var_set("b", 2));
        AlgebraPtr c = free_algebra(v, var_set("c", 2));
        AlgebraPtr xcar = free_algebra(v, xs);
        AlgebraPtr ycar = free_algebra(v, ys);
        AlgebraPtr zcar = free_algebra(v, zs);

        auto easteps = enum_step_values(inst, xcar, a, a->enumerate(eb), eb);
        auto eysteps = enum_step_values(inst, xcar, ty, ty->enumerate(eb), eb);
        auto fasteps = enum_step_values(inst, ycar, a, a->enumerate(eb), eb);
        auto fzsteps = enum_step_values(inst, ycar, tz, tz->enumerate(eb), eb);
        auto gasteps = enum_step_values(inst, zcar, a, a->enumerate(eb), eb);

        Rng rng(seed);
        for (std::size_t round = 0; round < rounds_per_variety; ++round) {
            ++rep.instances;
            FfgEquation e1 = random_equation(rng, inst, xs, a, easteps);
            Hom s = random_free_hom(rng, a, b, eb);
            Hom t = random_free_hom(rng, b, c, eb);
            if (!equation_eq(aft(t, aft(s, e1)), aft(hom_compose(t, s), e1)))
                rep.failures.push_back(to_string(v) + ": composition law");

            FfgEquation e2 = random_equation(rng, inst, xs, ty, eysteps);
            FfgEquation f2 = random_equation(rng, inst, ys, a, fasteps);
            if (!equation_eq(aft(s, box(e2, f2)), box(e2, aft(s, f2))))
                rep.failures.push_back(to_string(v) + ": slide law");

            FfgEquation f3 = random_equation(rng, inst, ys, tz, fzsteps);
            FfgEquation g3 = random_equation(rng, inst, zs, a, gasteps);
            FfgEquation fg = box(f3, g3);
            std::vector<Val> images;
            for (std::size_t i = 0; i < ys->size(); ++i) images.push_back(free_eta(v, i));
            Hom inl_hom = hom_from_gens(ty, free_algebra(v, fg.vars), images);
            if (!equation_eq(box(box(e2, f3), g3), box(aft(inl_hom, e2), fg)))
                rep.failures.push_back(to_string(v) + ": associativity law");
            if (rep.failures.size() > 5) return rep;
        }
    }
    return rep;
}

HarnessReport solution_square_report(const BackendPtr& backend, std::size_t rounds,
                                     std::uint64_t seed, std::size_t var_bound) {
    HarnessReport rep;
    rep.axiom = "solution-square";
    rep.seed = seed;
    ElgotAlgebra alg = backend_elgot(backend);
    FinSetPtr xs = var_set("x", std::max<std::size_t>(1, var_bound));
    AlgebraPtr carrier = free_algebra(alg.inst.variety, xs);
    std::vector<Val> pool = default_param_pool(backend);
    EnumBounds eb = EnumBounds::counters(2);
    auto steps = enum_step_values(alg.inst, carrier, alg.carrier, pool, eb);
    Rng rng(seed);
    for (std::size_t round = 0; round < rounds; ++round) {
        ++rep.instances;
        FfgEquation e = random_equation(rng, alg.inst, xs, alg.carrier, steps);
        Solution s = alg.solver(e);
        if (!check_solution(alg, e, s)) rep.failures.push_back("square fails");
        if (rep.failures.size() > 5) return rep;
    }
    return rep;
}

}  // namespace elgot
