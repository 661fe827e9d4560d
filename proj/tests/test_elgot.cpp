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

#include <doctest.h>

#include "elgot/enumerate.hpp"

using namespace elgot;

namespace {


Instance nfa_inst() {
    return make_instance(VarietyId::Jsl, moore_shape(bool_labels(), make_finset({"a"})));
}

// a flat three-element pointed poset: bot below two incomparable points
PointedPosetAlgebra flat3() {
    AlgebraPtr carrier = finite_set(make_finset({"bot", "l", "r"}));
    std::vector<std::vector<bool>> leq = {
        {true, true, true}, {false, true, false}, {false, false, true}};
    auto structure = [](const Val& n) { return n.kids.at(0); };  // identity on the child
    return make_poset_algebra(carrier, leq, 0, id_shape(), structure);
}

// chains 0 < 1 < ... < n-1 with a monotone successor-saturating structure
PointedPosetAlgebra chain_poset(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    AlgebraPtr carrier = finite_set(make_finset(names));
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = i <= j;
    auto structure = [n](const Val& v) {
        std::uint64_t i = v.kids.at(0).tag;
        return fin(std::min<std::uint64_t>(i + 1, n - 1));
    };
    return make_poset_algebra(carrier, leq, 0, id_shape(), structure);
}

FfgEquation stream_loop(const BackendPtr& phi, std::uint64_t inc) {
    Instance inst = phi->inst();
    FinSetPtr xs = var_set("x", 1);
    AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
    return make_equation(
        inst, xs, phi->algebra(),
        {eq_inl(inst, carrier, phi->algebra(),
                node(0, {tbox(VarietyId::Unary, inc, {atom(0)})}))});
}

}  // namespace

TEST_CASE("the solution square checker") {
    BackendPtr phi = stream_backend();
    ElgotAlgebra alg = backend_elgot(phi);

    SUBCASE("a parameter-only equation is solved by the parameter") {
        Instance inst = phi->inst();
        FinSetPtr xs = var_set("x", 1);
        AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
        Val p = realize_rational(Rational(1, 1));
        FfgEquation e = make_equation(inst, xs, phi->algebra(),
                                      {eq_inr(inst, carrier, phi->algebra(), p)});
        Solution s;
        s.equation = e;
        s.assignment = {p};
        CHECK(check_solution(alg, e, s));
        // a perturbed assignment fails
        s.assignment = {realize_rational(Rational(2, 1))};
        CHECK_FALSE(check_solution(alg, e, s));
    }

    SUBCASE("solver outputs close the square") {
        for (std::uint64_t inc = 0; inc <= 3; ++inc) {
            FfgEquation e = stream_loop(phi, inc);
            Solution s = solve_in_phi(phi, e);
            CHECK(s.assignment[0].key == Rational(static_cast<std::int64_t>(inc), 1));
            CHECK(check_solution(alg, e, s));
        }
    }
}

TEST_CASE("backend structure maps are homomorphisms") {
    SUBCASE("stream") {
        ElgotAlgebra alg = backend_elgot(stream_backend());
        std::vector<Val> pool = {realize_rational(Rational(0, 1)),
                                 realize_rational(Rational(1, 1)),
                                 realize_rational(Rational(3, 2))};
        CHECK(check_structure_hom(alg, pool).ok);
    }
    SUBCASE("bisimilarity") {
        Instance inst = nfa_inst();
        BackendPtr phi = bisim_backend(inst);
        ElgotAlgebra alg = backend_elgot(phi);
        std::vector<Val> pool = default_param_pool(phi);
        CHECK(check_structure_hom(alg, pool).ok);
    }
}

TEST_CASE("least solutions over pointed posets") {
    PointedPosetAlgebra poset = chain_poset(3);
    ElgotAlgebra alg = poset_elgot(poset);
    Instance inst = alg.inst;
    FinSetPtr xs = var_set("x", 1);
    AlgebraPtr carrier = free_algebra(VarietyId::Set, xs);

    SUBCASE("the identity structure solves a self loop at bottom") {
        PointedPosetAlgebra idposet = flat3();
        FfgEquation e = make_equation(
            inst, xs, idposet.carrier,
            {eq_inl(inst, carrier, idposet.carrier, node(0, {free_eta(VarietyId::Set, 0)}))});
        Solution s = kleene_solve(idposet, e);
        CHECK(val_eq(s.assignment[0], fin(0)));
    }

    SUBCASE("a parameter step solves to the parameter") {
        FfgEquation e = make_equation(inst, xs, poset.carrier,
                                      {eq_inr(inst, carrier, poset.carrier, fin(2))});
        Solution s = kleene_solve(poset, e);
        CHECK(val_eq(s.assignment[0], fin(2)));
        CHECK(check_solution(alg, e, s));
    }

    SUBCASE("the self loop with the saturating successor climbs to the top") {
        FfgEquation e = make_equation(
            inst, xs, poset.carrier,
            {eq_inl(inst, carrier, poset.carrier, node(0, {free_eta(VarietyId::Set, 0)}))});
        Solution s = kleene_solve(poset, e);
        CHECK(val_eq(s.assignment[0], fin(2)));  // top of the 3-chain
    }

    SUBCASE("minimality against exhaustive assignment search") {
        // all equations over two variables, all solutions by brute force
        FinSetPtr xs2 = var_set("x", 2);
        AlgebraPtr carrier2 = free_algebra(VarietyId::Set, xs2);
        std::vector<Val> choices;
        for (std::size_t g = 0; g < 2; ++g)
            choices.push_back(eq_inl(inst, carrier2, poset.carrier,
                                     node(0, {free_eta(VarietyId::Set, g)})));
        for (std::size_t a = 0; a < 3; ++a)
            choices.push_back(eq_inr(inst, carrier2, poset.carrier, fin(a)));
        for (const Val& s0 : choices)
            for (const Val& s1 : choices) {
                FfgEquation e = make_equation(inst, xs2, poset.carrier, {s0, s1});
                Solution least = kleene_solve(poset, e);
                CHECK(check_solution(alg, e, least));
                for (std::size_t a = 0; a < 3; ++a)
                    for (std::size_t b = 0; b < 3; ++b) {
                        Solution cand;
                        cand.equation = e;
                        cand.assignment = {fin(a), fin(b)};
                        if (check_solution(alg, e, cand)) {
                            CHECK(poset.less_eq(least.assignment[0], cand.assignment[0]));
                            CHECK(poset.less_eq(least.assignment[1], cand.assignment[1]));
                        }
                    }
            }
    }

    SUBCASE("non-monotone structure maps are rejected at registration") {
        AlgebraPtr carrier3 = finite_set(make_finset({"bot", "a", "b"}));
        std::vector<std::vector<bool>> leq = {
            {true, true, true}, {false, true, true}, {false, false, true}};
        auto bad = [](const Val& v) {
            std::uint64_t i = v.kids.at(0).tag;
            return fin(i == 1 ? 2 : (i == 2 ? 0 : 0));  // swaps a and b
        };
        CHECK_THROWS_AS((void)make_poset_algebra(carrier3, leq, 0, id_shape(), bad), Error);
    }
}

TEST_CASE("passages between plain and parametrized solution operators") {
    BackendPtr phi = stream_backend();
    ElgotAlgebra base = backend_elgot(phi);
    AlgebraPtr y = free_algebra(VarietyId::Unary, var_set("y", 1));
    Hom h = hom_from_gens(y, base.carrier, {realize_rational(Rational(2, 1))});
    ElgotAlgebra with_y = passage_to_param(base, h);
    ElgotAlgebra back = passage_from_param(with_y);

    Instance pinst = with_y.inst;
    FinSetPtr xs = var_set("x", 1);
    AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);

    SUBCASE("a middle-summand step solves through h") {
        // x = y0, as an equation for the parametrized functor
        Val step = eq_inl(pinst, carrier, with_y.carrier,
                          bval_from_param(pinst, carrier, free_eta(VarietyId::Unary, 0)));
        FfgEquation e = make_equation(pinst, xs, with_y.carrier, {step});
        Solution s = with_y.solver(e);
        CHECK(phi->equal(s.assignment[0], h.fn(free_eta(VarietyId::Unary, 0))));
        CHECK(check_solution(with_y, e, s));
    }

    SUBCASE("embedding then collapsing is the identity on equations") {
        std::vector<Val> pool = {realize_rational(Rational(0, 1)),
                                 realize_rational(Rational(1, 1))};
        auto steps = enum_step_values(base.inst, carrier, base.carrier, pool,
                                      EnumBounds::counters(2));
        Rng rng(59);
        for (int round = 0; round < 100; ++round) {
            FfgEquation e = random_equation(rng, base.inst, xs, base.carrier, steps);
            FfgEquation round_trip = collapse_param(pinst, h, embed_param(pinst, e));
            CHECK(equation_eq(round_trip, e));
            // and the derived solver agrees with the base solver
            Solution s1 = base.solver(e);
            Solution s2 = back.solver(e);
            REQUIRE(s1.assignment.size() == s2.assignment.size());
            for (std::size_t i = 0; i < s1.assignment.size(); ++i)
                CHECK(phi->equal(s1.assignment[i], s2.assignment[i]));
        }
    }

    SUBCASE("collapsing then embedding preserves solutions") {
        // equations for the parametrized functor; solutions of e and of
        // embed(collapse(e)) agree even though the equations differ
        std::vector<Val> ypool = y->enumerate(EnumBounds::counters(1));
        std::vector<Val> pool = {realize_rational(Rational(1, 1))};
        auto psteps = enum_step_values(pinst, carrier, with_y.carrier, pool,
                                       EnumBounds::counters(1));
        Rng rng(61);
        for (int round = 0; round < 100; ++round) {
            FfgEquation e = random_equation(rng, pinst, xs, with_y.carrier, psteps);
            FfgEquation through = embed_param(pinst, collapse_param(pinst, h, e));
            Solution s1 = with_y.solver(e);
            Solution s2 = with_y.solver(through);
            for (std::size_t i = 0; i < s1.assignment.size(); ++i)
                CHECK(phi->equal(s1.assignment[i], s2.assignment[i]));
        }
    }

    SUBCASE("the derived algebras pass the axiom harness at small bounds") {
        HarnessBounds hb;
        hb.max_vars = 1;
        hb.max_params = 1;
        hb.max_counter = 1;
        std::vector<Val> pool = {realize_rational(Rational(1, 1))};
        HarnessReport wf = check_weak_functoriality(with_y, hb, pool);
        CHECK(wf.ok());
        HarnessReport cp = check_compositionality(with_y, hb, pool);
        CHECK(cp.ok());
    }
}

TEST_CASE("the canonical map out of the backend") {
    BackendPtr phi = stream_backend();
    ElgotAlgebra self = backend_elgot(phi);

    SUBCASE("targeting the backend itself gives the identity on keys") {
        auto h = initial_morphism(phi, self);
        for (std::int64_t a = 0; a <= 5; ++a) {
            Val cls = realize_rational(Rational(a, 2));
            CHECK(phi->equal(h(cls), cls));
        }
    }

    SUBCASE("the map preserves solutions on sampled equations") {
        // target: the backend re-packaged through a passage round trip
        AlgebraPtr y = free_algebra(VarietyId::Unary, var_set("y", 1));
        Hom hy = hom_from_gens(y, self.carrier, {realize_rational(Rational(1, 1))});
        ElgotAlgebra target = passage_from_param(passage_to_param(self, hy));
        auto h = initial_morphism(phi, target);

        FinSetPtr xs = var_set("x", 2);
        AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
        std::vector<Val> pool = {realize_rational(Rational(0, 1)),
                                 realize_rational(Rational(2, 1))};
        auto steps = enum_step_values(self.inst, carrier, self.carrier, pool,
                                      EnumBounds::counters(2));
        Rng rng(67);
        for (int round = 0; round < 100; ++round) {
            FfgEquation e = random_equation(rng, self.inst, xs, self.carrier, steps);
            Solution se = self.solver(e);
            // push the equation and the solution through h
            Hom hhom{self.carrier, target.carrier, h};
            Solution st = target.solver(aft(hhom, e));
            for (std::size_t i = 0; i < se.assignment.size(); ++i)
                CHECK(target.carrier->equal(st.assignment[i], h(se.assignment[i])));
        }
    }

    SUBCASE("representative independence") {
        auto h = initial_morphism(phi, self);
        Rng rng(71);
        for (int round = 0; round < 100; ++round) {
            Rational r(static_cast<std::int64_t>(rng.below(5)),
                       static_cast<std::int64_t>(1 + rng.below(3)));
            Val c1 = realize_rational(r);
            Val c2 = realize_rational_alt(r);
            CHECK(phi->equal(h(c1), h(c2)));
        }
    }

    SUBCASE("the map is an algebra homomorphism on sampled nodes") {
        // solution-preserving maps commute with the structure maps:
        // h(t(n)) = a(F h(n)) for nodes n over classes
        AlgebraPtr y = free_algebra(VarietyId::Unary, var_set("y", 1));
        Hom hy = hom_from_gens(y, self.carrier, {realize_rational(Rational(1, 1))});
        ElgotAlgebra target = passage_from_param(passage_to_param(self, hy));
        auto h = initial_morphism(phi, target);
        for (std::int64_t a = 0; a <= 4; ++a) {
            Val cls = realize_rational(Rational(a, 2));
            Val n = node(0, {cls});
            Val lhs = h(self.structure(n));
            Val rhs = target.structure(node(0, {h(cls)}));
            CHECK(target.carrier->equal(lhs, rhs));
        }
    }
}

TEST_CASE("the unit of the free solution space over a free object") {
    Instance base = nfa_inst();
    AlgebraPtr y = free_algebra(VarietyId::Jsl, var_set("y", 2));
    Instance withy = with_param(base, y);
    BackendPtr phiy = bisim_backend(withy);

    SUBCASE("distinct generators give distinct classes") {
        Val u0 = free_unit(phiy, free_eta(VarietyId::Jsl, 0));
        Val u1 = free_unit(phiy, free_eta(VarietyId::Jsl, 1));
        CHECK(phiy->equal(u0, u0));
        CHECK_FALSE(phiy->equal(u0, u1));
    }

    SUBCASE("the unit is a homomorphism on the free object") {
        Val u0 = free_unit(phiy, free_eta(VarietyId::Jsl, 0));
        Val u1 = free_unit(phiy, free_eta(VarietyId::Jsl, 1));
        Val ujoin = free_unit(phiy, y->join(free_eta(VarietyId::Jsl, 0),
                                            free_eta(VarietyId::Jsl, 1)));
        CHECK(phiy->equal(ujoin, phiy->algebra()->join(u0, u1)));
        Val ubot = free_unit(phiy, y->bottom());
        CHECK(phiy->equal(ubot, phiy->algebra()->bottom()));
    }

    SUBCASE("the parametrized backend is a free solution space") {
        // the solution operator for plain equations arises by embedding
        // them into the parametrized functor and solving in its backend
        ElgotAlgebra gx = backend_elgot(phiy);
        ElgotAlgebra freealg = passage_from_param(gx);
        FinSetPtr xs = var_set("x", 1);
        AlgebraPtr carrier = free_algebra(VarietyId::Jsl, xs);
        AlgebraPtr params = phiy->algebra();

        // a loop through the functor part
        FfgEquation loop = make_equation(
            freealg.inst, xs, params,
            {pair(node(1, {eta(VarietyId::Jsl, atom(0))}), params->bottom())});
        Solution s1 = freealg.solver(loop);
        CHECK(check_solution(freealg, loop, s1));

        // a step into the unit class of a generator
        Val u0 = free_unit(phiy, free_eta(VarietyId::Jsl, 0));
        FfgEquation into_unit = make_equation(
            freealg.inst, xs, params,
            {pair(lift_apply(freealg.inst.law, carrier)->bottom(), u0)});
        Solution s2 = freealg.solver(into_unit);
        CHECK(check_solution(freealg, into_unit, s2));
        CHECK(phiy->equal(s2.assignment[0], u0));

        // the parametrized backend itself closes its own squares
        FfgEquation geq = make_equation(
            gx.inst, xs, params,
            {pair(pair(node(0, {eta(VarietyId::Jsl, atom(0))}), free_eta(VarietyId::Jsl, 1)),
                  params->bottom())});
        Solution s3 = gx.solver(geq);
        CHECK(check_solution(gx, geq, s3));
    }

    SUBCASE("solving the unit against a passage-derived algebra returns h") {
        BackendPtr phib = bisim_backend(base);
        ElgotAlgebra target = backend_elgot(phib);
        std::vector<Val> pool = default_param_pool(phib);
        Hom h = hom_from_gens(y, target.carrier, {pool[1], pool[0]});
        ElgotAlgebra derived = passage_to_param(target, h);
        auto p = initial_morphism(phiy, derived);
        for (std::size_t g = 0; g < 2; ++g) {
            Val unit = free_unit(phiy, free_eta(VarietyId::Jsl, g));
            CHECK(target.carrier->equal(p(unit), h.fn(free_eta(VarietyId::Jsl, g))));
        }
    }
}

TEST_CASE("the axiom harness accepts the backends at small bounds") {
    SUBCASE("stream") {
        ElgotAlgebra alg = backend_elgot(stream_backend());
        HarnessBounds hb;
        hb.max_vars = 2;
        hb.max_params = 1;
        hb.max_counter = 1;
        std::vector<Val> pool = {realize_rational(Rational(0, 1)),
                                 realize_rational(Rational(1, 1))};
        HarnessReport wf = check_weak_functoriality(alg, hb, pool);
        std::string wf_first = wf.failures.empty() ? std::string() : wf.failures.front();
        INFO(wf_first);
        CHECK(wf.ok());
        CHECK(wf.instances > 0);
        HarnessReport cp = check_compositionality(alg, hb, pool);
        std::string cp_first = cp.failures.empty() ? std::string() : cp.failures.front();
        INFO(cp_first);
        CHECK(cp.ok());
    }
    SUBCASE("bisimilarity") {
        Instance inst = nfa_inst();
        BackendPtr phi = bisim_backend(inst);
        ElgotAlgebra alg = backend_elgot(phi);
        HarnessBounds hb;
        hb.max_vars = 1;
        hb.max_params = 1;
        std::vector<Val> pool = default_param_pool(phi);
        HarnessReport wf = check_weak_functoriality(alg, hb, pool);
        std::string wf_first = wf.failures.empty() ? std::string() : wf.failures.front();
        INFO(wf_first);
        CHECK(wf.ok());
        HarnessReport cp = check_compositionality(alg, hb, pool);
        std::string cp_first = cp.failures.empty() ? std::string() : cp.failures.front();
        INFO(cp_first);
        CHECK(cp.ok());
    }
}

TEST_CASE("a solver making arbitrary choices fails compositionality") {
    BackendPtr phi = stream_backend();
    ElgotAlgebra broken = backend_elgot(phi);
    // the degenerate loop x = (0,x) admits every class as a solution; the
    // broken solver picks mean 1 there instead of the canonical mean 0
    auto canonical = broken.solver;
    broken.name = "phi:stream(broken)";
    broken.solver = [canonical](const FfgEquation& e) {
        Solution s = canonical(e);
        if (e.vars->size() == 1 && e.step[0].is(ValKind::Sum) && e.step[0].tag == 0) {
            const Val& bval = e.step[0].kids[0];
            if (bval.kids.at(0).tag == 0 && bval.kids.at(0).kids.at(0).tag == 0)
                s.assignment[0] = realize_rational(Rational(1, 1));
        }
        return s;
    };
    HarnessBounds hb;
    hb.max_vars = 2;
    hb.max_params = 1;
    hb.max_counter = 1;
    std::vector<Val> pool = {realize_rational(Rational(0, 1))};
    HarnessReport cp = check_compositionality(broken, hb, pool);
    CHECK_FALSE(cp.ok());
    CHECK_FALSE(cp.failures.empty());
}
