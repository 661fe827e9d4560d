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

// End-to-end acceptance runs: one line per criterion, nonzero exit when
// any of them fails. Every bound and tolerance is pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "elgot/dsl.hpp"
#include "elgot/enumerate.hpp"

using namespace elgot;

namespace {

struct Criterion {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

int failures = 0;

void run(int index, const std::string& title, double budget_ms,
         const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& err) {
        c.ok = false;
        c.notes.push_back(std::string("exception: ") + err.what());
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (budget_ms > 0 && ms > budget_ms) {
        c.ok = false;
        c.notes.push_back("over time budget: " + std::to_string(ms) + " ms > " +
                          std::to_string(budget_ms) + " ms");
    }
    std::printf("[%s] %2d. %-58s %9.1f ms\n", c.ok ? "PASS" : "FAIL", index, title.c_str(), ms);
    for (const std::string& n : c.notes) std::printf("         %s\n", n.c_str());
    if (!c.ok) ++failures;
}

Instance stream_inst() { return make_instance(VarietyId::Unary, id_shape()); }

Instance nfa_inst(std::size_t alphabet) {
    std::vector<std::string> syms;
    for (std::size_t i = 0; i < alphabet; ++i) syms.push_back(std::string(1, char('a' + i)));
    return make_instance(VarietyId::Jsl, moore_shape(bool_labels(), make_finset(syms)));
}

CoalgPtr cycle(const std::vector<std::uint64_t>& inc, std::size_t back_to = 0) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < inc.size(); ++i) names.push_back("z" + std::to_string(i));
    std::vector<Val> step;
    for (std::size_t i = 0; i < inc.size(); ++i) {
        std::size_t nxt = (i + 1 < inc.size()) ? i + 1 : back_to;
        step.push_back(node(0, {tbox(VarietyId::Unary, inc[i], {atom(nxt)})}));
    }
    return make_ffg_coalgebra(stream_inst(), make_finset(std::move(names)), std::move(step));
}

Val ustate(std::uint64_t m, std::uint64_t gen) {
    return tbox(VarietyId::Unary, m, {atom(gen)});
}

// ---------------------------------------------------------------- corpus --

std::vector<FfgEquation> stream_corpus(const BackendPtr& phi, std::size_t count,
                                       std::uint64_t seed) {
    Instance inst = phi->inst();
    std::vector<Val> pool = {realize_rational(Rational(0, 1)), realize_rational(Rational(1, 1)),
                             realize_rational(Rational(3, 2))};
    Rng rng(seed);
    std::vector<FfgEquation> out;
    for (std::size_t i = 0; i < count; ++i) {
        FinSetPtr xs = var_set("x", 1 + rng.below(2));
        AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
        auto steps = enum_step_values(inst, carrier, phi->algebra(), pool,
                                      EnumBounds::counters(2));
        out.push_back(random_equation(rng, inst, xs, phi->algebra(), steps));
    }
    return out;
}

std::vector<FfgEquation> bisim_corpus(const BackendPtr& phi, std::size_t count,
                                      std::uint64_t seed) {
    Instance inst = phi->inst();
    std::vector<Val> pool = default_param_pool(phi);
    Rng rng(seed);
    std::vector<FfgEquation> out;
    for (std::size_t i = 0; i < count; ++i) {
        FinSetPtr xs = var_set("x", 1 + rng.below(2));
        AlgebraPtr carrier = free_algebra(VarietyId::Jsl, xs);
        auto steps = enum_step_values(inst, carrier, phi->algebra(), pool, {});
        out.push_back(random_equation(rng, inst, xs, phi->algebra(), steps));
    }
    return out;
}

// ------------------------------------------------------------- posets ----

struct PosetSpec {
    std::string name;
    std::vector<std::vector<bool>> leq;
};

// all pointed posets with at most four elements, up to isomorphism:
// element 0 is the least element, the rest carry an arbitrary poset
std::vector<PosetSpec> poset_pool() {
    auto closed = [](std::vector<std::vector<bool>> leq) {
        const std::size_t n = leq.size();
        for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
        for (std::size_t i = 0; i < n; ++i) leq[0][i] = true;
        return leq;
    };
    std::vector<PosetSpec> out;
    out.push_back({"point", closed({{true}})});
    out.push_back({"chain2", closed({{true, true}, {false, true}})});
    out.push_back({"chain3", closed({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})});
    out.push_back({"fork3", closed({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}})});
    out.push_back({"chain4", closed({{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}})});
    out.push_back({"diamond", closed({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}})});
    out.push_back({"flat4", closed({{1, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})});
    out.push_back({"kite", closed({{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}})});
    out.push_back({"tee", closed({{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})});
    return out;
}

// language equality of two machine states by product search, an oracle
// independent of partition refinement
bool product_lang_equal(const Machine& m, std::uint32_t s, std::uint32_t t) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> work = {{s, t}};
    std::vector<bool> seen(m.size() * m.size(), false);
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (seen[a * m.size() + b]) continue;
        seen[a * m.size() + b] = true;
        if (m.label[a] != m.label[b]) return false;
        for (std::size_t sym = 0; sym < m.next[a].size(); ++sym)
            work.emplace_back(m.next[a][sym], m.next[b][sym]);
    }
    return true;
}

CoalgPtr random_nfa(Rng& rng, const Instance& inst, std::size_t states) {
    const std::size_t alphabet = inst.shape.arity(0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
    std::vector<Val> step;
    for (std::size_t i = 0; i < states; ++i) {
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

bool nfa_accepts(const FfgCoalgebra& c, std::size_t start, const std::vector<std::size_t>& word) {
    std::vector<bool> current(c.gens->size(), false);
    current[start] = true;
    for (std::size_t sym : word) {
        std::vector<bool> next(c.gens->size(), false);
        for (std::size_t s = 0; s < current.size(); ++s) {
            if (!current[s]) continue;
            for (const Val& t : c.step[s].kids.at(sym).kids)
                next[static_cast<std::size_t>(t.tag)] = true;
        }
        current.swap(next);
    }
    for (std::size_t s = 0; s < current.size(); ++s)
        if (current[s] && c.step[s].tag == 1) return true;
    return false;
}

}  // namespace

int main() {
    // 1 ------------------------------------------------------------------
    run(1, "worked-example streams are equivalent, 12 = 12, < 1 ms", 0, [](Criterion& c) {
        EpStream s = parse_epstream("(1,2,7,4)(1,3,2)^w");
        EpStream t = parse_epstream("(5,6)(0,4)^w");
        std::int64_t sum_s = std::accumulate(s.period.begin(), s.period.end(), std::int64_t{0});
        std::int64_t sum_t = std::accumulate(t.period.begin(), t.period.end(), std::int64_t{0});
        std::int64_t lhs = static_cast<std::int64_t>(t.period.size()) * sum_s;
        std::int64_t rhs = static_cast<std::int64_t>(s.period.size()) * sum_t;
        c.expect(lhs == 12 && rhs == 12, "cross sums must be exactly 12 = 12");
        c.expect(ep_equiv(s, t), "the two streams must be equivalent");

        (void)ep_equiv(s, t);  // warm
        auto start = std::chrono::steady_clock::now();
        bool eq = ep_equiv(s, t);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        c.expect(eq, "equivalence flipped");
        c.expect(ms < 1.0, "equivalence query took " + std::to_string(ms) + " ms");
    });

    // 2 ------------------------------------------------------------------
    run(2, "distributive-law diagrams, exhaustive within bounds, < 5 s", 5000,
        [](Criterion& c) {
            LawBounds lb;
            lb.max_gens = 2;      // JSL generators
            lb.max_counter = 4;   // UNARY counters
            lb.max_subset = 2;    // set layers per level
            HarnessReport rep = builtin_laws_report(lb);
            c.expect(rep.failures.empty(),
                     rep.failures.empty() ? "" : rep.failures.front());
            c.expect(rep.instances > 1000, "suspiciously few law instances");
            c.notes.push_back(std::to_string(rep.instances) + " diagram instances");
        });

    // 3 ------------------------------------------------------------------
    run(3, "combinator laws, 500 seeded instances per variety, < 10 s", 10000,
        [](Criterion& c) {
            HarnessReport rep = combinator_laws_report(500, 42, 2);
            c.expect(rep.failures.empty(),
                     rep.failures.empty() ? "" : rep.failures.front());
            c.expect(rep.instances >= 1500, "fewer than 500 instances per variety");
        });

    // 4 ------------------------------------------------------------------
    run(4, "solution square closed by every solver, corpus of 300", 0, [](Criterion& c) {
        std::size_t checked = 0;

        BackendPtr sphi = stream_backend();
        ElgotAlgebra salg = backend_elgot(sphi);
        for (const FfgEquation& e : stream_corpus(sphi, 100, 1001)) {
            c.expect(check_solution(salg, e, salg.solver(e)), "stream solver square");
            ++checked;
        }

        BackendPtr bphi = bisim_backend(nfa_inst(1));
        ElgotAlgebra balg = backend_elgot(bphi);
        for (const FfgEquation& e : bisim_corpus(bphi, 60, 1002)) {
            c.expect(check_solution(balg, e, balg.solver(e)), "bisim solver square");
            ++checked;
        }

        // pointed posets with the saturating chain structure
        {
            std::vector<std::string> names = {"c0", "c1", "c2"};
            AlgebraPtr carrier = finite_set(make_finset(names));
            std::vector<std::vector<bool>> leq = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
            auto structure = [](const Val& v) {
                return fin(std::min<std::uint64_t>(v.kids.at(0).tag + 1, 2));
            };
            PointedPosetAlgebra poset =
                make_poset_algebra(carrier, leq, 0, id_shape(), structure);
            ElgotAlgebra palg = poset_elgot(poset);
            Instance inst = palg.inst;
            FinSetPtr xs = var_set("x", 2);
            AlgebraPtr xcar = free_algebra(VarietyId::Set, xs);
            std::vector<Val> choices;
            for (std::size_t g = 0; g < 2; ++g)
                choices.push_back(
                    eq_inl(inst, xcar, carrier, node(0, {free_eta(VarietyId::Set, g)})));
            for (std::size_t a = 0; a < 3; ++a)
                choices.push_back(eq_inr(inst, xcar, carrier, fin(a)));
            Rng rng(1003);
            for (int i = 0; i < 40; ++i) {
                FfgEquation e = random_equation(rng, inst, xs, carrier, choices);
                c.expect(check_solution(palg, e, kleene_solve(poset, e)),
                         "least-solution square");
                ++checked;
            }
        }

        // both passage-derived solvers over the stream backend
        {
            AlgebraPtr y = free_algebra(VarietyId::Unary, var_set("y", 1));
            Hom h = hom_from_gens(y, salg.carrier, {realize_rational(Rational(2, 1))});
            ElgotAlgebra withy = passage_to_param(salg, h);
            ElgotAlgebra back = passage_from_param(withy);

            FinSetPtr xs = var_set("x", 2);
            AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
            std::vector<Val> pool = {realize_rational(Rational(0, 1)),
                                     realize_rational(Rational(1, 1))};
            auto gsteps = enum_step_values(withy.inst, carrier, withy.carrier, pool,
                                           EnumBounds::counters(1));
            auto psteps = enum_step_values(back.inst, carrier, back.carrier, pool,
                                           EnumBounds::counters(1));
            Rng rng(1004);
            for (int i = 0; i < 50; ++i) {
                FfgEquation eg = random_equation(rng, withy.inst, xs, withy.carrier, gsteps);
                c.expect(check_solution(withy, eg, withy.solver(eg)),
                         "parametrized passage square");
                FfgEquation ep = random_equation(rng, back.inst, xs, back.carrier, psteps);
                c.expect(check_solution(back, ep, back.solver(ep)), "plain passage square");
                checked += 2;
            }
        }
        c.expect(checked >= 200, "corpus smaller than 200");
        c.notes.push_back(std::to_string(checked) + " solutions checked");
    });

    // 5 ------------------------------------------------------------------
    run(5, "solution-operator axioms for both backends, < 60 s", 60000, [](Criterion& c) {
        std::size_t instances = 0;
        {
            ElgotAlgebra alg = backend_elgot(stream_backend());
            HarnessBounds hb;
            hb.max_vars = 2;
            hb.max_params = 1;
            hb.max_counter = 2;  // increments up to 2
            std::vector<Val> pool = {realize_rational(Rational(0, 1)),
                                     realize_rational(Rational(1, 1))};
            HarnessReport wf = check_weak_functoriality(alg, hb, pool);
            HarnessReport cp = check_compositionality(alg, hb, pool);
            c.expect(wf.ok(), "stream weak functoriality: " +
                                  (wf.failures.empty() ? "" : wf.failures.front()));
            c.expect(cp.ok(), "stream compositionality: " +
                                  (cp.failures.empty() ? "" : cp.failures.front()));
            instances += wf.instances + cp.instances;
        }
        {
            // one-symbol alphabet at |X|,|Y| <= 2, two symbols at 1
            for (std::size_t alphabet : {std::size_t{1}, std::size_t{2}}) {
                BackendPtr phi = bisim_backend(nfa_inst(alphabet));
                ElgotAlgebra alg = backend_elgot(phi);
                HarnessBounds hb;
                hb.max_vars = alphabet == 1 ? 2 : 1;
                hb.max_params = 1;
                std::vector<Val> pool = default_param_pool(phi);
                HarnessReport wf = check_weak_functoriality(alg, hb, pool);
                HarnessReport cp = check_compositionality(alg, hb, pool);
                c.expect(wf.ok(), "bisim weak functoriality");
                c.expect(cp.ok(), "bisim compositionality");
                instances += wf.instances + cp.instances;
            }
        }
        {
            // negative control: a solver making an arbitrary valid choice
            BackendPtr phi = stream_backend();
            ElgotAlgebra broken = backend_elgot(phi);
            auto canonical = broken.solver;
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
            c.expect(!cp.ok(), "the broken solver must fail compositionality");
            if (!cp.ok())
                c.notes.push_back("broken-solver counterexample: " + cp.failures.front());
        }
        c.notes.push_back(std::to_string(instances) + " axiom instances");
    });

    // 6 ------------------------------------------------------------------
    run(6, "passage round trips on the corpus", 0, [](Criterion& c) {
        BackendPtr phi = stream_backend();
        ElgotAlgebra base = backend_elgot(phi);
        AlgebraPtr y = free_algebra(VarietyId::Unary, var_set("y", 1));
        Hom h = hom_from_gens(y, base.carrier, {realize_rational(Rational(2, 1))});
        ElgotAlgebra withy = passage_to_param(base, h);
        ElgotAlgebra back = passage_from_param(withy);
        Instance pinst = withy.inst;

        // plain equations: embed-then-collapse is the syntactic identity
        for (const FfgEquation& e : stream_corpus(phi, 100, 1006)) {
            c.expect(equation_eq(collapse_param(pinst, h, embed_param(pinst, e)), e),
                     "embed/collapse must be the identity");
            Solution s1 = base.solver(e);
            Solution s2 = back.solver(e);
            for (std::size_t i = 0; i < s1.assignment.size(); ++i)
                c.expect(phi->equal(s1.assignment[i], s2.assignment[i]),
                         "round-trip solver changed a solution");
        }

        // parametrized equations: collapse-then-embed preserves solutions
        FinSetPtr xs = var_set("x", 2);
        AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
        std::vector<Val> pool = {realize_rational(Rational(1, 1))};
        auto steps =
            enum_step_values(pinst, carrier, withy.carrier, pool, EnumBounds::counters(1));
        Rng rng(1007);
        for (int i = 0; i < 100; ++i) {
            FfgEquation e = random_equation(rng, pinst, xs, withy.carrier, steps);
            FfgEquation through = embed_param(pinst, collapse_param(pinst, h, e));
            Solution s1 = withy.solver(e);
            Solution s2 = withy.solver(through);
            for (std::size_t k = 0; k < s1.assignment.size(); ++k)
                c.expect(phi->equal(s1.assignment[k], s2.assignment[k]),
                         "solutions differ across the composite");
        }
    });

    // 7 ------------------------------------------------------------------
    run(7, "the canonical map out of the backend is initial", 0, [](Criterion& c) {
        BackendPtr phi = stream_backend();
        ElgotAlgebra self = backend_elgot(phi);

        AlgebraPtr y = free_algebra(VarietyId::Unary, var_set("y", 1));
        Hom hy = hom_from_gens(y, self.carrier, {realize_rational(Rational(1, 1))});
        ElgotAlgebra roundtrip = passage_from_param(passage_to_param(self, hy));

        ElgotAlgebra point;
        point.name = "one-point";
        point.inst = self.inst;
        point.carrier = finite_unary(make_finset({"pt"}), {0});
        point.structure = [](const Val&) { return fin(0); };
        point.solver = [point_carrier = point.carrier](const FfgEquation& e) {
            Solution s;
            s.equation = e;
            s.assignment.assign(e.vars->size(), fin(0));
            return s;
        };

        std::vector<ElgotAlgebra> targets = {self, roundtrip, point};
        for (const ElgotAlgebra& target : targets) {
            auto h = initial_morphism(phi, target);
            // solution preservation on 100 sampled equations
            Rng rng(1010);
            FinSetPtr xs = var_set("x", 2);
            AlgebraPtr carrier = free_algebra(VarietyId::Unary, xs);
            std::vector<Val> pool = {realize_rational(Rational(0, 1)),
                                     realize_rational(Rational(2, 1))};
            auto steps = enum_step_values(self.inst, carrier, self.carrier, pool,
                                          EnumBounds::counters(2));
            for (int i = 0; i < 100; ++i) {
                FfgEquation e = random_equation(rng, self.inst, xs, self.carrier, steps);
                Solution se = self.solver(e);
                Hom hhom{self.carrier, target.carrier, h};
                Solution st = target.solver(aft(hhom, e));
                for (std::size_t k = 0; k < se.assignment.size(); ++k)
                    c.expect(target.carrier->equal(st.assignment[k], h(se.assignment[k])),
                             target.name + ": not solution-preserving");
            }
            // representative independence on 100 random pairs
            Rng rng2(1011);
            for (int i = 0; i < 100; ++i) {
                Rational r(static_cast<std::int64_t>(rng2.below(6)),
                           static_cast<std::int64_t>(1 + rng2.below(4)));
                c.expect(target.carrier->equal(h(realize_rational(r)),
                                               h(realize_rational_alt(r))),
                         target.name + ": depends on the representative");
            }
        }
        // identity on the backend itself
        auto h = initial_morphism(phi, self);
        for (std::int64_t a = 0; a <= 6; ++a) {
            Val cls = realize_rational(Rational(a, 3));
            c.expect(phi->equal(h(cls), cls), "not the identity on the backend");
        }
    });

    // 8 ------------------------------------------------------------------
    run(8, "zig-zags match mean equivalence; all small keys realized, < 30 s", 30000,
        [](Criterion& c) {
            // exhaustive cycles with up to 3 generators, increments up to 3
            std::vector<CoalgPtr> pool;
            std::vector<Val> states;
            for (std::size_t len = 1; len <= 3; ++len) {
                std::vector<std::uint64_t> inc(len, 0);
                for (;;) {
                    pool.push_back(cycle(inc));
                    states.push_back(ustate(0, 0));
                    std::size_t pos = 0;
                    while (pos < len && ++inc[pos] == 4) {
                        inc[pos] = 0;
                        ++pos;
                    }
                    if (pos == len) break;
                }
            }
            std::size_t pairs = 0;
            for (std::size_t i = 0; i < pool.size(); ++i)
                for (std::size_t j = 0; j < pool.size(); ++j) {
                    bool eq = ep_equiv(stream_of(*pool[i], states[i]),
                                       stream_of(*pool[j], states[j]));
                    auto w = zigzag_witness(pool[i], states[i], pool[j], states[j]);
                    c.expect(eq == w.has_value(), "witness/equivalence mismatch");
                    if (w) {
                        c.expect(is_coalg_hom(w->to_left).ok && is_coalg_hom(w->to_right).ok,
                                 "witness leg fails the square");
                    }
                    ++pairs;
                }
            c.notes.push_back(std::to_string(pairs) + " state pairs (" +
                              std::to_string(pool.size()) + " cycle coalgebras)");

            for (std::int64_t a = 0; a <= 6; ++a)
                for (std::int64_t b = 1; b <= 4; ++b) {
                    if (std::gcd(a, b) != 1) continue;
                    Val cls = realize_rational(Rational(a, b));
                    c.expect(cls.key == Rational(a, b), "key mismatch");
                    c.expect(cls.rep->gens->size() <= static_cast<std::size_t>(b),
                             "realization uses too many generators");
                }
        });

    // 9 ------------------------------------------------------------------
    run(9, "determinization: language agreement on 50 random machines", 0, [](Criterion& c) {
        Rng rng(909);
        for (int round = 0; round < 50; ++round) {
            std::size_t alphabet = 1 + rng.below(2);
            Instance inst = nfa_inst(alphabet);
            std::size_t states = 1 + rng.below(4);
            CoalgPtr nfa = random_nfa(rng, inst, states);
            Machine m = materialize(*nfa, {.reachable_only = false, .roots = {},
                                           .max_states = 1u << 12});

            // all words up to length 6
            std::vector<std::vector<std::size_t>> words = {{}};
            for (std::size_t len = 0; len < 6; ++len) {
                std::size_t start = 0, stop = words.size();
                for (std::size_t w = start; w < stop; ++w)
                    if (words[w].size() == len)
                        for (std::size_t a = 0; a < alphabet; ++a) {
                            auto next = words[w];
                            next.push_back(a);
                            words.push_back(std::move(next));
                        }
            }
            for (std::size_t s = 0; s < states; ++s) {
                std::uint32_t det = m.state_of(eta(VarietyId::Jsl, atom(s)));
                for (const auto& word : words) {
                    std::uint32_t at = det;
                    for (std::size_t sym : word) at = m.next[at][sym];
                    c.expect((m.label[at] == 1) == nfa_accepts(*nfa, s, word),
                             "language mismatch after determinization");
                }
            }

            // behavioral equivalence agrees with exact language equality
            auto blocks = partition_refine(m);
            for (int probe = 0; probe < 10; ++probe) {
                std::uint32_t s = static_cast<std::uint32_t>(rng.below(m.size()));
                std::uint32_t t = static_cast<std::uint32_t>(rng.below(m.size()));
                bool refined = blocks[s] == blocks[t];
                c.expect(refined == product_lang_equal(m, s, t),
                         "refinement disagrees with the language oracle");
                c.expect(refined == behavioral_equiv(nfa, m.states[s], nfa, m.states[t]),
                         "behavioral equivalence disagrees with refinement");
            }
        }
    });

    // 10 -----------------------------------------------------------------
    run(10, "least solutions are minimal on every poset instance", 0, [](Criterion& c) {
        std::size_t instances = 0;
        for (const PosetSpec& spec : poset_pool()) {
            const std::size_t n = spec.leq.size();
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
            AlgebraPtr carrier = finite_set(make_finset(names));

            // all monotone unary structure maps
            std::vector<std::size_t> table(n, 0);
            for (;;) {
                bool monotone = true;
                for (std::size_t i = 0; i < n && monotone; ++i)
                    for (std::size_t j = 0; j < n && monotone; ++j)
                        if (spec.leq[i][j] && !spec.leq[table[i]][table[j]]) monotone = false;
                if (monotone) {
                    auto structure = [table](const Val& v) {
                        return fin(table[static_cast<std::size_t>(v.kids.at(0).tag)]);
                    };
                    PointedPosetAlgebra poset =
                        make_poset_algebra(carrier, spec.leq, 0, id_shape(), structure);
                    ElgotAlgebra alg = poset_elgot(poset);
                    Instance inst = alg.inst;
                    FinSetPtr xs = var_set("x", 2);
                    AlgebraPtr xcar = free_algebra(VarietyId::Set, xs);
                    std::vector<Val> choices;
                    for (std::size_t g = 0; g < 2; ++g)
                        choices.push_back(eq_inl(inst, xcar, carrier,
                                                 node(0, {free_eta(VarietyId::Set, g)})));
                    for (std::size_t a = 0; a < n; ++a)
                        choices.push_back(eq_inr(inst, xcar, carrier, fin(a)));
                    for (const Val& s0 : choices)
                        for (const Val& s1 : choices) {
                            FfgEquation e = make_equation(inst, xs, carrier, {s0, s1});
                            Solution least = kleene_solve(poset, e);
                            ++instances;
                            c.expect(check_solution(alg, e, least), "not a solution");
                            for (std::size_t a = 0; a < n; ++a)
                                for (std::size_t b = 0; b < n; ++b) {
                                    Solution cand;
                                    cand.equation = e;
                                    cand.assignment = {fin(a), fin(b)};
                                    if (!check_solution(alg, e, cand)) continue;
                                    c.expect(
                                        poset.less_eq(least.assignment[0], cand.assignment[0]) &&
                                            poset.less_eq(least.assignment[1],
                                                          cand.assignment[1]),
                                        spec.name + ": least solution not below " +
                                            std::to_string(a) + "," + std::to_string(b));
                                }
                        }
                }
                std::size_t pos = 0;
                while (pos < n && ++table[pos] == n) {
                    table[pos] = 0;
                    ++pos;
                }
                if (pos == n) break;
            }
        }
        c.notes.push_back(std::to_string(instances) + " (poset, structure, system) instances");
    });

    // 11 -----------------------------------------------------------------
    run(11, "split quotients and spans on 50 samples", 0, [](Criterion& c) {
        Instance inst = nfa_inst(1);
        Rng rng(1111);

        // the split carrier: nonempty sets over {p,q} collapse to one point
        AlgebraPtr x = finite_jsl(make_finset({"bot", "a"}), {{0, 1}, {1, 1}}, 0);
        AlgebraPtr w = free_algebra(VarietyId::Jsl, make_finset({"p", "q"}));
        Hom e{w, x, [](const Val& t) { return fin(t.kids.empty() ? 0 : 1); }};
        std::vector<Hom> sections;
        sections.push_back(Hom{x, w, [](const Val& v) {
                                   return v.tag == 0 ? tbox(VarietyId::Jsl, 0, {})
                                                     : tbox(VarietyId::Jsl, 0, {atom(0)});
                               }});
        sections.push_back(Hom{x, w, [](const Val& v) {
                                   return v.tag == 0 ? tbox(VarietyId::Jsl, 0, {})
                                                     : tbox(VarietyId::Jsl, 0, {atom(1)});
                               }});
        sections.push_back(Hom{x, w, [](const Val& v) {
                                   return v.tag == 0 ? tbox(VarietyId::Jsl, 0, {})
                                                     : tbox(VarietyId::Jsl, 0, {atom(0), atom(1)});
                               }});

        for (int round = 0; round < 50; ++round) {
            // homomorphic step on the split carrier: the join-irreducible a
            // gets a random row, bot gets the bottom row
            std::uint64_t lab = rng.below(2);
            Val arow = node(lab, {rng.coin() ? fin(1) : fin(0)});
            PlainCoalgebra plain;
            plain.inst = inst;
            plain.carrier = x;
            plain.step = [arow](const Val& v) {
                if (v.tag == 0) return node(0, {fin(0)});
                return arow;
            };
            const Hom& m = sections[rng.below(sections.size())];

            SplitQuotient sq = split_quotient_to_ffg(plain, e, m);
            c.expect(is_plain_to_ffg_hom(plain, *sq.ffg, m.fn).ok,
                     "section is not a homomorphism");
            c.expect(is_ffg_to_plain_hom(*sq.ffg, plain, e.fn).ok,
                     "retraction is not a homomorphism");

            // span completion through the transported coalgebra
            auto f = [&sq, &m](const Val& v) { return m.fn(v); };
            SpanZigzag zz = zigzag_from_span(plain, e, m, sq.ffg, f, sq.ffg, f);
            c.expect(is_coalg_hom(zz.leg_left).ok, "left leg fails");
            c.expect(is_coalg_hom(zz.leg_right).ok, "right leg fails");
        }
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
