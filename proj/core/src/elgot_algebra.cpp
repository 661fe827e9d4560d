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

#include "elgot/elgot_algebra.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "elgot/enumerate.hpp"

namespace elgot {

namespace {

struct StepParts {
    std::optional<Val> bval;
    std::optional<Val> param;
};

StepParts split_step(const Instance& inst, const Val& step) {
    StepParts out;
    if (inst.variety == VarietyId::Jsl) {
        out.bval = step.kids.at(0);
        out.param = step.kids.at(1);
        return out;
    }
    if (step.tag == 0)
        out.bval = step.kids.at(0);
    else
        out.param = step.kids.at(0);
    return out;
}

}  // namespace

HomCheck check_structure_hom(const ElgotAlgebra& alg, const std::vector<Val>& carrier_pool) {
    HomCheck res;
    auto fail = [&](const std::string& d) {
        res.ok = false;
        res.detail = d;
        return res;
    };
    AlgebraPtr bvals_alg = bnode_algebra(alg.inst, alg.carrier);
    std::vector<Val> bvals;
    if (alg.inst.variety == VarietyId::Jsl && !alg.inst.has_param()) {
        for (const Val& n : enum_nodes(alg.inst.shape, carrier_pool)) bvals.push_back(n);
    } else if (alg.inst.variety == VarietyId::Jsl) {
        std::vector<Val> ys;
        // parameter elements sampled from the free parameter object
        EnumBounds yb;
        yb.subset_max = 1;
        ys = alg.inst.param->enumerate(yb);
        for (const Val& n : enum_nodes(alg.inst.shape, carrier_pool))
            for (const Val& y : ys) bvals.push_back(pair(n, y));
    } else {
        for (const Val& n : enum_nodes(alg.inst.shape, carrier_pool))
            bvals.push_back(bval_from_node(alg.inst, alg.carrier, n));
    }
    switch (alg.inst.variety) {
        case VarietyId::Set:
            break;
        case VarietyId::Unary:
            for (const Val& b : bvals) {
                Val lhs = alg.structure(bvals_alg->unary(b));
                Val rhs = alg.carrier->unary(alg.structure(b));
                if (!alg.carrier->equal(lhs, rhs))
                    return fail("structure does not commute with the unary operation");
            }
            break;
        case VarietyId::Jsl: {
            Val lhs0 = alg.structure(bvals_alg->bottom());
            if (!alg.carrier->equal(lhs0, alg.carrier->bottom()))
                return fail("structure does not preserve bottom");
            for (const Val& a : bvals)
                for (const Val& b : bvals) {
                    Val lhs = alg.structure(bvals_alg->join(a, b));
                    Val rhs = alg.carrier->join(alg.structure(a), alg.structure(b));
                    if (!alg.carrier->equal(lhs, rhs))
                        return fail("structure does not preserve join");
                }
            break;
        }
    }
    return res;
}

bool check_solution(const ElgotAlgebra& alg, const FfgEquation& e, const Solution& s) {
    if (s.assignment.size() != e.vars->size()) return false;
    for (std::size_t i = 0; i < e.vars->size(); ++i) {
        StepParts parts = split_step(e.inst, e.step[i]);
        std::optional<Val> from_behavior;
        if (parts.bval) {
            Val mapped = bval_map(e.inst, *parts.bval, [&](const Val& t) { return s.at(t); });
            from_behavior = alg.structure(mapped);
        }
        Val rhs = [&] {
            if (e.inst.variety == VarietyId::Jsl)
                return alg.carrier->join(*from_behavior, *parts.param);
            return from_behavior ? *from_behavior : *parts.param;
        }();
        if (!alg.carrier->equal(s.assignment[i], rhs)) return false;
    }
    return true;
}

ElgotAlgebra backend_elgot(const BackendPtr& backend) {
    ElgotAlgebra alg;
    alg.name = "phi:" + backend->name();
    alg.inst = backend->inst();
    alg.carrier = backend->algebra();

    if (alg.inst.variety == VarietyId::Unary && alg.inst.shape.is_id() && !alg.inst.has_param()) {
        // the colimit coalgebra structure is the identity, so inverting it
        // just unwraps the node
        alg.structure = [](const Val& bval) { return bval.kids.at(0); };
    } else {
        // invert the colimit structure: a fresh state stepping into the
        // given behavior value, with class children replaced by injected
        // representatives
        Instance inst = alg.inst;
        BackendPtr be = backend;
        alg.structure = [inst, be](const Val& bval) {
            const Val& fnode = inst.has_param() ? bval.kids.at(0) : bval;
            if (!fnode.is(ValKind::Node))
                throw Error(ErrorKind::InvalidArgument, "structure expects a behavior value");
            std::vector<CoalgPtr> reps;
            for (const Val& child : fnode.kids) {
                if (!child.rep)
                    throw Error(ErrorKind::InvalidArgument, "class without representative");
                bool known = false;
                for (const CoalgPtr& r : reps) known |= (r.get() == child.rep.get());
                if (!known) reps.push_back(child.rep);
            }
            CoalgPtr combined = make_ffg_coalgebra(
                inst, make_finset(std::vector<std::string>{}), {}, "t");
            std::vector<std::uint64_t> offset(reps.size(), 0);
            for (std::size_t i = 0; i < reps.size(); ++i) {
                CoalgCoproduct cp = coproduct_coalg(combined, reps[i]);
                offset[i] = cp.left_size;
                combined = cp.coalg;
            }
            auto inject = [&](const Val& child) {
                std::size_t idx = 0;
                for (; idx < reps.size(); ++idx)
                    if (reps[idx].get() == child.rep.get()) break;
                const std::uint64_t off = offset[idx];
                return reindex_atoms(class_rep_elem(child),
                                     [off](std::uint64_t i) { return i + off; });
            };
            Val fresh_node = fnode;
            for (Val& k : fresh_node.kids) k = inject(k);
            Val fresh_step = inst.has_param()
                                 ? pair(fresh_node, bval.kids.at(1))
                                 : fresh_node;

            FinSetPtr gens = finset_union(combined->gens, make_finset({"s"}));
            std::vector<Val> step = combined->step;
            step.push_back(std::move(fresh_step));
            CoalgPtr ext = make_ffg_coalgebra(inst, gens, std::move(step), "t");
            return be->class_of(ext, free_eta(inst.variety, gens->size() - 1));
        };
    }

    BackendPtr be = backend;
    alg.solver = [be](const FfgEquation& e) { return solve_in_phi(be, e); };
    return alg;
}

bool PointedPosetAlgebra::less_eq(const Val& a, const Val& b) const {
    return leq.at(static_cast<std::size_t>(a.tag)).at(static_cast<std::size_t>(b.tag));
}

PointedPosetAlgebra make_poset_algebra(AlgebraPtr carrier, std::vector<std::vector<bool>> leq,
                                       std::uint32_t bottom, Shape shape,
                                       std::function<Val(const Val&)> structure) {
    if (carrier->variety() != VarietyId::Set)
        throw Error(ErrorKind::VarietyMismatch, "posets live over the SET variety");
    PointedPosetAlgebra p;
    p.carrier = std::move(carrier);
    p.leq = std::move(leq);
    p.bottom = bottom;
    p.shape = std::move(shape);
    p.structure = std::move(structure);

    const auto elems = p.carrier->enumerate({});
    const std::size_t n = elems.size();
    if (p.leq.size() != n)
        throw Error(ErrorKind::InvalidArgument, "order relation has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.leq[i][i]) throw Error(ErrorKind::InvalidArgument, "order not reflexive");
        if (!p.leq[bottom][i])
            throw Error(ErrorKind::InvalidArgument, "bottom is not the least element");
        for (std::size_t j = 0; j < n; ++j) {
            if (p.leq[i][j] && p.leq[j][i] && i != j)
                throw Error(ErrorKind::InvalidArgument, "order not antisymmetric");
            for (std::size_t k = 0; k < n; ++k)
                if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k])
                    throw Error(ErrorKind::InvalidArgument, "order not transitive");
        }
    }
    // monotonicity of the structure map, childwise
    const auto nodes = enum_nodes(p.shape, elems);
    for (const Val& a : nodes)
        for (const Val& b : nodes) {
            if (a.tag != b.tag) continue;
            bool dominated = true;
            for (std::size_t i = 0; i < a.kids.size() && dominated; ++i)
                dominated = p.less_eq(a.kids[i], b.kids[i]);
            if (dominated && !p.less_eq(p.structure(a), p.structure(b)))
                throw Error(ErrorKind::InvalidArgument, "structure map is not monotone");
        }
    return p;
}

Solution kleene_solve(const PointedPosetAlgebra& poset, const FfgEquation& e) {
    if (e.inst.variety != VarietyId::Set)
        throw Error(ErrorKind::VarietyMismatch, "least solutions are computed over SET");
    const std::size_t nvars = e.vars->size();
    const std::size_t height = poset.carrier->enumerate({}).size();

    std::vector<Val> h(nvars, fin(poset.bottom));
    const std::size_t rounds = height * std::max<std::size_t>(nvars, 1) + 1;
    for (std::size_t round = 0; round < rounds; ++round) {
        std::vector<Val> next;
        next.reserve(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            StepParts parts = split_step(e.inst, e.step[i]);
            if (parts.param) {
                next.push_back(*parts.param);
            } else {
                Val mapped = bval_map(e.inst, *parts.bval, [&](const Val& t) {
                    return extend_apply(*poset.carrier, h, t);
                });
                next.push_back(poset.structure(mapped));
            }
            if (!poset.less_eq(h[i], next[i]))
                throw Error(ErrorKind::InvalidArgument,
                            "non-monotone structure map detected during iteration");
        }
        bool stable = true;
        for (std::size_t i = 0; i < nvars; ++i) stable &= val_eq(h[i], next[i]);
        h.swap(next);
        if (stable) {
            Solution s;
            s.equation = e;
            s.assignment = std::move(h);
            return s;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "iteration failed to stabilize");
}

ElgotAlgebra poset_elgot(const PointedPosetAlgebra& poset) {
    ElgotAlgebra alg;
    alg.name = "poset";
    alg.inst = make_instance(VarietyId::Set, poset.shape);
    alg.carrier = poset.carrier;
    alg.structure = poset.structure;
    PointedPosetAlgebra p = poset;
    alg.solver = [p](const FfgEquation& e) { return kleene_solve(p, e); };
    return alg;
}

FfgEquation collapse_param(const Instance& parametrized, const Hom& h, const FfgEquation& e) {
    if (!parametrized.has_param())
        throw Error(ErrorKind::InvalidArgument, "instance carries no parameter object");
    Instance base = parametrized;
    base.param = nullptr;

    std::vector<Val> step;
    step.reserve(e.step.size());
    for (const Val& s : e.step) {
        StepParts parts = split_step(e.inst, s);
        if (e.inst.variety == VarietyId::Jsl) {
            const Val& inner = *parts.bval;           // (node, y)
            Val collapsed = h.dst->join(h.fn(inner.kids.at(1)), *parts.param);
            step.push_back(pair(inner.kids.at(0), std::move(collapsed)));
        } else if (parts.param) {
            step.push_back(sum(true, *parts.param));
        } else {
            const Val& inner = *parts.bval;           // inl node | inr y
            if (inner.tag == 0)
                step.push_back(sum(false, inner.kids.at(0)));
            else
                step.push_back(sum(true, h.fn(inner.kids.at(0))));
        }
    }
    FfgEquation out;
    out.inst = std::move(base);
    out.vars = e.vars;
    out.params = h.dst;
    out.step = std::move(step);
    return out;
}

FfgEquation embed_param(const Instance& parametrized, const FfgEquation& e) {
    if (!parametrized.has_param())
        throw Error(ErrorKind::InvalidArgument, "instance carries no parameter object");
    AlgebraPtr carrier = e.carrier();
    std::vector<Val> step;
    step.reserve(e.step.size());
    for (const Val& s : e.step) {
        StepParts parts = split_step(e.inst, s);
        if (e.inst.variety == VarietyId::Jsl) {
            step.push_back(
                pair(bval_from_node(parametrized, carrier, *parts.bval), *parts.param));
        } else if (parts.bval) {
            step.push_back(sum(false, bval_from_node(parametrized, carrier, *parts.bval)));
        } else {
            step.push_back(s);
        }
    }
    FfgEquation out;
    out.inst = parametrized;
    out.vars = e.vars;
    out.params = e.params;
    out.step = std::move(step);
    return out;
}

ElgotAlgebra passage_to_param(const ElgotAlgebra& alg, const Hom& h) {
    if (!h.src->free_gens())
        throw Error(ErrorKind::InvalidArgument, "the parameter object must be free");
    if (!same_algebra(h.dst, alg.carrier))
        throw Error(ErrorKind::InvalidArgument, "the morphism must land in the carrier");
    Instance inst = with_param(alg.inst, h.src);

    ElgotAlgebra out;
    out.name = alg.name + "+Y";
    out.inst = inst;
    out.carrier = alg.carrier;
    auto base_structure = alg.structure;
    auto carrier = alg.carrier;
    Hom hh = h;
    if (inst.variety == VarietyId::Jsl) {
        out.structure = [base_structure, carrier, hh](const Val& bval) {
            return carrier->join(base_structure(bval.kids.at(0)), hh.fn(bval.kids.at(1)));
        };
    } else {
        out.structure = [base_structure, hh](const Val& bval) {
            if (bval.tag == 0) return base_structure(bval.kids.at(0));
            return hh.fn(bval.kids.at(0));
        };
    }
    auto base_solver = alg.solver;
    out.solver = [base_solver, inst, hh](const FfgEquation& e) {
        Solution s = base_solver(collapse_param(inst, hh, e));
        s.equation = e;
        return s;
    };
    return out;
}

ElgotAlgebra passage_from_param(const ElgotAlgebra& alg) {
    if (!alg.inst.has_param())
        throw Error(ErrorKind::InvalidArgument, "algebra is not parametrized");
    Instance parametrized = alg.inst;
    Instance base = alg.inst;
    base.param = nullptr;

    ElgotAlgebra out;
    out.name = alg.name + "-Y";
    out.inst = base;
    out.carrier = alg.carrier;
    auto structure = alg.structure;
    auto carrier = alg.carrier;
    out.structure = [structure, parametrized, carrier](const Val& fnode) {
        return structure(bval_from_node(parametrized, carrier, fnode));
    };
    auto solver = alg.solver;
    out.solver = [solver, parametrized](const FfgEquation& e) {
        Solution s = solver(embed_param(parametrized, e));
        s.equation = e;
        return s;
    };
    return out;
}

std::function<Val(const Val&)> initial_morphism(const BackendPtr& backend,
                                                const ElgotAlgebra& target) {
    if (!compatible_instances(backend->inst(), target.inst))
        throw Error(ErrorKind::UnsupportedInstance,
                    "target algebra is for a different instance");
    ElgotAlgebra t = target;
    return [t](const Val& cls) {
        if (!cls.rep)
            throw Error(ErrorKind::InvalidArgument, "class carries no representative");
        FfgEquation eq = coalg_as_equation(cls.rep, t.carrier);
        Solution s = t.solver(eq);
        return s.at(class_rep_elem(cls));
    };
}

Val free_unit(const BackendPtr& backend, const Val& y) {
    const Instance& inst = backend->inst();
    if (!inst.has_param())
        throw Error(ErrorKind::UnsupportedInstance,
                    "the backend does not carry a parameter object");
    if (!inst.param->contains(y))
        throw Error(ErrorKind::InvalidArgument, "value is not a parameter element");
    FinSetPtr gens = make_finset({"u"});
    AlgebraPtr carrier = free_algebra(inst.variety, gens);
    Val step = bval_from_param(inst, carrier, y);
    CoalgPtr c = make_ffg_coalgebra(inst, gens, {step}, "unit");
    return backend->class_of(c, free_eta(inst.variety, 0));
}

// -- harness -----------------------------------------------------------------

namespace {

EnumBounds harness_enum_bounds(const HarnessBounds& b) {
    EnumBounds eb;
    eb.unary_counter = b.max_counter;
    eb.subset_max = b.subset_max;
    return eb;
}

std::string describe_equation(const FfgEquation& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.vars->size(); ++i) {
        if (i) out += "; ";
        out += e.vars->name(i) + " = " + show(e.step[i], e.vars.get());
    }
    return out + "]";
}

}  // namespace

HarnessReport check_weak_functoriality(const ElgotAlgebra& alg, const HarnessBounds& bounds,
                                       const std::vector<Val>& param_pool) {
    HarnessReport rep;
    rep.axiom = "weak-functoriality";
    const EnumBounds eb = harness_enum_bounds(bounds);

    for (std::size_t nz = 0; nz <= bounds.max_params; ++nz) {
        FinSetPtr zs = var_set("z", nz);
        AlgebraPtr zalg = free_algebra(alg.inst.variety, zs);
        std::vector<Val> zelems = zalg->enumerate(eb);

        for (std::size_t nx = 1; nx <= bounds.max_vars; ++nx) {
            FinSetPtr xs = var_set("x", nx);
            AlgebraPtr xcarrier = free_algebra(alg.inst.variety, xs);
            std::vector<Val> xsteps = enum_step_values(alg.inst, xcarrier, zalg, zelems, eb);
            std::vector<FfgEquation> es =
                enum_equations(alg.inst, xs, zalg, xsteps, bounds.max_instances);

            for (std::size_t ny = 1; ny <= bounds.max_vars; ++ny) {
                FinSetPtr ys = var_set("y", ny);
                AlgebraPtr ycarrier = free_algebra(alg.inst.variety, ys);
                std::vector<Val> ysteps = enum_step_values(alg.inst, ycarrier, zalg, zelems, eb);

                // all generator functions m: X -> Y
                std::vector<std::size_t> m(nx, 0);
                for (;;) {
                    auto rename = [&m](std::uint64_t i) {
                        return static_cast<std::uint64_t>(m.at(static_cast<std::size_t>(i)));
                    };
                    for (const FfgEquation& e : es) {
                        if (rep.instances >= bounds.max_instances) return rep;

                        // push e's steps along m and check consistency
                        std::vector<std::optional<Val>> fstep(ny);
                        bool consistent = true;
                        for (std::size_t i = 0; i < nx && consistent; ++i) {
                            Val pushed = [&] {
                                StepParts parts = split_step(alg.inst, e.step[i]);
                                if (alg.inst.variety == VarietyId::Jsl)
                                    return pair(bval_map(alg.inst, *parts.bval,
                                                         [&](const Val& t) {
                                                             return reindex_atoms(t, rename);
                                                         }),
                                                *parts.param);
                                if (parts.bval)
                                    return sum(false, bval_map(alg.inst, *parts.bval,
                                                               [&](const Val& t) {
                                                                   return reindex_atoms(t, rename);
                                                               }));
                                return e.step[i];
                            }();
                            std::size_t target = m[i];
                            if (fstep[target] && !val_eq(*fstep[target], pushed))
                                consistent = false;
                            else
                                fstep[target] = std::move(pushed);
                        }
                        if (!consistent) continue;

                        // deterministic fill of generators outside the image
                        std::vector<std::size_t> holes;
                        for (std::size_t j = 0; j < ny; ++j)
                            if (!fstep[j]) holes.push_back(j);
                        std::vector<std::size_t> fill_pick = {0, ysteps.size() - 1};
                        if (ysteps.size() == 1) fill_pick = {0};
                        std::vector<std::size_t> fill(holes.size(), 0);
                        for (;;) {
                            FfgEquation f;
                            f.inst = alg.inst;
                            f.vars = ys;
                            f.params = zalg;
                            f.step.resize(ny);
                            for (std::size_t j = 0; j < ny; ++j) f.step[j] = fstep[j].value_or(Val{});
                            for (std::size_t k = 0; k < holes.size(); ++k)
                                f.step[holes[k]] = ysteps[fill_pick[fill[k]]];

                            // every h: Z -> A from the pool
                            std::vector<std::size_t> hsel(nz, 0);
                            for (;;) {
                                if (nz > 0 && param_pool.empty()) break;
                                std::vector<Val> himg;
                                for (std::size_t k = 0; k < nz; ++k)
                                    himg.push_back(param_pool[hsel[k]]);
                                Hom h = hom_from_gens(zalg, alg.carrier, himg);
                                Solution se = alg.solver(aft(h, e));
                                Solution sf = alg.solver(aft(h, f));
                                ++rep.instances;
                                for (std::size_t i = 0; i < nx; ++i) {
                                    if (!alg.carrier->equal(se.assignment[i],
                                                            sf.assignment[m[i]])) {
                                        rep.failures.push_back(
                                            "e=" + describe_equation(e) +
                                            " f=" + describe_equation(f) + " at variable " +
                                            xs->name(i));
                                        if (rep.failures.size() > 5) return rep;
                                    }
                                }
                                std::size_t pos = 0;
                                while (pos < nz && ++hsel[pos] == param_pool.size()) {
                                    hsel[pos] = 0;
                                    ++pos;
                                }
                                if (pos == nz || nz == 0) break;
                            }

                            std::size_t pos = 0;
                            while (pos < holes.size() && ++fill[pos] == fill_pick.size()) {
                                fill[pos] = 0;
                                ++pos;
                            }
                            if (pos == holes.size() || holes.empty()) break;
                        }
                    }
                    std::size_t pos = 0;
                    while (pos < nx && ++m[pos] == ny) {
                        m[pos] = 0;
                        ++pos;
                    }
                    if (pos == nx) break;
                }
            }
        }
    }
    return rep;
}

HarnessReport check_compositionality(const ElgotAlgebra& alg, const HarnessBounds& bounds,
                                     const std::vector<Val>& param_pool) {
    HarnessReport rep;
    rep.axiom = "compositionality";
    const EnumBounds eb = harness_enum_bounds(bounds);

    for (std::size_t nx = 1; nx <= bounds.max_vars; ++nx) {
        for (std::size_t ny = 1; ny <= bounds.max_vars; ++ny) {
            FinSetPtr xs = var_set("x", nx);
            FinSetPtr ys = var_set("y", ny);
            AlgebraPtr xcarrier = free_algebra(alg.inst.variety, xs);
            AlgebraPtr ycarrier = free_algebra(alg.inst.variety, ys);

            std::vector<Val> yelems = ycarrier->enumerate(eb);
            std::vector<Val> xsteps = enum_step_values(alg.inst, xcarrier, ycarrier, yelems, eb);
            std::vector<Val> ysteps =
                enum_step_values(alg.inst, ycarrier, alg.carrier, param_pool, eb);

            std::vector<FfgEquation> es =
                enum_equations(alg.inst, xs, ycarrier, xsteps, bounds.max_instances);
            std::vector<FfgEquation> fs =
                enum_equations(alg.inst, ys, alg.carrier, ysteps, bounds.max_instances);

            // solvers are pure and the backends synchronize their caches,
            // so independent instances run concurrently
            const std::size_t workers =
                std::max<std::size_t>(1, std::thread::hardware_concurrency());
            for (const FfgEquation& f : fs) {
                if (rep.instances >= bounds.max_instances || rep.failures.size() > 5)
                    return rep;
                Solution sf = alg.solver(f);
                Hom fdag = hom_from_gens(ycarrier, alg.carrier, sf.assignment);
                // warm the shared lazy caches before the parallel section
                (void)f.carrier();
                (void)f.step_algebra();

                struct Part {
                    std::size_t instances = 0;
                    std::vector<std::string> failures;
                };
                std::vector<std::future<Part>> parts;
                for (std::size_t w = 0; w < workers; ++w) {
                    parts.push_back(std::async(std::launch::async, [&, w] {
                        Part part;
                        for (std::size_t k = w; k < es.size(); k += workers) {
                            const FfgEquation& e = es[k];
                            ++part.instances;
                            Solution staged = alg.solver(aft(fdag, e));
                            Solution combined = alg.solver(box(e, f));
                            for (std::size_t i = 0; i < nx; ++i) {
                                if (!alg.carrier->equal(staged.assignment[i],
                                                        combined.assignment[i])) {
                                    part.failures.push_back(
                                        "e=" + describe_equation(e) + " f=" +
                                        describe_equation(f) + " at variable " + xs->name(i));
                                    if (part.failures.size() > 5) return part;
                                }
                            }
                        }
                        return part;
                    }));
                }
                for (auto& fut : parts) {
                    Part part = fut.get();
                    rep.instances += part.instances;
                    for (auto& msg : part.failures) rep.failures.push_back(std::move(msg));
                }
            }
        }
    }
    return rep;
}

}  // namespace elgot
