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

#include "elgot/equation.hpp"

#include <algorithm>

namespace elgot {

AlgebraPtr FfgEquation::carrier() const {
    if (!carrier_) carrier_ = free_algebra(inst.variety, vars);
    return carrier_;
}

AlgebraPtr FfgEquation::step_algebra() const {
    if (!step_alg_) step_alg_ = coproduct(bnode_algebra(inst, carrier()), params).alg;
    return step_alg_;
}

FfgEquation make_equation(Instance inst, FinSetPtr vars, AlgebraPtr params,
                          std::vector<Val> step) {
    if (step.size() != vars->size())
        throw Error(ErrorKind::InvalidArgument, "one step per variable required");
    if (params->variety() != inst.variety)
        throw Error(ErrorKind::VarietyMismatch, "parameter algebra in a different variety");
    FfgEquation e;
    e.inst = std::move(inst);
    e.vars = std::move(vars);
    e.params = std::move(params);
    e.step = std::move(step);
    AlgebraPtr sa = e.step_algebra();
    for (std::size_t i = 0; i < e.step.size(); ++i)
        if (!sa->contains(e.step[i]))
            throw Error(ErrorKind::InvalidArgument,
                        "step of variable " + e.vars->name(i) + " is malformed: " +
                            show(e.step[i], e.vars.get()));
    return e;
}

namespace {

Coproduct step_coproduct(const Instance& inst, const AlgebraPtr& carrier,
                         const AlgebraPtr& params) {
    return coproduct(bnode_algebra(inst, carrier), params);
}

// Decomposes a step into its behavior part and parameter part. For SET and
// UNARY exactly one of the two is present.
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

Val reindex_bval(const Instance& inst, const Val& bval,
                 const std::function<std::uint64_t(std::uint64_t)>& fn) {
    return bval_map(inst, bval, [&fn](const Val& child) { return reindex_atoms(child, fn); });
}

}  // namespace

Val eq_inl(const Instance& inst, const AlgebraPtr& carrier, const AlgebraPtr& params, Val bval) {
    return step_coproduct(inst, carrier, params).inl(bval);
}

Val eq_inr(const Instance& inst, const AlgebraPtr& carrier, const AlgebraPtr& params, Val a) {
    return step_coproduct(inst, carrier, params).inr(a);
}

Val eq_step_behavior(const FfgEquation& e, Val bval) {
    return eq_inl(e.inst, e.carrier(), e.params, std::move(bval));
}

Val eq_step_param(const FfgEquation& e, Val a) {
    return eq_inr(e.inst, e.carrier(), e.params, std::move(a));
}

bool equation_eq(const FfgEquation& a, const FfgEquation& b) {
    if (!compatible_instances(a.inst, b.inst)) return false;
    if (a.vars->names() != b.vars->names()) return false;
    if (!same_algebra(a.params, b.params)) return false;
    if (a.step.size() != b.step.size()) return false;
    for (std::size_t i = 0; i < a.step.size(); ++i)
        if (!val_eq(a.step[i], b.step[i])) return false;
    return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->variety() != b->variety()) return false;
    const FinSetPtr* ga = a->free_gens();
    const FinSetPtr* gb = b->free_gens();
    return ga && gb && (*ga)->names() == (*gb)->names();
}

FfgEquation aft(const Hom& h, const FfgEquation& e) {
    if (!same_algebra(h.src, e.params))
        throw Error(ErrorKind::VarietyMismatch,
                    "re-parameterization does not start at the parameter algebra");
    // extensions of generator assignments are homomorphisms by
    // construction; hand-rolled maps on explicit carriers are checked
    if (!h.src->free_gens()) {
        try {
            HomCheck chk = check_hom(h, {});
            if (!chk.ok)
                throw Error(ErrorKind::InvalidArgument,
                            "re-parameterization is not a homomorphism: " + chk.detail);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::NotEnumerable) throw;
        }
    }
    std::vector<Val> step;
    step.reserve(e.step.size());
    for (const Val& s : e.step) {
        StepParts parts = split_step(e.inst, s);
        if (e.inst.variety == VarietyId::Jsl) {
            step.push_back(pair(*parts.bval, h.fn(*parts.param)));
        } else if (parts.param) {
            step.push_back(sum(true, h.fn(*parts.param)));
        } else {
            step.push_back(s);
        }
    }
    FfgEquation out;
    out.inst = e.inst;
    out.vars = e.vars;
    out.params = h.dst;
    out.step = std::move(step);
    return out;
}

FfgEquation box(const FfgEquation& e, const FfgEquation& f) {
    if (!compatible_instances(e.inst, f.inst))
        throw Error(ErrorKind::VarietyMismatch, "combining equations of different instances");
    const FinSetPtr* egens = e.params->free_gens();
    if (!egens || (*egens)->names() != f.vars->names())
        throw Error(ErrorKind::InvalidArgument,
                    "left parameters must be free on the right variables");

    FinSetPtr vars = finset_union(e.vars, f.vars);
    AlgebraPtr carrier = free_algebra(e.inst.variety, vars);
    AlgebraPtr lifted = bnode_algebra(e.inst, carrier);

    const std::uint64_t off = e.vars->size();
    auto keep = [](std::uint64_t i) { return i; };
    auto shift = [off](std::uint64_t i) { return i + off; };

    // f's step extension TY -> FY (+) Z, landing in f's own step algebra
    AlgebraPtr fstep_alg = f.step_algebra();
    auto f_ext = [&](const Val& t) { return extend_apply(*fstep_alg, f.step, t); };

    std::vector<Val> step;
    step.reserve(vars->size());
    for (std::size_t i = 0; i < e.vars->size(); ++i) {
        StepParts parts = split_step(e.inst, e.step[i]);
        if (e.inst.variety == VarietyId::Jsl) {
            Val left = reindex_bval(e.inst, *parts.bval, keep);
            StepParts fparts = split_step(f.inst, f_ext(*parts.param));
            Val right = reindex_bval(f.inst, *fparts.bval, shift);
            step.push_back(pair(lifted->join(left, right), *fparts.param));
        } else if (parts.bval) {
            step.push_back(sum(false, reindex_bval(e.inst, *parts.bval, keep)));
        } else {
            StepParts fparts = split_step(f.inst, f_ext(*parts.param));
            if (fparts.bval)
                step.push_back(sum(false, reindex_bval(f.inst, *fparts.bval, shift)));
            else
                step.push_back(sum(true, *fparts.param));
        }
    }
    for (std::size_t i = 0; i < f.vars->size(); ++i) {
        StepParts fparts = split_step(f.inst, f.step[i]);
        if (f.inst.variety == VarietyId::Jsl) {
            step.push_back(pair(reindex_bval(f.inst, *fparts.bval, shift), *fparts.param));
        } else if (fparts.bval) {
            step.push_back(sum(false, reindex_bval(f.inst, *fparts.bval, shift)));
        } else {
            step.push_back(sum(true, *fparts.param));
        }
    }

    FfgEquation out;
    out.inst = e.inst;
    out.vars = std::move(vars);
    out.params = f.params;
    out.step = std::move(step);
    return out;
}

Val eff_next(Val fnode) { return sum(false, std::move(fnode)); }
Val eff_param(Val a) { return sum(true, std::move(a)); }

FfgEquation from_effectful(const Instance& inst, FinSetPtr vars, AlgebraPtr params,
                           const std::vector<Val>& raw) {
    if (inst.has_param())
        throw Error(ErrorKind::UnsupportedInstance,
                    "the effectful frontend targets plain behavior functors");
    if (raw.size() != vars->size())
        throw Error(ErrorKind::InvalidArgument, "one raw step per variable required");
    AlgebraPtr carrier = free_algebra(inst.variety, vars);
    Coproduct target = step_coproduct(inst, carrier, params);

    std::vector<Val> step;
    step.reserve(raw.size());
    for (const Val& t : raw) {
        if (!t.is(ValKind::TBox))
            throw Error(ErrorKind::InvalidArgument, "raw step must be one monad layer");
        std::vector<Val> fitems;
        std::vector<Val> aitems;
        for (const Val& item : t.kids) {
            if (!item.is(ValKind::Sum))
                throw Error(ErrorKind::InvalidArgument,
                            "raw items must be tagged (functor | parameter)");
            (item.tag == 0 ? fitems : aitems).push_back(item.kids.at(0));
        }
        switch (inst.variety) {
            case VarietyId::Set:
            case VarietyId::Unary: {
                // the monad layer sits on a single tagged item and splits
                // into exactly one summand
                if (!fitems.empty()) {
                    Val lam = inst.law.apply(tbox(inst.variety, t.tag, {fitems[0]}));
                    step.push_back(target.inl(lam));
                } else {
                    Val a = params->alpha(tbox(inst.variety, t.tag, {aitems[0]}));
                    step.push_back(target.inr(std::move(a)));
                }
                break;
            }
            case VarietyId::Jsl: {
                Val lam = inst.law.apply(tbox(inst.variety, 0, std::move(fitems)));
                Val a = params->alpha(tbox(inst.variety, 0, std::move(aitems)));
                step.push_back(pair(std::move(lam), std::move(a)));
                break;
            }
        }
    }
    return make_equation(inst, std::move(vars), std::move(params), std::move(step));
}

FfgEquation coalg_as_equation(const CoalgPtr& c, AlgebraPtr params) {
    AlgebraPtr carrier = c->carrier();
    Coproduct target = step_coproduct(c->inst, carrier, params);
    std::vector<Val> step;
    step.reserve(c->step.size());
    for (const Val& bval : c->step) step.push_back(target.inl(bval));
    FfgEquation e;
    e.inst = c->inst;
    e.vars = c->gens;
    e.params = std::move(params);
    e.step = std::move(step);
    return e;
}

CoalgPtr equation_as_coalg(const FfgEquation& e, std::string name) {
    const FinSetPtr* pgens = e.params->free_gens();
    if (!pgens || (*pgens)->size() != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "only equations over the initial object form coalgebras");
    std::vector<Val> step;
    step.reserve(e.step.size());
    for (const Val& s : e.step) {
        StepParts parts = split_step(e.inst, s);
        if (!parts.bval)
            throw Error(ErrorKind::InvalidArgument,
                        "parameter summand hit in an equation over the initial object");
        step.push_back(*parts.bval);
    }
    return make_ffg_coalgebra(e.inst, e.vars, std::move(step), std::move(name));
}

Val Solution::at(const Val& carrier_elem) const {
    return extend_apply(*equation.params, assignment, carrier_elem);
}

Solution solve_in_phi(const BackendPtr& backend, const FfgEquation& e) {
    if (!compatible_instances(e.inst, backend->inst()))
        throw Error(ErrorKind::UnsupportedInstance, "equation instance does not match backend");

    // collect the parameter classes and their representative coalgebras
    std::vector<Val> param_vals;
    for (const Val& s : e.step) {
        StepParts parts = split_step(e.inst, s);
        if (parts.param) param_vals.push_back(*parts.param);
    }
    std::vector<CoalgPtr> reps;
    for (const Val& p : param_vals) {
        if (!p.is(ValKind::StreamCls) && !p.is(ValKind::BisimCls))
            throw Error(ErrorKind::InvalidArgument, "parameter is not a backend class");
        if (!p.rep)
            throw Error(ErrorKind::InvalidArgument,
                        "parameter class carries no representative");
        bool known = false;
        for (const CoalgPtr& r : reps) known |= (r.get() == p.rep.get());
        if (!known) reps.push_back(p.rep);
    }

    // coproduct of the distinct representatives, tracking injections
    CoalgPtr combined =
        make_ffg_coalgebra(e.inst, make_finset(std::vector<std::string>{}), {}, "params");
    std::vector<std::uint64_t> offset(reps.size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CoalgCoproduct cp = coproduct_coalg(combined, reps[i]);
        // earlier offsets stay valid: the union keeps left indices unchanged
        offset[i] = cp.left_size;
        combined = cp.coalg;
    }
    auto rep_index = [&](const CoalgPtr& r) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (reps[i].get() == r.get()) return i;
        throw Error(ErrorKind::InvalidArgument, "unknown representative");
    };

    // rewrite e to land in the free carrier of the combined coalgebra
    AlgebraPtr combined_carrier = combined->carrier();
    std::vector<Val> wstep;
    wstep.reserve(e.step.size());
    Coproduct wtarget = step_coproduct(e.inst, e.carrier(), combined_carrier);
    for (const Val& s : e.step) {
        StepParts parts = split_step(e.inst, s);
        std::optional<Val> injected;
        if (parts.param) {
            const Val& p = *parts.param;
            const std::uint64_t off = offset[rep_index(p.rep)];
            injected = reindex_atoms(class_rep_elem(p), [off](std::uint64_t i) { return i + off; });
        }
        if (e.inst.variety == VarietyId::Jsl) {
            wstep.push_back(pair(*parts.bval, *injected));
        } else if (parts.bval) {
            wstep.push_back(sum(false, *parts.bval));
        } else {
            wstep.push_back(sum(true, *injected));
        }
    }
    FfgEquation w;
    w.inst = e.inst;
    w.vars = e.vars;
    w.params = combined_carrier;
    w.step = std::move(wstep);

    FfgEquation closed = box(w, coalg_as_equation(combined, initial_algebra(e.inst.variety)));
    CoalgPtr solved = equation_as_coalg(closed, "solution");

    Solution out;
    out.equation = e;
    out.assignment.reserve(e.vars->size());
    for (std::size_t i = 0; i < e.vars->size(); ++i)
        out.assignment.push_back(backend->class_of(solved, free_eta(e.inst.variety, i)));
    return out;
}

}  // namespace elgot
