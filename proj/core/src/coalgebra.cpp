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

#include "elgot/coalgebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace elgot {

AlgebraPtr FfgCoalgebra::carrier() const {
    if (!carrier_) carrier_ = free_algebra(inst.variety, gens);
    return carrier_;
}

AlgebraPtr FfgCoalgebra::bvals() const {
    if (!bvals_) bvals_ = bnode_algebra(inst, carrier());
    return bvals_;
}

CoalgPtr make_ffg_coalgebra(Instance inst, FinSetPtr gens, std::vector<Val> step,
                            std::string name) {
    if (step.size() != gens->size())
        throw Error(ErrorKind::InvalidArgument, "one step per generator required");
    auto c = std::make_shared<FfgCoalgebra>();
    c->inst = std::move(inst);
    c->gens = std::move(gens);
    c->step = std::move(step);
    c->name = std::move(name);
    AlgebraPtr bvals = c->bvals();  // fills both caches before sharing
    for (std::size_t i = 0; i < c->step.size(); ++i) {
        if (!bvals->contains(c->step[i]))
            throw Error(ErrorKind::InvalidArgument,
                        "step of generator " + c->gens->name(i) + " is not a behavior value: " +
                            show(c->step[i], c->gens.get()));
    }
    return c;
}

CoalgPtr determinize(const Instance& inst, FinSetPtr gens, std::vector<Val> step,
                     std::string name) {
    return make_ffg_coalgebra(inst, std::move(gens), std::move(step), std::move(name));
}

Val coalg_step_ext(const FfgCoalgebra& c, const Val& t) {
    return extend_apply(*c.bvals(), c.step, t);
}

HomReport is_coalg_hom(const CoalgHom& h) {
    HomReport rep;
    if (!compatible_instances(h.src->inst, h.dst->inst)) {
        rep.ok = false;
        rep.detail = "instance mismatch";
        return rep;
    }
    if (h.gen_map.size() != h.src->gens->size()) {
        rep.ok = false;
        rep.detail = "generator map has wrong arity";
        return rep;
    }
    AlgebraPtr dst_carrier = h.dst->carrier();
    AlgebraPtr dst_bvals = bnode_algebra(h.dst->inst, dst_carrier);
    auto apply_h = [&](const Val& t) { return extend_apply(*dst_carrier, h.gen_map, t); };
    for (std::size_t i = 0; i < h.src->gens->size(); ++i) {
        Val lhs = bval_map(h.src->inst, h.src->step[i], apply_h);  // F h . c
        Val rhs = coalg_step_ext(*h.dst, h.gen_map[i]);            // d . h
        if (!dst_bvals->equal(lhs, rhs)) {
            rep.ok = false;
            rep.witness = i;
            rep.detail = "square fails at generator " + h.src->gens->name(i) + ": Fh.c = " +
                         show(lhs, h.dst->gens.get()) + " but d.h = " +
                         show(rhs, h.dst->gens.get());
            return rep;
        }
    }
    return rep;
}

Val CoalgCoproduct::map_left(const Val& t) const {
    return reindex_atoms(t, [](std::uint64_t i) { return i; });
}

Val CoalgCoproduct::map_right(const Val& t) const {
    const std::uint64_t off = left_size;
    return reindex_atoms(t, [off](std::uint64_t i) { return i + off; });
}

CoalgHom CoalgCoproduct::inj_left(const CoalgPtr& left) const {
    CoalgHom h;
    h.src = left;
    h.dst = coalg;
    for (std::size_t i = 0; i < left->gens->size(); ++i)
        h.gen_map.push_back(free_eta(coalg->inst.variety, i));
    return h;
}

CoalgHom CoalgCoproduct::inj_right(const CoalgPtr& right) const {
    CoalgHom h;
    h.src = right;
    h.dst = coalg;
    for (std::size_t i = 0; i < right->gens->size(); ++i)
        h.gen_map.push_back(free_eta(coalg->inst.variety, left_size + i));
    return h;
}

CoalgCoproduct coproduct_coalg(const CoalgPtr& c, const CoalgPtr& d) {
    if (!compatible_instances(c->inst, d->inst))
        throw Error(ErrorKind::VarietyMismatch, "coproduct of incompatible coalgebras");
    CoalgCoproduct out;
    out.left_size = c->gens->size();
    FinSetPtr gens = finset_union(c->gens, d->gens);
    std::vector<Val> step;
    step.reserve(gens->size());
    const std::uint64_t off = out.left_size;
    auto shift = [off](std::uint64_t i) { return i + off; };
    for (const Val& s : c->step)
        step.push_back(s);
    for (const Val& s : d->step) {
        // reindex children; parameter parts carry no generators
        Val mapped = bval_map(d->inst, s, [&](const Val& child) {
            return reindex_atoms(child, shift);
        });
        step.push_back(std::move(mapped));
    }
    std::string name = (c->name.empty() ? "c" : c->name) + "+" + (d->name.empty() ? "d" : d->name);
    out.coalg = make_ffg_coalgebra(c->inst, std::move(gens), std::move(step), std::move(name));
    return out;
}

HomReport is_plain_to_ffg_hom(const PlainCoalgebra& src, const FfgCoalgebra& dst,
                              const std::function<Val(const Val&)>& fn,
                              const EnumBounds& bounds) {
    HomReport rep;
    AlgebraPtr dst_bvals = bnode_algebra(dst.inst, dst.carrier());
    auto elems = src.carrier->enumerate(bounds);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const Val& x = elems[i];
        Val lhs = bval_map(src.inst, src.step(x), fn);
        Val rhs = coalg_step_ext(dst, fn(x));
        if (!dst_bvals->equal(lhs, rhs)) {
            rep.ok = false;
            rep.witness = i;
            rep.detail = "square fails at element " + show(x);
            return rep;
        }
    }
    return rep;
}

HomReport is_ffg_to_plain_hom(const FfgCoalgebra& src, const PlainCoalgebra& dst,
                              const std::function<Val(const Val&)>& fn) {
    HomReport rep;
    AlgebraPtr dst_bvals = bnode_algebra(dst.inst, dst.carrier);
    for (std::size_t i = 0; i < src.gens->size(); ++i) {
        Val x = free_eta(src.inst.variety, i);
        Val lhs = bval_map(src.inst, src.step[i], fn);
        Val rhs = dst.step(fn(x));
        if (!dst_bvals->equal(lhs, rhs)) {
            rep.ok = false;
            rep.witness = i;
            rep.detail = "square fails at generator " + src.gens->name(i);
            return rep;
        }
    }
    return rep;
}

SplitQuotient split_quotient_to_ffg(const PlainCoalgebra& c, const Hom& retraction,
                                    const Hom& section) {
    const FinSetPtr* wgensp = retraction.src->free_gens();
    if (!wgensp)
        throw Error(ErrorKind::InvalidArgument, "retraction must start from an ffg object");
    FinSetPtr wgens = *wgensp;

    // e . m = id on the split carrier
    for (const Val& x : c.carrier->enumerate({})) {
        if (!c.carrier->equal(retraction.fn(section.fn(x)), x))
            throw Error(ErrorKind::InvalidArgument,
                        "retraction . section is not the identity at " + show(x));
    }

    std::vector<Val> step;
    step.reserve(wgens->size());
    for (std::size_t i = 0; i < wgens->size(); ++i) {
        Val x = retraction.fn(free_eta(c.inst.variety, i));
        step.push_back(bval_map(c.inst, c.step(x), section.fn));
    }
    SplitQuotient out;
    out.ffg = make_ffg_coalgebra(c.inst, wgens, std::move(step),
                                 c.name.empty() ? "split" : c.name + ".split");
    out.section = section.fn;
    out.retraction = retraction.fn;

    HomReport m_ok = is_plain_to_ffg_hom(c, *out.ffg, section.fn);
    if (!m_ok.ok)
        throw Error(ErrorKind::InvalidArgument,
                    "section is not a coalgebra homomorphism: " + m_ok.detail);
    return out;
}

SpanZigzag zigzag_from_span(const PlainCoalgebra& c, const Hom& retraction, const Hom& section,
                            const CoalgPtr& left_target,
                            const std::function<Val(const Val&)>& f,
                            const CoalgPtr& right_target,
                            const std::function<Val(const Val&)>& g) {
    HomReport f_ok = is_plain_to_ffg_hom(c, *left_target, f);
    if (!f_ok.ok)
        throw Error(ErrorKind::InvalidArgument, "left leg input is not a homomorphism: " + f_ok.detail);
    HomReport g_ok = is_plain_to_ffg_hom(c, *right_target, g);
    if (!g_ok.ok)
        throw Error(ErrorKind::InvalidArgument,
                    "right leg input is not a homomorphism: " + g_ok.detail);

    SplitQuotient sq = split_quotient_to_ffg(c, retraction, section);
    SpanZigzag out;
    out.mid = sq.ffg;

    auto leg = [&](const CoalgPtr& target, const std::function<Val(const Val&)>& hom) {
        CoalgHom l;
        l.src = sq.ffg;
        l.dst = target;
        for (std::size_t i = 0; i < sq.ffg->gens->size(); ++i)
            l.gen_map.push_back(hom(sq.retraction(free_eta(c.inst.variety, i))));
        return l;
    };
    out.leg_left = leg(left_target, f);
    out.leg_right = leg(right_target, g);

    HomReport l_ok = is_coalg_hom(out.leg_left);
    HomReport r_ok = is_coalg_hom(out.leg_right);
    if (!l_ok.ok || !r_ok.ok)
        throw Error(ErrorKind::InvalidArgument, "zig-zag leg fails the homomorphism square");
    return out;
}

std::uint32_t Machine::state_of(const Val& v) const {
    auto it = index.find(val_key(v));
    if (it == index.end())
        throw Error(ErrorKind::InvalidArgument, "element is not a state of this machine");
    return it->second;
}

namespace {

// Splits a behavior value into (functor node, parameter key).
std::pair<Val, std::string> split_bval(const Instance& inst, const Val& bval) {
    if (!inst.has_param()) return {bval, std::string()};
    if (inst.variety == VarietyId::Jsl)
        return {bval.kids.at(0), val_key(bval.kids.at(1))};
    if (bval.tag == 1) return {Val{}, "y:" + val_key(bval.kids.at(0))};
    return {bval.kids.at(0), std::string()};
}

}  // namespace

Machine materialize(const FfgCoalgebra& c, const MaterializeOptions& opts) {
    if (c.inst.variety == VarietyId::Unary)
        throw Error(ErrorKind::InfiniteCarrier, "UNARY carriers are infinite");
    Machine m;
    auto add_state = [&](const Val& v) -> std::uint32_t {
        std::string k = val_key(v);
        auto it = m.index.find(k);
        if (it != m.index.end()) return it->second;
        if (m.states.size() >= opts.max_states)
            throw Error(ErrorKind::NotEnumerable, "machine exceeds the state bound");
        std::uint32_t id = static_cast<std::uint32_t>(m.states.size());
        m.index.emplace(std::move(k), id);
        m.states.push_back(v);
        m.label.emplace_back();
        m.param_key.emplace_back();
        m.next.emplace_back();
        return id;
    };

    std::deque<std::uint32_t> work;
    if (opts.reachable_only && !opts.roots.empty()) {
        for (const Val& r : opts.roots) work.push_back(add_state(r));
    } else {
        for (const Val& v : c.carrier()->enumerate({})) work.push_back(add_state(v));
    }

    for (std::size_t done = 0; done < m.states.size(); ++done) {
        Val state = m.states[done];
        Val bval = coalg_step_ext(c, state);
        auto [fnode, pkey] = split_bval(c.inst, bval);
        m.param_key[done] = pkey;
        if (fnode.is(ValKind::Node)) {
            m.label[done] = static_cast<std::uint32_t>(fnode.tag);
            for (const Val& child : fnode.kids) {
                std::uint32_t id = add_state(child);  // may reallocate m.next
                m.next[done].push_back(id);
            }
        } else {
            m.label[done] = 0;  // pure parameter step (SET/UNARY parametrized case)
        }
    }
    return m;
}

std::vector<std::uint32_t> partition_refine(const Machine& m) {
    const std::size_t n = m.size();
    std::vector<std::uint32_t> block(n, 0);

    // initial partition: functor label, successor count, parameter part
    {
        std::map<std::tuple<std::uint32_t, std::size_t, std::string>, std::uint32_t> ids;
        for (std::size_t s = 0; s < n; ++s) {
            auto key = std::make_tuple(m.label[s], m.next[s].size(), m.param_key[s]);
            auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
            (void)fresh;
            block[s] = it->second;
        }
    }

    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> next_block(n, 0);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::uint32_t> sig;
            sig.push_back(block[s]);
            for (std::uint32_t t : m.next[s]) sig.push_back(block[t]);
            auto [it, fresh] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
            (void)fresh;
            next_block[s] = it->second;
        }
        bool changed = false;
        for (std::size_t s = 0; s < n; ++s) changed |= (next_block[s] != block[s]);
        block.swap(next_block);
        if (!changed) break;
    }
    return block;
}

MinimizedMachine minimize(const Machine& m) {
    MinimizedMachine out;
    out.block_of = partition_refine(m);
    std::uint32_t blocks = 0;
    for (std::uint32_t b : out.block_of) blocks = std::max(blocks, b + 1);

    Machine& q = out.machine;
    q.states.resize(blocks);
    q.label.resize(blocks);
    q.param_key.resize(blocks);
    q.next.resize(blocks);
    std::vector<bool> seen(blocks, false);
    for (std::size_t s = 0; s < m.size(); ++s) {
        std::uint32_t b = out.block_of[s];
        if (seen[b]) continue;
        seen[b] = true;
        q.states[b] = m.states[s];
        q.label[b] = m.label[s];
        q.param_key[b] = m.param_key[s];
        for (std::uint32_t t : m.next[s]) q.next[b].push_back(out.block_of[t]);
        q.index.emplace(val_key(m.states[s]), b);
    }
    return out;
}

bool behavioral_equiv(const CoalgPtr& c1, const Val& s1, const CoalgPtr& c2, const Val& s2) {
    if (c1->inst.variety == VarietyId::Unary)
        throw Error(ErrorKind::InfiniteCarrier,
                    "behavioral equivalence needs a finite carrier; use the stream backend");
    MaterializeOptions opts;
    if (c1.get() == c2.get()) {
        opts.roots = {s1, s2};
        Machine m = materialize(*c1, opts);
        auto block = partition_refine(m);
        return block[m.state_of(s1)] == block[m.state_of(s2)];
    }
    CoalgCoproduct cp = coproduct_coalg(c1, c2);
    Val t1 = cp.map_left(s1);
    Val t2 = cp.map_right(s2);
    opts.roots = {t1, t2};
    Machine m = materialize(*cp.coalg, opts);
    auto block = partition_refine(m);
    return block[m.state_of(t1)] == block[m.state_of(t2)];
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string state_caption(const Val& v, const FinSet* gens) { return show(v, gens); }

}  // namespace

std::string machine_dot(const Machine& m, const Instance& inst, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n";
    const FinSet* gens = nullptr;
    for (std::size_t s = 0; s < m.size(); ++s) {
        os << "  s" << s << " [label=\""
           << dot_escape(state_caption(m.states[s], gens)) << "\\nout "
           << m.label[s];
        if (!m.param_key[s].empty()) os << " | y";
        os << "\"];\n";
    }
    for (std::size_t s = 0; s < m.size(); ++s) {
        for (std::size_t a = 0; a < m.next[s].size(); ++a) {
            os << "  s" << s << " -> s" << m.next[s][a] << " [label=\"";
            if (inst.shape.is_moore())
                os << dot_escape(inst.shape.moore().alphabet->name(a));
            else
                os << a;
            os << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string coalg_dot(const FfgCoalgebra& c) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(c.name.empty() ? "coalgebra" : c.name)
       << "\" {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < c.gens->size(); ++i) {
        os << "  g" << i << " [label=\"" << dot_escape(c.gens->name(i)) << "\"];\n";
    }
    for (std::size_t i = 0; i < c.gens->size(); ++i) {
        os << "  g" << i << " -> step" << i << " [arrowhead=none];\n";
        os << "  step" << i << " [shape=box,label=\""
           << dot_escape(show(c.step[i], c.gens.get())) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace elgot
