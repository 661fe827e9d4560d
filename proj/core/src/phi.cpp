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

#include "elgot/phi.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace elgot {

namespace {

// primitive cyclic root: the shortest d with period[i] == period[i mod d]
std::vector<std::uint64_t> primitive_root(const std::vector<std::uint64_t>& period) {
    const std::size_t p = period.size();
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < p && ok; ++i) ok = (period[i] == period[i % d]);
        if (ok) return std::vector<std::uint64_t>(period.begin(), period.begin() + d);
    }
    return period;
}

}  // namespace

EpStream make_epstream(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period) {
    if (period.empty())
        throw Error(ErrorKind::InvalidArgument, "stream period must be nonempty");
    period = primitive_root(period);
    // absorb any prefix tail that already lies on the cycle
    while (!prefix.empty() && prefix.back() == period.back()) {
        prefix.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    EpStream s;
    s.prefix = std::move(prefix);
    s.period = std::move(period);
    return s;
}

Rational EpStream::mean() const {
    std::int64_t sum = 0;
    for (std::uint64_t v : period) sum += static_cast<std::int64_t>(v);
    return Rational(sum, static_cast<std::int64_t>(period.size()));
}

std::vector<std::uint64_t> EpStream::take(std::size_t n) const {
    std::vector<std::uint64_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < prefix.size())
            out.push_back(prefix[i]);
        else
            out.push_back(period[(i - prefix.size()) % period.size()]);
    }
    return out;
}

std::string EpStream::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i) os << ",";
        os << prefix[i];
    }
    os << ")(";
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (i) os << ",";
        os << period[i];
    }
    os << ")^w";
    return os.str();
}

EpStream parse_epstream(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_list = [&]() {
        skip_ws();
        if (pos >= text.size() || text[pos] != '(')
            throw ParseError(1, pos + 1, "expected '(' in stream literal");
        ++pos;
        std::vector<std::uint64_t> out;
        skip_ws();
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            return out;
        }
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw ParseError(1, pos + 1, "expected a number in stream literal");
            out.push_back(std::stoull(text.substr(start, pos - start)));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                return out;
            }
            throw ParseError(1, pos + 1, "expected ',' or ')' in stream literal");
        }
    };
    auto prefix = parse_list();
    auto period = parse_list();
    skip_ws();
    if (pos + 1 >= text.size() || text[pos] != '^' || (text[pos + 1] != 'w' && text[pos + 1] != 'W'))
        throw ParseError(1, pos + 1, "expected '^w' in stream literal");
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw ParseError(1, pos + 1, "trailing input in stream literal");
    return make_epstream(std::move(prefix), std::move(period));
}

bool ep_equiv(const EpStream& s, const EpStream& t) { return s.mean() == t.mean(); }

namespace {

struct StreamStep {
    std::uint64_t increment;
    std::uint64_t next_gen;
};

StreamStep stream_step(const FfgCoalgebra& c, std::uint64_t gen) {
    const Val& bval = c.step.at(static_cast<std::size_t>(gen));
    if (!bval.is(ValKind::Node) || bval.kids.size() != 1 || !bval.kids[0].is(ValKind::TBox))
        throw Error(ErrorKind::UnsupportedInstance, "stream operations need the UNARY/Id instance");
    const Val& child = bval.kids[0];
    return {child.tag, child.kids.at(0).tag};
}

void require_stream_instance(const FfgCoalgebra& c) {
    if (c.inst.variety != VarietyId::Unary || !c.inst.shape.is_id() || c.inst.has_param())
        throw Error(ErrorKind::UnsupportedInstance, "stream operations need the UNARY/Id instance");
}

struct Orbit {
    std::vector<std::uint64_t> gens;        // x_0, x_1, ...
    std::vector<std::uint64_t> increments;  // o(x_0), o(x_1), ...
    std::size_t cycle_start = 0;            // k
    std::size_t cycle_len = 0;              // p
};

Orbit simulate(const FfgCoalgebra& c, std::uint64_t start_gen) {
    Orbit orbit;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::uint64_t x = start_gen;
    for (;;) {
        auto it = seen.find(x);
        if (it != seen.end()) {
            orbit.cycle_start = it->second;
            orbit.cycle_len = orbit.gens.size() - it->second;
            return orbit;
        }
        seen.emplace(x, orbit.gens.size());
        StreamStep st = stream_step(c, x);
        orbit.gens.push_back(x);
        orbit.increments.push_back(st.increment);
        x = st.next_gen;
    }
}

}  // namespace

EpStream stream_of(const FfgCoalgebra& c, const Val& state) {
    require_stream_instance(c);
    if (!state.is(ValKind::TBox) || state.kids.size() != 1 || !state.kids[0].is(ValKind::Atom))
        throw Error(ErrorKind::InvalidArgument, "state must be a carrier element (m,x)");
    Orbit orbit = simulate(c, state.kids[0].tag);
    std::vector<std::uint64_t> prefix(orbit.increments.begin(),
                                      orbit.increments.begin() + orbit.cycle_start);
    std::vector<std::uint64_t> period(orbit.increments.begin() + orbit.cycle_start,
                                      orbit.increments.end());
    return make_epstream(std::move(prefix), std::move(period));
}

std::optional<ZigzagWitness> zigzag_witness(const CoalgPtr& cx, const Val& sx,
                                            const CoalgPtr& cy, const Val& sy) {
    require_stream_instance(*cx);
    require_stream_instance(*cy);
    if (!ep_equiv(stream_of(*cx, sx), stream_of(*cy, sy))) return std::nullopt;

    // joint orbit of the generator pair; k and p are minimal for the pair
    std::uint64_t x = sx.kids[0].tag, y = sy.kids[0].tag;
    std::uint64_t m = sx.tag, n = sy.tag;
    std::vector<std::uint64_t> ms{m}, ns{n}, xs{x}, ys{y};
    std::unordered_map<std::uint64_t, std::size_t> seen;
    auto pack = [&](std::uint64_t a, std::uint64_t b) {
        return a * (cy->gens->size() + 1) + b;
    };
    std::size_t k = 0, p = 0;
    for (std::size_t j = 0;; ++j) {
        auto it = seen.find(pack(x, y));
        if (it != seen.end()) {
            k = it->second;
            p = j - it->second;
            break;
        }
        seen.emplace(pack(x, y), j);
        StreamStep stx = stream_step(*cx, x);
        StreamStep sty = stream_step(*cy, y);
        m += stx.increment;
        n += sty.increment;
        x = stx.next_gen;
        y = sty.next_gen;
        ms.push_back(m);
        ns.push_back(n);
        xs.push_back(x);
        ys.push_back(y);
    }

    const std::uint64_t final_inc = ms[k + p] - ms[k];

    std::vector<std::string> names;
    for (std::size_t j = 0; j < k + p; ++j) names.push_back("z" + std::to_string(j));
    FinSetPtr zgens = make_finset(std::move(names));
    std::vector<Val> step;
    for (std::size_t j = 0; j + 1 < k + p; ++j)
        step.push_back(node(0, {tbox(VarietyId::Unary, 0, {atom(j + 1)})}));
    step.push_back(node(0, {tbox(VarietyId::Unary, final_inc, {atom(k)})}));
    CoalgPtr mid = make_ffg_coalgebra(cx->inst, zgens, std::move(step), "zigzag");

    ZigzagWitness w;
    w.mid = mid;
    w.mid_state = free_eta(VarietyId::Unary, 0);
    w.to_left.src = mid;
    w.to_left.dst = cx;
    w.to_right.src = mid;
    w.to_right.dst = cy;
    for (std::size_t j = 0; j < k + p; ++j) {
        w.to_left.gen_map.push_back(tbox(VarietyId::Unary, ms[j], {atom(xs[j])}));
        w.to_right.gen_map.push_back(tbox(VarietyId::Unary, ns[j], {atom(ys[j])}));
    }

    HomReport l = is_coalg_hom(w.to_left);
    HomReport r = is_coalg_hom(w.to_right);
    if (!l.ok || !r.ok)
        throw Error(ErrorKind::InvalidArgument,
                    "zig-zag legs fail the homomorphism square: " + l.detail + r.detail);
    return w;
}

namespace {

class StreamBackend final : public PhiBackend {
public:
    StreamBackend() {
        inst_ = make_instance(VarietyId::Unary, id_shape());
        OpaqueOps ops;
        ops.name = "stream classes";
        ops.unary = [](const Val& v) { return v; };
        ops.equal = [](const Val& a, const Val& b) {
            return a.is(ValKind::StreamCls) && b.is(ValKind::StreamCls) && a.key == b.key;
        };
        ops.contains = [](const Val& v) { return v.is(ValKind::StreamCls); };
        algebra_ = opaque_algebra(VarietyId::Unary, std::move(ops));
    }

    Val class_of(const CoalgPtr& c, const Val& element) const override {
        EpStream s = stream_of(*c, element);
        return stream_class(s.mean(), c, element);
    }

    std::string key_str(const Val& cls) const override { return cls.key.str(); }
    std::string name() const override { return "stream"; }
};

// equality results memoized behind a lock; entries pin their coalgebras so
// the pointer-based keys stay valid. Bounded: one-shot comparisons of
// fresh classes would otherwise grow the table without ever hitting it.
struct BisimCache {
    static constexpr std::size_t kCap = 4096;
    std::mutex mu;
    std::unordered_map<std::string, bool> decided;
    std::vector<CoalgPtr> pinned;
};

class BisimBackend final : public PhiBackend {
public:
    explicit BisimBackend(Instance inst) {
        if (inst.variety != VarietyId::Jsl || !inst.shape.is_moore())
            throw Error(ErrorKind::UnsupportedInstance,
                        "the bisimilarity backend needs the JSL/Moore instance");
        inst_ = inst;

        bottom_rep_ = make_ffg_coalgebra(inst_, make_finset(std::vector<std::string>{}), {},
                                         "empty");
        auto cache = std::make_shared<BisimCache>();

        OpaqueOps ops;
        ops.name = "bisimilarity classes";
        ops.bottom = [rep = bottom_rep_, v = inst_.variety] {
            return bisim_class(rep, tbox(v, 0, {}));
        };
        ops.join = [](const Val& a, const Val& b) {
            if (!a.is(ValKind::BisimCls) || !b.is(ValKind::BisimCls))
                throw Error(ErrorKind::InvalidArgument, "join of non-class values");
            if (a.rep.get() == b.rep.get()) {
                return bisim_class(a.rep,
                                   free_algebra(a.rep->inst.variety, a.rep->gens)
                                       ->join(class_rep_elem(a), class_rep_elem(b)));
            }
            CoalgCoproduct cp = coproduct_coalg(a.rep, b.rep);
            Val ea = cp.map_left(class_rep_elem(a));
            Val eb = cp.map_right(class_rep_elem(b));
            return bisim_class(cp.coalg, cp.coalg->carrier()->join(ea, eb));
        };
        ops.equal = [cache](const Val& a, const Val& b) {
            if (!a.is(ValKind::BisimCls) || !b.is(ValKind::BisimCls)) return false;
            std::string key = val_key(a) + "~" + val_key(b);
            {
                std::lock_guard<std::mutex> lock(cache->mu);
                auto it = cache->decided.find(key);
                if (it != cache->decided.end()) return it->second;
            }
            bool eq = behavioral_equiv(a.rep, class_rep_elem(a), b.rep, class_rep_elem(b));
            {
                std::lock_guard<std::mutex> lock(cache->mu);
                if (cache->decided.size() < BisimCache::kCap) {
                    cache->decided.emplace(std::move(key), eq);
                    cache->pinned.push_back(a.rep);
                    cache->pinned.push_back(b.rep);
                }
            }
            return eq;
        };
        ops.contains = [](const Val& v) { return v.is(ValKind::BisimCls); };
        algebra_ = opaque_algebra(VarietyId::Jsl, std::move(ops));
    }

    Val class_of(const CoalgPtr& c, const Val& element) const override {
        if (!compatible_instances(c->inst, inst_))
            throw Error(ErrorKind::UnsupportedInstance, "coalgebra instance does not match backend");
        if (!c->carrier()->contains(element))
            throw Error(ErrorKind::InvalidArgument, "element is not in the carrier");
        return bisim_class(c, element);
    }

    std::string key_str(const Val& cls) const override {
        MaterializeOptions opts;
        opts.roots = {class_rep_elem(cls)};
        MinimizedMachine mm = minimize(materialize(*cls.rep, opts));
        return "minimized " + std::to_string(mm.machine.size()) + " states";
    }

    std::string name() const override { return "bisim"; }

private:
    CoalgPtr bottom_rep_;
};

}  // namespace

BackendPtr stream_backend() { return std::make_shared<StreamBackend>(); }

BackendPtr bisim_backend(Instance inst) { return std::make_shared<BisimBackend>(std::move(inst)); }

Val realize_rational(const Rational& r) {
    if (r.num < 0) throw Error(ErrorKind::InvalidArgument, "stream keys are nonnegative");
    const std::size_t b = static_cast<std::size_t>(r.den);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < b; ++i) names.push_back("c" + std::to_string(i));
    std::vector<Val> step;
    for (std::size_t i = 0; i < b; ++i) {
        std::uint64_t inc = (i == 0) ? static_cast<std::uint64_t>(r.num) : 0;
        step.push_back(node(0, {tbox(VarietyId::Unary, inc, {atom((i + 1) % b)})}));
    }
    CoalgPtr c = make_ffg_coalgebra(make_instance(VarietyId::Unary, id_shape()),
                                    make_finset(std::move(names)), std::move(step),
                                    "cycle" + r.str());
    return stream_class(r, c, free_eta(VarietyId::Unary, 0));
}

Val realize_rational_alt(const Rational& r) {
    if (r.num < 0) throw Error(ErrorKind::InvalidArgument, "stream keys are nonnegative");
    const std::size_t b = 2 * static_cast<std::size_t>(r.den);
    const std::uint64_t total = 2 * static_cast<std::uint64_t>(r.num);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < b; ++i) names.push_back("d" + std::to_string(i));
    std::vector<Val> step;
    for (std::size_t i = 0; i < b; ++i) {
        // spread the doubled total over the first and last cycle position
        std::uint64_t inc = 0;
        if (i == 0) inc = total / 2;
        if (i == b - 1) inc = total - total / 2;
        step.push_back(node(0, {tbox(VarietyId::Unary, inc, {atom((i + 1) % b)})}));
    }
    CoalgPtr c = make_ffg_coalgebra(make_instance(VarietyId::Unary, id_shape()),
                                    make_finset(std::move(names)), std::move(step),
                                    "cycle-alt" + r.str());
    return stream_class(r, c, free_eta(VarietyId::Unary, 0));
}

bool Language::member(const std::vector<std::uint32_t>& word) const {
    std::uint32_t s = initial;
    for (std::uint32_t a : word) {
        if (a >= machine.next[s].size())
            throw Error(ErrorKind::InvalidArgument, "word symbol out of range");
        s = machine.next[s][a];
    }
    return machine.label[s] == 1;
}

Language language_of(const BackendPtr& backend, const Val& cls) {
    const Instance& inst = backend->inst();
    if (!inst.shape.is_moore() || inst.shape.moore().outputs->size() != 2)
        throw Error(ErrorKind::UnsupportedInstance, "languages need Moore outputs {0,1}");
    if (!cls.is(ValKind::BisimCls))
        throw Error(ErrorKind::InvalidArgument, "language of a non-bisimilarity class");
    MaterializeOptions opts;
    opts.roots = {class_rep_elem(cls)};
    Machine m = materialize(*cls.rep, opts);
    MinimizedMachine mm = minimize(m);
    Language lang;
    lang.initial = mm.block_of[m.state_of(class_rep_elem(cls))];
    lang.machine = std::move(mm.machine);
    return lang;
}

}  // namespace elgot
