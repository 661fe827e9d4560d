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

#include "elgot/functor.hpp"

#include <algorithm>

namespace elgot {

std::uint32_t LabelSet::joined(std::uint32_t a, std::uint32_t b) const {
    if (!is_jsl())
        throw Error(ErrorKind::UnsupportedInstance, "label set is not a join-semilattice");
    return join.at(a).at(b);
}

LabelSetPtr bool_labels() {
    static LabelSetPtr labels = [] {
        auto ls = std::make_shared<LabelSet>();
        ls->names = {"0", "1"};
        ls->join = {{0, 1}, {1, 1}};
        ls->bottom = 0;
        return LabelSetPtr(ls);
    }();
    return labels;
}

LabelSetPtr plain_labels(std::vector<std::string> names) {
    auto ls = std::make_shared<LabelSet>();
    ls->names = std::move(names);
    return ls;
}

LabelSetPtr jsl_labels(std::vector<std::string> names,
                       std::vector<std::vector<std::uint32_t>> join, std::uint32_t bottom) {
    auto ls = std::make_shared<LabelSet>();
    ls->names = std::move(names);
    ls->join = std::move(join);
    ls->bottom = bottom;
    const std::size_t n = ls->names.size();
    if (ls->join.size() != n)
        throw Error(ErrorKind::InvalidArgument, "label join table has wrong size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (ls->join[i][j] >= n)
                throw Error(ErrorKind::InvalidArgument, "label join out of range");
            if (ls->join[i][j] != ls->join[j][i])
                throw Error(ErrorKind::InvalidArgument, "label join not commutative");
        }
    return ls;
}

std::size_t Shape::label_count() const {
    if (is_moore()) return moore().outputs->size();
    if (is_poly()) return poly().ops.size();
    return 1;
}

std::size_t Shape::arity(std::uint64_t label) const {
    if (is_moore()) return moore().alphabet->size();
    if (is_poly()) return poly().ops.at(static_cast<std::size_t>(label)).second;
    return 1;
}

Val Shape::make_node(std::uint64_t label, std::vector<Val> children) const {
    if (label >= label_count())
        throw Error(ErrorKind::InvalidArgument, "node label out of range");
    if (children.size() != arity(label))
        throw Error(ErrorKind::InvalidArgument, "node has wrong arity");
    return node(label, std::move(children));
}

std::string Shape::str() const {
    if (is_moore())
        return "moore(" + std::to_string(moore().outputs->size()) + " outputs, |Sigma|=" +
               std::to_string(moore().alphabet->size()) + ")";
    if (is_poly()) return "poly(" + std::to_string(poly().ops.size()) + " ops)";
    return "id";
}

Shape moore_shape(LabelSetPtr outputs, FinSetPtr alphabet) {
    Shape s;
    s.v = MooreShape{std::move(outputs), std::move(alphabet)};
    return s;
}

Shape poly_shape(std::vector<std::pair<std::string, std::uint32_t>> ops) {
    Shape s;
    s.v = PolyShape{std::move(ops)};
    return s;
}

Shape id_shape() {
    Shape s;
    s.v = IdShape{};
    return s;
}

bool shape_eq(const Shape& a, const Shape& b) {
    if (a.v.index() != b.v.index()) return false;
    if (a.is_id()) return true;
    if (a.is_poly()) return a.poly().ops == b.poly().ops;
    const auto& ma = a.moore();
    const auto& mb = b.moore();
    return ma.outputs->names == mb.outputs->names && ma.outputs->join == mb.outputs->join &&
           ma.alphabet->names() == mb.alphabet->names();
}

Val DistLaw::apply(const Val& monad_layer_of_nodes) const {
    return apply_fn(shape, monad_layer_of_nodes);
}

DistLaw builtin_law(VarietyId variety, const Shape& shape) {
    if (variety == VarietyId::Unary && shape.is_poly())
        throw Error(ErrorKind::UnsupportedInstance, "no shipped UNARY law for polynomial shapes");
    if (variety == VarietyId::Jsl) {
        if (!shape.is_moore())
            throw Error(ErrorKind::UnsupportedInstance, "the JSL law needs a Moore shape");
        if (!shape.moore().outputs->is_jsl())
            throw Error(ErrorKind::UnsupportedInstance,
                        "the JSL law needs a join-semilattice label set");
    }

    DistLaw law;
    law.variety = variety;
    law.shape = shape;
    switch (variety) {
        case VarietyId::Set:
            law.name = "set/identity";
            law.apply_fn = [](const Shape&, const Val& t) {
                if (!t.is(ValKind::TBox) || t.kids.size() != 1)
                    throw Error(ErrorKind::InvalidArgument, "law expects one SET monad layer");
                const Val& n = t.kids[0];
                std::vector<Val> kids;
                kids.reserve(n.kids.size());
                for (const Val& k : n.kids) kids.push_back(tbox(VarietyId::Set, 0, {k}));
                return node(n.tag, std::move(kids));
            };
            break;
        case VarietyId::Unary:
            law.name = "unary/push-counter";
            law.apply_fn = [](const Shape&, const Val& t) {
                if (!t.is(ValKind::TBox) || t.kids.size() != 1)
                    throw Error(ErrorKind::InvalidArgument, "law expects one UNARY monad layer");
                const Val& n = t.kids[0];
                std::vector<Val> kids;
                kids.reserve(n.kids.size());
                for (const Val& k : n.kids) kids.push_back(tbox(VarietyId::Unary, t.tag, {k}));
                return node(n.tag, std::move(kids));
            };
            break;
        case VarietyId::Jsl:
            law.name = "jsl/subset-construction";
            law.apply_fn = [](const Shape& sh, const Val& t) {
                if (!t.is(ValKind::TBox))
                    throw Error(ErrorKind::InvalidArgument, "law expects one JSL monad layer");
                const LabelSet& out = *sh.moore().outputs;
                const std::size_t width = sh.arity(0);
                std::uint32_t label = out.bottom;
                std::vector<std::vector<Val>> collected(width);
                for (const Val& n : t.kids) {
                    if (!n.is(ValKind::Node) || n.kids.size() != width)
                        throw Error(ErrorKind::InvalidArgument, "malformed node in monad layer");
                    label = out.joined(label, static_cast<std::uint32_t>(n.tag));
                    for (std::size_t s = 0; s < width; ++s) collected[s].push_back(n.kids[s]);
                }
                std::vector<Val> kids;
                kids.reserve(width);
                for (std::size_t s = 0; s < width; ++s)
                    kids.push_back(tbox(VarietyId::Jsl, 0, std::move(collected[s])));
                return node(label, std::move(kids));
            };
            break;
    }
    return law;
}

std::vector<Val> enum_nodes(const Shape& shape, const std::vector<Val>& children) {
    std::vector<Val> out;
    for (std::uint64_t label = 0; label < shape.label_count(); ++label) {
        const std::size_t width = shape.arity(label);
        std::vector<std::size_t> pick(width, 0);
        if (width == 0) {
            out.push_back(node(label, {}));
            continue;
        }
        if (children.empty()) continue;
        for (;;) {
            std::vector<Val> kids;
            kids.reserve(width);
            for (std::size_t i = 0; i < width; ++i) kids.push_back(children[pick[i]]);
            out.push_back(node(label, std::move(kids)));
            std::size_t pos = 0;
            while (pos < width && ++pick[pos] == children.size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos == width) break;
        }
    }
    return out;
}

std::vector<Val> enum_tlayer(VarietyId v, const std::vector<Val>& items,
                             std::uint64_t max_counter, std::size_t max_subset) {
    std::vector<Val> out;
    switch (v) {
        case VarietyId::Set:
            for (const Val& it : items) out.push_back(tbox(v, 0, {it}));
            break;
        case VarietyId::Unary:
            for (std::uint64_t c = 0; c <= max_counter; ++c)
                for (const Val& it : items) out.push_back(tbox(v, c, {it}));
            break;
        case VarietyId::Jsl: {
            // subsets of the pool up to the size bound
            std::vector<std::size_t> pick;
            std::function<void(std::size_t)> rec = [&](std::size_t start) {
                std::vector<Val> sel;
                for (std::size_t i : pick) sel.push_back(items[i]);
                out.push_back(tbox(v, 0, std::move(sel)));
                if (pick.size() == max_subset) return;
                for (std::size_t i = start; i < items.size(); ++i) {
                    pick.push_back(i);
                    rec(i + 1);
                    pick.pop_back();
                }
            };
            rec(0);
            break;
        }
    }
    return out;
}

namespace {

std::vector<Val> atom_pool(std::size_t n) {
    std::vector<Val> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(atom(i));
    return out;
}

// F0(eta): wraps every child of a node in a fresh monad layer.
Val fnode_eta(VarietyId v, const Val& n) {
    std::vector<Val> kids;
    kids.reserve(n.kids.size());
    for (const Val& k : n.kids) kids.push_back(eta(v, k));
    return node(n.tag, std::move(kids));
}

// F0(mu): flattens the doubled monad layer in every child of a node.
Val fnode_mu(VarietyId v, const Val& n) {
    std::vector<Val> kids;
    kids.reserve(n.kids.size());
    for (const Val& k : n.kids) kids.push_back(mu(v, k));
    return node(n.tag, std::move(kids));
}

// T(lambda): applies the law to every item of a monad layer.
Val tmap_law(const DistLaw& law, const Val& t) {
    std::vector<Val> items;
    items.reserve(t.kids.size());
    for (const Val& it : t.kids) items.push_back(law.apply(it));
    return tbox(law.variety, t.tag, std::move(items));
}

}  // namespace

LawReport check_dist_law(const DistLaw& law, const LawBounds& bounds) {
    LawReport rep;
    for (std::size_t ng = 0; ng <= bounds.max_gens; ++ng) {
        const auto atoms = atom_pool(ng);
        const auto nodes = enum_nodes(law.shape, atoms);

        // unit diagram: law . eta == F0(eta)
        for (const Val& n : nodes) {
            ++rep.checked;
            Val lhs = law.apply(eta(law.variety, n));
            Val rhs = fnode_eta(law.variety, n);
            if (!val_eq(lhs, rhs)) {
                rep.ok = false;
                rep.axiom = "unit";
                rep.counterexample = "input " + show(n) + ": law.eta = " + show(lhs) +
                                     " but F0(eta) = " + show(rhs);
                return rep;
            }
        }

        // multiplication diagram: law . mu == F0(mu) . law . T(law)
        const auto tnodes = enum_tlayer(law.variety, nodes, bounds.max_counter, bounds.max_subset);
        const auto ttnodes =
            enum_tlayer(law.variety, tnodes, bounds.max_counter, bounds.max_subset);
        for (const Val& tt : ttnodes) {
            ++rep.checked;
            Val lhs = law.apply(mu(law.variety, tt));
            Val rhs = fnode_mu(law.variety, law.apply(tmap_law(law, tt)));
            if (!val_eq(lhs, rhs)) {
                rep.ok = false;
                rep.axiom = "multiplication";
                rep.counterexample = "input " + show(tt) + ": law.mu = " + show(lhs) +
                                     " but F0(mu).law.T(law) = " + show(rhs);
                return rep;
            }
        }
    }
    return rep;
}

LawReport check_law_naturality(const DistLaw& law, const LawBounds& bounds) {
    LawReport rep;
    const std::size_t nx = bounds.max_gens;
    const std::size_t ny = bounds.max_gens;
    const auto atoms_x = atom_pool(nx);
    const auto nodes = enum_nodes(law.shape, atoms_x);
    const auto tnodes = enum_tlayer(law.variety, nodes, bounds.max_counter, bounds.max_subset);
    if (nx == 0 || ny == 0) return rep;

    // all functions f: X -> Y
    std::vector<std::size_t> f(nx, 0);
    for (;;) {
        auto rename = [&f](std::uint64_t i) { return static_cast<std::uint64_t>(f.at(i)); };
        for (const Val& t : tnodes) {
            ++rep.checked;
            Val lhs = reindex_atoms(law.apply(t), rename);   // F0(Tf) . law
            Val rhs = law.apply(reindex_atoms(t, rename));   // law . T(F0 f)
            if (!val_eq(lhs, rhs)) {
                rep.ok = false;
                rep.axiom = "naturality";
                rep.counterexample = "input " + show(t);
                return rep;
            }
        }
        std::size_t pos = 0;
        while (pos < nx && ++f[pos] == ny) {
            f[pos] = 0;
            ++pos;
        }
        if (pos == nx) break;
    }
    return rep;
}

namespace {

class LiftedAlgebra final : public Algebra {
public:
    LiftedAlgebra(DistLaw law, AlgebraPtr base)
        : Algebra(base->variety()), law_(std::move(law)), base_(std::move(base)) {
        if (law_.variety != variety())
            throw Error(ErrorKind::VarietyMismatch, "law and carrier variety differ");
    }

    std::string describe() const override {
        return "lifted " + law_.shape.str() + " over " + base_->describe();
    }

    // F0(alpha) . lambda applied to one monad layer of nodes.
    Val structure(const Val& t_of_nodes) const {
        Val n = law_.apply(t_of_nodes);
        for (Val& k : n.kids) k = base_->alpha(k);
        return n;
    }

    Val join(const Val& a, const Val& b) const override {
        if (variety() != VarietyId::Jsl) return Algebra::join(a, b);
        return structure(tbox(VarietyId::Jsl, 0, {a, b}));
    }

    Val bottom() const override {
        if (variety() != VarietyId::Jsl) return Algebra::bottom();
        return structure(tbox(VarietyId::Jsl, 0, {}));
    }

    Val unary(const Val& a) const override {
        if (variety() != VarietyId::Unary) return Algebra::unary(a);
        return structure(tbox(VarietyId::Unary, 1, {a}));
    }

    bool equal(const Val& a, const Val& b) const override {
        if (!a.is(ValKind::Node) || !b.is(ValKind::Node)) return false;
        if (a.tag != b.tag || a.kids.size() != b.kids.size()) return false;
        for (std::size_t i = 0; i < a.kids.size(); ++i)
            if (!base_->equal(a.kids[i], b.kids[i])) return false;
        return true;
    }

    bool contains(const Val& v) const override {
        if (!v.is(ValKind::Node) || v.tag >= law_.shape.label_count()) return false;
        if (v.kids.size() != law_.shape.arity(v.tag)) return false;
        for (const Val& k : v.kids)
            if (!base_->contains(k)) return false;
        return true;
    }

    std::vector<Val> enumerate(const EnumBounds& bounds) const override {
        return enum_nodes(law_.shape, base_->enumerate(bounds));
    }

private:
    DistLaw law_;
    AlgebraPtr base_;
};

}  // namespace

AlgebraPtr lift_apply(const DistLaw& law, AlgebraPtr base) {
    return std::make_shared<LiftedAlgebra>(law, std::move(base));
}

Instance make_instance(VarietyId variety, Shape shape) {
    DistLaw law = builtin_law(variety, shape);
    return make_instance(variety, std::move(shape), std::move(law));
}

Instance make_instance(VarietyId variety, Shape shape, DistLaw law) {
    if (law.variety != variety)
        throw Error(ErrorKind::VarietyMismatch, "law does not match the variety");
    if (!shape_eq(law.shape, shape))
        throw Error(ErrorKind::VarietyMismatch, "law does not match the shape");
    Instance inst;
    inst.variety = variety;
    inst.shape = std::move(shape);
    inst.law = std::move(law);
    return inst;
}

Instance with_param(Instance inst, AlgebraPtr param) {
    if (param && param->variety() != inst.variety)
        throw Error(ErrorKind::VarietyMismatch, "parameter object in a different variety");
    inst.param = std::move(param);
    return inst;
}

bool compatible_instances(const Instance& a, const Instance& b) {
    return a.variety == b.variety && shape_eq(a.shape, b.shape) &&
           a.param.get() == b.param.get();
}

AlgebraPtr bnode_algebra(const Instance& inst, AlgebraPtr carrier) {
    AlgebraPtr lifted = lift_apply(inst.law, std::move(carrier));
    if (!inst.has_param()) return lifted;
    return coproduct(std::move(lifted), inst.param).alg;
}

Val bval_from_node(const Instance& inst, const AlgebraPtr& carrier, Val fnode) {
    if (!inst.has_param()) return fnode;
    if (inst.variety == VarietyId::Jsl) return pair(std::move(fnode), inst.param->bottom());
    (void)carrier;
    return sum(false, std::move(fnode));
}

Val bval_from_param(const Instance& inst, const AlgebraPtr& carrier, Val y) {
    if (!inst.has_param())
        throw Error(ErrorKind::UnsupportedInstance, "instance has no parameter object");
    if (inst.variety == VarietyId::Jsl) {
        AlgebraPtr lifted = lift_apply(inst.law, carrier);
        return pair(lifted->bottom(), std::move(y));
    }
    return sum(true, std::move(y));
}

Val bval_map(const Instance& inst, const Val& bval, const std::function<Val(const Val&)>& fn) {
    auto map_node = [&fn](const Val& n) {
        Val out = n;
        for (Val& k : out.kids) k = fn(k);
        return out;
    };
    if (!inst.has_param()) return map_node(bval);
    if (inst.variety == VarietyId::Jsl) {
        if (!bval.is(ValKind::Pair))
            throw Error(ErrorKind::InvalidArgument, "expected a parametrized behavior value");
        return pair(map_node(bval.kids[0]), bval.kids[1]);
    }
    if (!bval.is(ValKind::Sum))
        throw Error(ErrorKind::InvalidArgument, "expected a parametrized behavior value");
    if (bval.tag == 1) return bval;
    return sum(false, map_node(bval.kids[0]));
}

}  // namespace elgot
