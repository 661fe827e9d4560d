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

#include "elgot/serialize.hpp"

namespace elgot {

namespace {

std::string variety_tag(VarietyId v) {
    switch (v) {
        case VarietyId::Set: return "SET";
        case VarietyId::Unary: return "UNARY";
        case VarietyId::Jsl: return "JSL";
    }
    return "?";
}

VarietyId variety_from_tag(const std::string& s) { return variety_from_string(s); }

}  // namespace

Json shape_to_json(const Shape& s) {
    if (s.is_id()) return Json{{"id", true}};
    if (s.is_poly()) {
        Json ops = Json::array();
        for (const auto& [sym, ar] : s.poly().ops) ops.push_back(Json::array({sym, ar}));
        return Json{{"poly", ops}};
    }
    const MooreShape& m = s.moore();
    return Json{{"moore", Json{{"outputs", m.outputs->names}, {"alphabet", m.alphabet->names()}}}};
}

Shape shape_from_json(const Json& j) {
    if (j.contains("id")) return id_shape();
    if (j.contains("poly")) {
        std::vector<std::pair<std::string, std::uint32_t>> ops;
        for (const auto& op : j.at("poly"))
            ops.emplace_back(op.at(0).get<std::string>(), op.at(1).get<std::uint32_t>());
        return poly_shape(std::move(ops));
    }
    const Json& m = j.at("moore");
    std::vector<std::string> outs = m.at("outputs").get<std::vector<std::string>>();
    LabelSetPtr labels = (outs == std::vector<std::string>{"0", "1"})
                             ? bool_labels()
                             : plain_labels(std::move(outs));
    return moore_shape(labels,
                       make_finset(m.at("alphabet").get<std::vector<std::string>>()));
}

Json algebra_to_json(const AlgebraPtr& a) {
    std::vector<Val> elems = a->enumerate({});
    Json names = Json::array();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!elems[i].is(ValKind::Fin))
            throw Error(ErrorKind::InvalidArgument, "only finite carriers serialize");
        names.push_back("e" + std::to_string(i));
    }
    Json out{{"variety", variety_tag(a->variety())}, {"elements", names}};
    if (a->variety() == VarietyId::Jsl) {
        Json triples = Json::array();
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t k = 0; k < elems.size(); ++k) {
                Val r = a->join(elems[i], elems[k]);
                triples.push_back(Json::array({i, k, r.tag}));
            }
        out["join"] = triples;
        out["bottom"] = a->bottom().tag;
    }
    if (a->variety() == VarietyId::Unary) {
        Json succ = Json::array();
        for (const Val& e : elems) succ.push_back(a->unary(e).tag);
        out["succ"] = succ;
    }
    return out;
}

AlgebraPtr algebra_from_json(const Json& j) {
    VarietyId v = variety_from_tag(j.at("variety").get<std::string>());
    std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
    FinSetPtr elems = make_finset(names);
    const std::size_t n = names.size();
    switch (v) {
        case VarietyId::Set:
            return finite_set(elems);
        case VarietyId::Unary: {
            std::vector<std::uint32_t> succ = j.at("succ").get<std::vector<std::uint32_t>>();
            return finite_unary(elems, std::move(succ));
        }
        case VarietyId::Jsl: {
            std::vector<std::vector<std::uint32_t>> table(
                n, std::vector<std::uint32_t>(n, 0));
            for (const auto& t : j.at("join"))
                table.at(t.at(0).get<std::size_t>()).at(t.at(1).get<std::size_t>()) =
                    t.at(2).get<std::uint32_t>();
            return finite_jsl(elems, std::move(table), j.at("bottom").get<std::uint32_t>());
        }
    }
    throw Error(ErrorKind::InvalidArgument, "bad variety tag");
}

Json free_elem_to_json(VarietyId v, const Val& t, const FinSet& gens) {
    switch (v) {
        case VarietyId::Set:
            return Json{{"gen", gens.name(static_cast<std::size_t>(t.kids.at(0).tag))}};
        case VarietyId::Unary:
            return Json{{"n", t.tag},
                        {"gen", gens.name(static_cast<std::size_t>(t.kids.at(0).tag))}};
        case VarietyId::Jsl: {
            Json items = Json::array();
            for (const Val& k : t.kids)
                items.push_back(gens.name(static_cast<std::size_t>(k.tag)));
            return Json{{"set", items}};
        }
    }
    throw Error(ErrorKind::InvalidArgument, "bad variety");
}

Val free_elem_from_json(VarietyId v, const Json& j, const FinSet& gens) {
    auto index = [&gens](const std::string& name) -> std::uint64_t {
        std::size_t i = gens.index_of(name);
        if (i == FinSet::npos)
            throw Error(ErrorKind::InvalidArgument, "unknown generator " + name);
        return i;
    };
    switch (v) {
        case VarietyId::Set:
            return eta(v, atom(index(j.at("gen").get<std::string>())));
        case VarietyId::Unary:
            return tbox(v, j.at("n").get<std::uint64_t>(),
                        {atom(index(j.at("gen").get<std::string>()))});
        case VarietyId::Jsl: {
            std::vector<Val> items;
            for (const auto& name : j.at("set"))
                items.push_back(atom(index(name.get<std::string>())));
            return tbox(v, 0, std::move(items));
        }
    }
    throw Error(ErrorKind::InvalidArgument, "bad variety");
}

namespace {

Json fnode_to_json(const Instance& inst, const Val& n, const FinSet& gens) {
    if (inst.shape.is_id())
        return Json{{"next", free_elem_to_json(inst.variety, n.kids.at(0), gens)}};
    if (inst.shape.is_moore()) {
        const MooreShape& m = inst.shape.moore();
        Json next = Json::object();
        for (std::size_t s = 0; s < m.alphabet->size(); ++s)
            next[m.alphabet->name(s)] = free_elem_to_json(inst.variety, n.kids.at(s), gens);
        return Json{{"out", m.outputs->names.at(static_cast<std::size_t>(n.tag))},
                    {"next", next}};
    }
    const PolyShape& p = inst.shape.poly();
    Json args = Json::array();
    for (const Val& k : n.kids) args.push_back(free_elem_to_json(inst.variety, k, gens));
    return Json{{"op", p.ops.at(static_cast<std::size_t>(n.tag)).first}, {"args", args}};
}

Val fnode_from_json(const Instance& inst, const Json& j, const FinSet& gens) {
    if (inst.shape.is_id())
        return node(0, {free_elem_from_json(inst.variety, j.at("next"), gens)});
    if (inst.shape.is_moore()) {
        const MooreShape& m = inst.shape.moore();
        std::string out = j.at("out").get<std::string>();
        std::size_t label = 0;
        for (; label < m.outputs->size(); ++label)
            if (m.outputs->names[label] == out) break;
        if (label == m.outputs->size())
            throw Error(ErrorKind::InvalidArgument, "unknown output " + out);
        std::vector<Val> kids;
        for (std::size_t s = 0; s < m.alphabet->size(); ++s)
            kids.push_back(
                free_elem_from_json(inst.variety, j.at("next").at(m.alphabet->name(s)), gens));
        return node(label, std::move(kids));
    }
    const PolyShape& p = inst.shape.poly();
    std::string op = j.at("op").get<std::string>();
    std::size_t label = 0;
    for (; label < p.ops.size(); ++label)
        if (p.ops[label].first == op) break;
    if (label == p.ops.size()) throw Error(ErrorKind::InvalidArgument, "unknown op " + op);
    std::vector<Val> kids;
    for (const auto& a : j.at("args"))
        kids.push_back(free_elem_from_json(inst.variety, a, gens));
    return node(label, std::move(kids));
}

Json bval_to_json(const Instance& inst, const Val& b, const FinSet& gens) {
    if (!inst.has_param()) return fnode_to_json(inst, b, gens);
    const FinSetPtr* ygens = inst.param->free_gens();
    if (!ygens)
        throw Error(ErrorKind::InvalidArgument, "only free parameter objects serialize");
    if (inst.variety == VarietyId::Jsl)
        return Json{{"node", fnode_to_json(inst, b.kids.at(0), gens)},
                    {"y", free_elem_to_json(inst.variety, b.kids.at(1), **ygens)}};
    if (b.tag == 0) return Json{{"inl", fnode_to_json(inst, b.kids.at(0), gens)}};
    return Json{{"inr", free_elem_to_json(inst.variety, b.kids.at(0), **ygens)}};
}

Val bval_from_json(const Instance& inst, const Json& j, const FinSet& gens) {
    if (!inst.has_param()) return fnode_from_json(inst, j, gens);
    const FinSetPtr* ygens = inst.param->free_gens();
    if (!ygens)
        throw Error(ErrorKind::InvalidArgument, "only free parameter objects deserialize");
    if (inst.variety == VarietyId::Jsl)
        return pair(fnode_from_json(inst, j.at("node"), gens),
                    free_elem_from_json(inst.variety, j.at("y"), **ygens));
    if (j.contains("inl")) return sum(false, fnode_from_json(inst, j.at("inl"), gens));
    return sum(true, free_elem_from_json(inst.variety, j.at("inr"), **ygens));
}

}  // namespace

Json coalg_to_json(const FfgCoalgebra& c) {
    Json steps = Json::array();
    for (const Val& s : c.step) steps.push_back(bval_to_json(c.inst, s, *c.gens));
    Json out{{"variety", variety_tag(c.inst.variety)},
             {"shape", shape_to_json(c.inst.shape)},
             {"gens", c.gens->names()},
             {"steps", steps},
             {"name", c.name}};
    if (c.inst.has_param()) {
        const FinSetPtr* ygens = c.inst.param->free_gens();
        if (!ygens)
            throw Error(ErrorKind::InvalidArgument, "only free parameter objects serialize");
        out["param"] = (*ygens)->names();
    }
    return out;
}

CoalgPtr coalg_from_json(const Json& j) {
    VarietyId v = variety_from_tag(j.at("variety").get<std::string>());
    Shape shape = shape_from_json(j.at("shape"));
    Instance inst = make_instance(v, shape);
    if (j.contains("param"))
        inst = with_param(inst,
                          free_algebra(v, make_finset(j.at("param").get<std::vector<std::string>>())));
    FinSetPtr gens = make_finset(j.at("gens").get<std::vector<std::string>>());
    std::vector<Val> steps;
    for (const auto& s : j.at("steps")) steps.push_back(bval_from_json(inst, s, *gens));
    return make_ffg_coalgebra(inst, gens, std::move(steps),
                              j.value("name", std::string()));
}

namespace {

Json class_to_json(const Val& cls) {
    Json out = Json::object();
    if (cls.is(ValKind::StreamCls)) {
        out["key"] = cls.key.str();
        if (cls.rep) {
            out["rep"] = coalg_to_json(*cls.rep);
            out["at"] = free_elem_to_json(cls.rep->inst.variety, class_rep_elem(cls),
                                          *cls.rep->gens);
        }
        return out;
    }
    if (cls.is(ValKind::BisimCls)) {
        out["rep"] = coalg_to_json(*cls.rep);
        out["at"] =
            free_elem_to_json(cls.rep->inst.variety, class_rep_elem(cls), *cls.rep->gens);
        return out;
    }
    throw Error(ErrorKind::InvalidArgument, "parameter is not a class value");
}

Val class_from_json(const Json& j, const BackendPtr& backend) {
    if (!j.contains("rep")) {
        if (!j.contains("key"))
            throw Error(ErrorKind::InvalidArgument, "class without representative or key");
        // key-only stream class
        std::string key = j.at("key").get<std::string>();
        auto slash = key.find('/');
        return stream_class_key_only(Rational(std::stoll(key.substr(0, slash)),
                                              std::stoll(key.substr(slash + 1))));
    }
    CoalgPtr rep = coalg_from_json(j.at("rep"));
    Val at = free_elem_from_json(rep->inst.variety, j.at("at"), *rep->gens);
    return backend->class_of(rep, at);
}

}  // namespace

Json equation_to_json(const FfgEquation& e) {
    Json steps = Json::array();
    for (const Val& s : e.step) {
        Json entry = Json::object();
        if (e.inst.variety == VarietyId::Jsl) {
            entry["b"] = bval_to_json(e.inst, s.kids.at(0), *e.vars);
            entry["p"] = class_to_json(s.kids.at(1));
        } else if (s.tag == 0) {
            entry["b"] = bval_to_json(e.inst, s.kids.at(0), *e.vars);
        } else {
            entry["p"] = class_to_json(s.kids.at(0));
        }
        steps.push_back(entry);
    }
    Json out{{"variety", variety_tag(e.inst.variety)},
             {"shape", shape_to_json(e.inst.shape)},
             {"vars", e.vars->names()},
             {"steps", steps}};
    if (e.inst.has_param()) {
        const FinSetPtr* ygens = e.inst.param->free_gens();
        if (!ygens)
            throw Error(ErrorKind::InvalidArgument, "only free parameter objects serialize");
        out["param"] = (*ygens)->names();
    }
    return out;
}

FfgEquation equation_from_json(const Json& j, const BackendPtr& backend) {
    VarietyId v = variety_from_tag(j.at("variety").get<std::string>());
    Shape shape = shape_from_json(j.at("shape"));
    Instance inst = make_instance(v, shape);
    if (j.contains("param"))
        inst = with_param(inst,
                          free_algebra(v, make_finset(j.at("param").get<std::vector<std::string>>())));
    if (!compatible_instances(inst, backend->inst()) &&
        !(v == backend->inst().variety && shape_eq(shape, backend->inst().shape)))
        throw Error(ErrorKind::UnsupportedInstance, "equation instance does not match backend");
    FinSetPtr vars = make_finset(j.at("vars").get<std::vector<std::string>>());
    AlgebraPtr carrier = free_algebra(v, vars);
    AlgebraPtr params = backend->algebra();
    Coproduct target = coproduct(bnode_algebra(inst, carrier), params);

    std::vector<Val> steps;
    for (const auto& s : j.at("steps")) {
        if (v == VarietyId::Jsl) {
            Val b = s.contains("b") ? bval_from_json(inst, s.at("b"), *vars)
                                    : bnode_algebra(inst, carrier)->bottom();
            Val p = s.contains("p") ? class_from_json(s.at("p"), backend) : params->bottom();
            steps.push_back(pair(std::move(b), std::move(p)));
        } else if (s.contains("b")) {
            steps.push_back(target.inl(bval_from_json(inst, s.at("b"), *vars)));
        } else {
            steps.push_back(target.inr(class_from_json(s.at("p"), backend)));
        }
    }
    return make_equation(inst, vars, params, std::move(steps));
}

Json report_to_json(const HarnessReport& r) {
    return Json{{"axiom", r.axiom},
                {"instances", r.instances},
                {"failures", r.failures},
                {"seed", r.seed}};
}

Json solution_to_json(const Solution& s, const BackendPtr& backend) {
    Json vars = Json::object();
    for (std::size_t i = 0; i < s.equation.vars->size(); ++i)
        vars[s.equation.vars->name(i)] = backend->key_str(s.assignment[i]);
    return Json{{"solution", vars}};
}

}  // namespace elgot
