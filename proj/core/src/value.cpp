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

#include "elgot/value.hpp"

#include <algorithm>
#include <sstream>

namespace elgot {

Val atom(std::uint64_t index) {
    Val v;
    v.kind = ValKind::Atom;
    v.tag = index;
    return v;
}

Val node(std::uint64_t label, std::vector<Val> children) {
    Val v;
    v.kind = ValKind::Node;
    v.tag = label;
    v.kids = std::move(children);
    return v;
}

Val tbox(VarietyId variety, std::uint64_t counter, std::vector<Val> items) {
    Val v;
    v.kind = ValKind::TBox;
    switch (variety) {
        case VarietyId::Set:
            if (items.size() != 1 || counter != 0)
                throw Error(ErrorKind::InvalidArgument, "SET monad layer needs exactly one item");
            break;
        case VarietyId::Unary:
            if (items.size() != 1)
                throw Error(ErrorKind::InvalidArgument, "UNARY monad layer needs exactly one item");
            v.tag = counter;
            break;
        case VarietyId::Jsl: {
            if (counter != 0)
                throw Error(ErrorKind::InvalidArgument, "JSL monad layer carries no counter");
            std::sort(items.begin(), items.end(), val_lt);
            items.erase(std::unique(items.begin(), items.end(), val_eq), items.end());
            break;
        }
    }
    v.kids = std::move(items);
    return v;
}

Val pair(Val left, Val right) {
    Val v;
    v.kind = ValKind::Pair;
    v.kids.push_back(std::move(left));
    v.kids.push_back(std::move(right));
    return v;
}

Val sum(bool right, Val payload) {
    Val v;
    v.kind = ValKind::Sum;
    v.tag = right ? 1 : 0;
    v.kids.push_back(std::move(payload));
    return v;
}

Val fin(std::uint64_t index) {
    Val v;
    v.kind = ValKind::Fin;
    v.tag = index;
    return v;
}

Val stream_class(Rational key, CoalgPtr rep_coalg, Val rep_elem) {
    Val v;
    v.kind = ValKind::StreamCls;
    v.key = key;
    v.rep = std::move(rep_coalg);
    v.kids.push_back(std::move(rep_elem));
    return v;
}

Val stream_class_key_only(Rational key) {
    Val v;
    v.kind = ValKind::StreamCls;
    v.key = key;
    return v;
}

Val bisim_class(CoalgPtr rep_coalg, Val rep_elem) {
    Val v;
    v.kind = ValKind::BisimCls;
    v.rep = std::move(rep_coalg);
    v.kids.push_back(std::move(rep_elem));
    return v;
}

Val eta(VarietyId v, Val item) { return tbox(v, 0, {std::move(item)}); }

Val mu(VarietyId variety, const Val& tt) {
    if (!tt.is(ValKind::TBox))
        throw Error(ErrorKind::InvalidArgument, "mu expects a monad layer");
    switch (variety) {
        case VarietyId::Set:
            return tt.kids.at(0);
        case VarietyId::Unary: {
            const Val& inner = tt.kids.at(0);
            if (!inner.is(ValKind::TBox))
                throw Error(ErrorKind::InvalidArgument, "mu expects nested monad layers");
            return tbox(variety, tt.tag + inner.tag, {inner.kids.at(0)});
        }
        case VarietyId::Jsl: {
            std::vector<Val> items;
            for (const Val& inner : tt.kids) {
                if (!inner.is(ValKind::TBox))
                    throw Error(ErrorKind::InvalidArgument, "mu expects nested monad layers");
                for (const Val& k : inner.kids) items.push_back(k);
            }
            return tbox(variety, 0, std::move(items));
        }
    }
    throw Error(ErrorKind::InvalidArgument, "bad variety");
}

const Val& class_rep_elem(const Val& v) {
    if ((v.kind != ValKind::StreamCls && v.kind != ValKind::BisimCls) || v.kids.empty())
        throw Error(ErrorKind::InvalidArgument, "class value has no representative");
    return v.kids.front();
}

int val_cmp(const Val& a, const Val& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
        case ValKind::StreamCls: {
            // Key is the whole identity; representatives do not participate.
            if (a.key.num != b.key.num) return a.key.num < b.key.num ? -1 : 1;
            if (a.key.den != b.key.den) return a.key.den < b.key.den ? -1 : 1;
            return 0;
        }
        case ValKind::BisimCls: {
            if (a.rep.get() != b.rep.get()) return a.rep.get() < b.rep.get() ? -1 : 1;
            return val_cmp(a.kids.at(0), b.kids.at(0));
        }
        default:
            break;
    }
    if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
    if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.kids.size(); ++i) {
        int c = val_cmp(a.kids[i], b.kids[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool val_eq(const Val& a, const Val& b) { return val_cmp(a, b) == 0; }
bool val_lt(const Val& a, const Val& b) { return val_cmp(a, b) < 0; }

static void key_rec(const Val& v, std::string& out) {
    switch (v.kind) {
        case ValKind::Atom: out += 'g'; break;
        case ValKind::Node: out += 'n'; break;
        case ValKind::TBox: out += 't'; break;
        case ValKind::Pair: out += 'p'; break;
        case ValKind::Sum: out += 's'; break;
        case ValKind::Fin: out += 'f'; break;
        case ValKind::StreamCls:
            out += 'r';
            out += std::to_string(v.key.num) + "/" + std::to_string(v.key.den);
            return;
        case ValKind::BisimCls: {
            std::ostringstream os;
            os << 'b' << static_cast<const void*>(v.rep.get()) << ':';
            out += os.str();
            key_rec(v.kids.at(0), out);
            return;
        }
    }
    out += std::to_string(v.tag);
    out += '(';
    for (std::size_t i = 0; i < v.kids.size(); ++i) {
        if (i) out += ',';
        key_rec(v.kids[i], out);
    }
    out += ')';
}

std::string val_key(const Val& v) {
    std::string out;
    key_rec(v, out);
    return out;
}

Val reindex_atoms(const Val& v, const std::function<std::uint64_t(std::uint64_t)>& fn) {
    Val out = v;
    if (v.kind == ValKind::Atom) {
        out.tag = fn(v.tag);
        return out;
    }
    if (v.kind == ValKind::StreamCls || v.kind == ValKind::BisimCls) return out;
    for (auto& k : out.kids) k = reindex_atoms(k, fn);
    if (v.kind == ValKind::TBox) {
        // re-canonicalize: renaming may reorder a JSL set
        std::sort(out.kids.begin(), out.kids.end(), val_lt);
        out.kids.erase(std::unique(out.kids.begin(), out.kids.end(), val_eq), out.kids.end());
    }
    return out;
}

std::string show(const Val& v, const FinSet* gens) {
    std::ostringstream os;
    switch (v.kind) {
        case ValKind::Atom:
            if (gens && v.tag < gens->size())
                os << gens->name(static_cast<std::size_t>(v.tag));
            else
                os << "#" << v.tag;
            break;
        case ValKind::Node: {
            os << "F" << v.tag << "[";
            for (std::size_t i = 0; i < v.kids.size(); ++i) {
                if (i) os << ";";
                os << show(v.kids[i], gens);
            }
            os << "]";
            break;
        }
        case ValKind::TBox: {
            if (v.kids.size() == 1 && v.tag == 0 && v.kids[0].is(ValKind::Atom)) {
                os << show(v.kids[0], gens);
            } else if (v.kids.size() == 1) {
                os << "(" << v.tag << "," << show(v.kids[0], gens) << ")";
            } else {
                os << "{";
                for (std::size_t i = 0; i < v.kids.size(); ++i) {
                    if (i) os << ",";
                    os << show(v.kids[i], gens);
                }
                os << "}";
            }
            break;
        }
        case ValKind::Pair:
            os << "<" << show(v.kids[0], gens) << "|" << show(v.kids[1], gens) << ">";
            break;
        case ValKind::Sum:
            os << (v.tag ? "inr " : "inl ") << show(v.kids[0], gens);
            break;
        case ValKind::Fin:
            os << "e" << v.tag;
            break;
        case ValKind::StreamCls:
            os << "cls " << v.key.str();
            break;
        case ValKind::BisimCls:
            os << "cls[" << static_cast<const void*>(v.rep.get()) << " @ "
               << show(v.kids.at(0)) << "]";
            break;
    }
    return os.str();
}

}  // namespace elgot
