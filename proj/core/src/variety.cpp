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

#include "elgot/variety.hpp"

#include <algorithm>

namespace elgot {

Val Algebra::join(const Val&, const Val&) const {
    throw Error(ErrorKind::VarietyMismatch, describe() + " has no join");
}

Val Algebra::bottom() const {
    throw Error(ErrorKind::VarietyMismatch, describe() + " has no bottom");
}

Val Algebra::unary(const Val&) const {
    throw Error(ErrorKind::VarietyMismatch, describe() + " has no unary operation");
}

Val Algebra::alpha(const Val& tb) const {
    if (!tb.is(ValKind::TBox))
        throw Error(ErrorKind::InvalidArgument, "alpha expects one monad layer");
    switch (variety_) {
        case VarietyId::Set:
            return tb.kids.at(0);
        case VarietyId::Unary:
            return unary_pow(tb.kids.at(0), tb.tag);
        case VarietyId::Jsl: {
            Val acc = bottom();
            for (const Val& k : tb.kids) acc = join(acc, k);
            return acc;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "bad variety");
}

Val Algebra::unary_pow(Val a, std::uint64_t n) const {
    for (std::uint64_t i = 0; i < n; ++i) a = unary(a);
    return a;
}

namespace {

class FreeAlgebra final : public Algebra {
public:
    FreeAlgebra(VarietyId v, FinSetPtr gens) : Algebra(v), gens_(std::move(gens)) {}

    std::string describe() const override {
        return "free " + to_string(variety()) + " algebra on " + std::to_string(gens_->size()) +
               " generators";
    }

    Val join(const Val& a, const Val& b) const override {
        require_kind(a);
        require_kind(b);
        std::vector<Val> items = a.kids;
        items.insert(items.end(), b.kids.begin(), b.kids.end());
        return tbox(VarietyId::Jsl, 0, std::move(items));
    }

    Val bottom() const override {
        if (variety() != VarietyId::Jsl)
            throw Error(ErrorKind::VarietyMismatch, "bottom on non-JSL free algebra");
        return tbox(VarietyId::Jsl, 0, {});
    }

    Val unary(const Val& a) const override {
        if (variety() != VarietyId::Unary)
            throw Error(ErrorKind::VarietyMismatch, "unary on non-UNARY free algebra");
        require_kind(a);
        return tbox(VarietyId::Unary, a.tag + 1, {a.kids.at(0)});
    }

    bool contains(const Val& v) const override {
        if (!v.is(ValKind::TBox)) return false;
        if (variety() != VarietyId::Jsl && v.kids.size() != 1) return false;
        if (variety() != VarietyId::Unary && variety() != VarietyId::Jsl && v.tag != 0)
            return false;
        for (const Val& k : v.kids)
            if (!k.is(ValKind::Atom) || k.tag >= gens_->size()) return false;
        return true;
    }

    std::vector<Val> enumerate(const EnumBounds& bounds) const override {
        std::vector<Val> out;
        const std::size_t n = gens_->size();
        switch (variety()) {
            case VarietyId::Set:
                for (std::size_t i = 0; i < n; ++i) out.push_back(free_eta(variety(), i));
                break;
            case VarietyId::Unary: {
                if (!bounds.unary_counter)
                    throw Error(ErrorKind::NotEnumerable,
                                "UNARY free carrier is infinite; a counter bound is required");
                for (std::uint64_t c = 0; c <= *bounds.unary_counter; ++c)
                    for (std::size_t i = 0; i < n; ++i)
                        out.push_back(tbox(variety(), c, {atom(i)}));
                break;
            }
            case VarietyId::Jsl: {
                if (n > 20)
                    throw Error(ErrorKind::NotEnumerable, "JSL carrier too large to enumerate");
                for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                    std::vector<Val> items;
                    for (std::size_t i = 0; i < n; ++i)
                        if (mask & (1ull << i)) items.push_back(atom(i));
                    if (items.size() > bounds.subset_max) continue;
                    out.push_back(tbox(variety(), 0, std::move(items)));
                    if (out.size() > bounds.element_cap)
                        throw Error(ErrorKind::NotEnumerable, "enumeration exceeds element cap");
                }
                break;
            }
        }
        return out;
    }

    const FinSetPtr* free_gens() const override { return &gens_; }

private:
    void require_kind(const Val& v) const {
        if (!contains(v))
            throw Error(ErrorKind::InvalidArgument,
                        "value " + show(v) + " is not an element of " + describe());
    }

    FinSetPtr gens_;
};

class FiniteAlgebra final : public Algebra {
public:
    enum class Table { None, Join, Succ };

    FiniteAlgebra(VarietyId v, FinSetPtr elems, Table table,
                  std::vector<std::vector<std::uint32_t>> join_table,
                  std::vector<std::uint32_t> succ, std::uint32_t bottom_index)
        : Algebra(v), elems_(std::move(elems)), table_(table), join_(std::move(join_table)),
          succ_(std::move(succ)), bottom_(bottom_index) {
        validate();
    }

    std::string describe() const override {
        return "finite " + to_string(variety()) + " algebra (" + std::to_string(elems_->size()) +
               " elements)";
    }

    Val join(const Val& a, const Val& b) const override {
        if (table_ != Table::Join) return Algebra::join(a, b);
        return fin(join_.at(idx(a)).at(idx(b)));
    }

    Val bottom() const override {
        if (table_ != Table::Join) return Algebra::bottom();
        return fin(bottom_);
    }

    Val unary(const Val& a) const override {
        if (table_ != Table::Succ) return Algebra::unary(a);
        return fin(succ_.at(idx(a)));
    }

    bool contains(const Val& v) const override {
        return v.is(ValKind::Fin) && v.tag < elems_->size();
    }

    std::vector<Val> enumerate(const EnumBounds&) const override {
        std::vector<Val> out;
        for (std::size_t i = 0; i < elems_->size(); ++i) out.push_back(fin(i));
        return out;
    }

    const FinSet& elems() const { return *elems_; }

private:
    std::size_t idx(const Val& v) const {
        if (!contains(v))
            throw Error(ErrorKind::InvalidArgument, "value is not an element of " + describe());
        return static_cast<std::size_t>(v.tag);
    }

    void validate() const {
        const std::size_t n = elems_->size();
        if (table_ == Table::Join) {
            if (join_.size() != n)
                throw Error(ErrorKind::InvalidArgument, "join table has wrong size");
            for (const auto& row : join_)
                if (row.size() != n)
                    throw Error(ErrorKind::InvalidArgument, "join table has wrong size");
            for (std::size_t i = 0; i < n; ++i) {
                if (join_[i][i] != i)
                    throw Error(ErrorKind::InvalidArgument, "join not idempotent");
                if (join_[bottom_][i] != i || join_[i][bottom_] != i)
                    throw Error(ErrorKind::InvalidArgument, "bottom is not a join unit");
                for (std::size_t j = 0; j < n; ++j) {
                    if (join_[i][j] != join_[j][i])
                        throw Error(ErrorKind::InvalidArgument, "join not commutative");
                    for (std::size_t k = 0; k < n; ++k)
                        if (join_[join_[i][j]][k] != join_[i][join_[j][k]])
                            throw Error(ErrorKind::InvalidArgument, "join not associative");
                }
            }
        }
        if (table_ == Table::Succ) {
            if (succ_.size() != n)
                throw Error(ErrorKind::InvalidArgument, "successor table has wrong size");
            for (auto s : succ_)
                if (s >= n) throw Error(ErrorKind::InvalidArgument, "successor out of range");
        }
    }

    FinSetPtr elems_;
    Table table_;
    std::vector<std::vector<std::uint32_t>> join_;
    std::vector<std::uint32_t> succ_;
    std::uint32_t bottom_;
};

class OpaqueAlgebra final : public Algebra {
public:
    OpaqueAlgebra(VarietyId v, OpaqueOps ops) : Algebra(v), ops_(std::move(ops)) {}

    std::string describe() const override { return ops_.name; }

    Val join(const Val& a, const Val& b) const override {
        if (!ops_.join) return Algebra::join(a, b);
        return ops_.join(a, b);
    }

    Val bottom() const override {
        if (!ops_.bottom) return Algebra::bottom();
        return ops_.bottom();
    }

    Val unary(const Val& a) const override {
        if (!ops_.unary) return Algebra::unary(a);
        return ops_.unary(a);
    }

    bool equal(const Val& a, const Val& b) const override {
        if (!ops_.equal) return val_eq(a, b);
        return ops_.equal(a, b);
    }

    bool contains(const Val& v) const override {
        if (!ops_.contains) return true;
        return ops_.contains(v);
    }

    std::vector<Val> enumerate(const EnumBounds&) const override {
        throw Error(ErrorKind::NotEnumerable, describe() + " is not enumerable");
    }

private:
    OpaqueOps ops_;
};

class CoproductAlgebra final : public Algebra {
public:
    CoproductAlgebra(AlgebraPtr left, AlgebraPtr right)
        : Algebra(left->variety()), left_(std::move(left)), right_(std::move(right)) {}

    std::string describe() const override {
        return left_->describe() + " (+) " + right_->describe();
    }

    Val join(const Val& a, const Val& b) const override {
        check(a);
        check(b);
        return pair(left_->join(a.kids[0], b.kids[0]), right_->join(a.kids[1], b.kids[1]));
    }

    Val bottom() const override { return pair(left_->bottom(), right_->bottom()); }

    Val unary(const Val& a) const override {
        check(a);
        const Val& payload = a.kids[0];
        return sum(a.tag == 1,
                   a.tag == 0 ? left_->unary(payload) : right_->unary(payload));
    }

    bool equal(const Val& a, const Val& b) const override {
        if (variety() == VarietyId::Jsl) {
            if (!a.is(ValKind::Pair) || !b.is(ValKind::Pair)) return false;
            return left_->equal(a.kids[0], b.kids[0]) && right_->equal(a.kids[1], b.kids[1]);
        }
        if (!a.is(ValKind::Sum) || !b.is(ValKind::Sum) || a.tag != b.tag) return false;
        return a.tag == 0 ? left_->equal(a.kids[0], b.kids[0])
                          : right_->equal(a.kids[0], b.kids[0]);
    }

    bool contains(const Val& v) const override {
        if (variety() == VarietyId::Jsl)
            return v.is(ValKind::Pair) && left_->contains(v.kids[0]) &&
                   right_->contains(v.kids[1]);
        if (!v.is(ValKind::Sum)) return false;
        return v.tag == 0 ? left_->contains(v.kids[0]) : right_->contains(v.kids[0]);
    }

    std::vector<Val> enumerate(const EnumBounds& bounds) const override {
        std::vector<Val> out;
        auto ls = left_->enumerate(bounds);
        auto rs = right_->enumerate(bounds);
        if (variety() == VarietyId::Jsl) {
            for (const Val& l : ls)
                for (const Val& r : rs) out.push_back(pair(l, r));
        } else {
            for (const Val& l : ls) out.push_back(sum(false, l));
            for (const Val& r : rs) out.push_back(sum(true, r));
        }
        return out;
    }

    AlgebraPtr left_, right_;

private:
    void check(const Val& v) const {
        if (!contains(v))
            throw Error(ErrorKind::InvalidArgument,
                        "value " + show(v) + " is not an element of " + describe());
    }
};

}  // namespace

AlgebraPtr free_algebra(VarietyId variety, FinSetPtr gens) {
    return std::make_shared<FreeAlgebra>(variety, std::move(gens));
}

AlgebraPtr initial_algebra(VarietyId variety) {
    return free_algebra(variety, make_finset(std::vector<std::string>{}));
}

Val free_eta(VarietyId variety, std::uint64_t gen_index) {
    return eta(variety, atom(gen_index));
}

AlgebraPtr finite_jsl(FinSetPtr elems, std::vector<std::vector<std::uint32_t>> join_table,
                      std::uint32_t bottom_index) {
    return std::make_shared<FiniteAlgebra>(VarietyId::Jsl, std::move(elems),
                                           FiniteAlgebra::Table::Join, std::move(join_table),
                                           std::vector<std::uint32_t>{}, bottom_index);
}

AlgebraPtr finite_unary(FinSetPtr elems, std::vector<std::uint32_t> successor_table) {
    return std::make_shared<FiniteAlgebra>(VarietyId::Unary, std::move(elems),
                                           FiniteAlgebra::Table::Succ,
                                           std::vector<std::vector<std::uint32_t>>{},
                                           std::move(successor_table), 0);
}

AlgebraPtr finite_set(FinSetPtr elems) {
    return std::make_shared<FiniteAlgebra>(VarietyId::Set, std::move(elems),
                                           FiniteAlgebra::Table::None,
                                           std::vector<std::vector<std::uint32_t>>{},
                                           std::vector<std::uint32_t>{}, 0);
}

AlgebraPtr opaque_algebra(VarietyId variety, OpaqueOps ops) {
    return std::make_shared<OpaqueAlgebra>(variety, std::move(ops));
}

Val extend_apply(const Algebra& target, const std::vector<Val>& gen_images, const Val& t) {
    if (!t.is(ValKind::TBox))
        throw Error(ErrorKind::InvalidArgument, "extend_apply expects a free-algebra element");
    auto image = [&](const Val& item) -> const Val& {
        if (!item.is(ValKind::Atom) || item.tag >= gen_images.size())
            throw Error(ErrorKind::InvalidArgument, "free-algebra element over unknown generator");
        return gen_images[static_cast<std::size_t>(item.tag)];
    };
    switch (target.variety()) {
        case VarietyId::Set:
            return image(t.kids.at(0));
        case VarietyId::Unary:
            return target.unary_pow(image(t.kids.at(0)), t.tag);
        case VarietyId::Jsl: {
            Val acc = target.bottom();
            for (const Val& item : t.kids) acc = target.join(acc, image(item));
            return acc;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "bad variety");
}

Hom hom_id(AlgebraPtr a) {
    Hom h;
    h.src = a;
    h.dst = std::move(a);
    h.fn = [](const Val& v) { return v; };
    return h;
}

Hom hom_compose(const Hom& outer, const Hom& inner) {
    Hom h;
    h.src = inner.src;
    h.dst = outer.dst;
    auto f = outer.fn;
    auto g = inner.fn;
    h.fn = [f, g](const Val& v) { return f(g(v)); };
    return h;
}

Hom hom_from_gens(AlgebraPtr free_src, AlgebraPtr dst, std::vector<Val> gen_images) {
    if (free_src->variety() != dst->variety())
        throw Error(ErrorKind::VarietyMismatch, "homomorphism across varieties");
    const FinSetPtr* gens = free_src->free_gens();
    if (!gens)
        throw Error(ErrorKind::InvalidArgument, "hom_from_gens needs a free source algebra");
    if ((*gens)->size() != gen_images.size())
        throw Error(ErrorKind::InvalidArgument, "generator assignment has wrong arity");
    Hom h;
    h.src = std::move(free_src);
    h.dst = dst;
    h.fn = [dst, images = std::move(gen_images)](const Val& t) {
        return extend_apply(*dst, images, t);
    };
    return h;
}

HomCheck check_hom(const Hom& h, const EnumBounds& bounds) {
    HomCheck res;
    auto fail = [&](const std::string& d) {
        res.ok = false;
        res.detail = d;
        return res;
    };
    const auto elems = h.src->enumerate(bounds);
    switch (h.src->variety()) {
        case VarietyId::Set:
            break;
        case VarietyId::Unary:
            for (const Val& x : elems) {
                if (!h.dst->equal(h.fn(h.src->unary(x)), h.dst->unary(h.fn(x))))
                    return fail("does not commute with the unary operation at " + show(x));
            }
            break;
        case VarietyId::Jsl: {
            if (!h.dst->equal(h.fn(h.src->bottom()), h.dst->bottom()))
                return fail("does not preserve bottom");
            for (const Val& x : elems)
                for (const Val& y : elems) {
                    if (!h.dst->equal(h.fn(h.src->join(x, y)), h.dst->join(h.fn(x), h.fn(y))))
                        return fail("does not preserve join at " + show(x) + ", " + show(y));
                }
            break;
        }
    }
    return res;
}

Val Coproduct::inl(const Val& b) const {
    if (alg->variety() == VarietyId::Jsl) return pair(b, right->bottom());
    return sum(false, b);
}

Val Coproduct::inr(const Val& a) const {
    if (alg->variety() == VarietyId::Jsl) return pair(left->bottom(), a);
    return sum(true, a);
}

Coproduct coproduct(AlgebraPtr b, AlgebraPtr a) {
    if (b->variety() != a->variety())
        throw Error(ErrorKind::VarietyMismatch, "coproduct across varieties");
    Coproduct c;
    c.left = b;
    c.right = a;
    c.alg = std::make_shared<CoproductAlgebra>(std::move(b), std::move(a));
    return c;
}

Hom copair(const Coproduct& c, const Hom& f, const Hom& g) {
    if (f.dst.get() != g.dst.get() && f.dst->variety() != g.dst->variety())
        throw Error(ErrorKind::VarietyMismatch, "copairing into different targets");
    Hom h;
    h.src = c.alg;
    h.dst = f.dst;
    if (c.alg->variety() == VarietyId::Jsl) {
        auto dst = f.dst;
        auto ffn = f.fn;
        auto gfn = g.fn;
        h.fn = [dst, ffn, gfn](const Val& v) {
            if (!v.is(ValKind::Pair))
                throw Error(ErrorKind::InvalidArgument, "copair expects a coproduct element");
            return dst->join(ffn(v.kids[0]), gfn(v.kids[1]));
        };
    } else {
        auto ffn = f.fn;
        auto gfn = g.fn;
        h.fn = [ffn, gfn](const Val& v) {
            if (!v.is(ValKind::Sum))
                throw Error(ErrorKind::InvalidArgument, "copair expects a coproduct element");
            return v.tag == 0 ? ffn(v.kids[0]) : gfn(v.kids[0]);
        };
    }
    return h;
}

}  // namespace elgot
