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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "elgot/base.hpp"

namespace elgot {

struct FfgCoalgebra;
using CoalgPtr = std::shared_ptr<const FfgCoalgebra>;

/// One immutable value type for every element the library manipulates:
/// generators, free-algebra elements, behavior-functor nodes, coproduct
/// elements, finite-carrier elements and fixed-point classes. Keeping a
/// single representation lets every operation below be written as "extend
/// a generator assignment homomorphically and push values through".
enum class ValKind : std::uint8_t {
    Atom,       ///< generator of a plain finite set (tag = index)
    Node,       ///< one behavior-functor layer: tag = label, kids = children
    TBox,       ///< one effect-monad layer: UNARY counter in tag, items in kids
    Pair,       ///< JSL coproduct element, kids = {left, right}
    Sum,        ///< SET/UNARY coproduct element, tag = 0 (left) / 1 (right)
    Fin,        ///< element of an explicit finite carrier (tag = index)
    StreamCls,  ///< stream-backend class: rational key + optional representative
    BisimCls,   ///< bisimilarity-backend class: representative only
};

struct Val {
    ValKind kind = ValKind::Atom;
    std::uint64_t tag = 0;
    Rational key;            // StreamCls only
    std::vector<Val> kids;   // see ValKind
    CoalgPtr rep;            // classes: representative coalgebra

    bool is(ValKind k) const { return kind == k; }
};

// -- constructors ----------------------------------------------------------

Val atom(std::uint64_t index);
Val node(std::uint64_t label, std::vector<Val> children);
/// Canonical monad layer. JSL: kids sorted and deduplicated, counter must
/// be zero. SET: exactly one kid. UNARY: exactly one kid plus a counter.
Val tbox(VarietyId v, std::uint64_t counter, std::vector<Val> items);
Val pair(Val left, Val right);
Val sum(bool right, Val payload);
Val fin(std::uint64_t index);
Val stream_class(Rational key, CoalgPtr rep_coalg, Val rep_elem);
Val stream_class_key_only(Rational key);
Val bisim_class(CoalgPtr rep_coalg, Val rep_elem);

/// Unit of the monad at a plain set: eta(x).
Val eta(VarietyId v, Val item);
/// Multiplication: flattens a TBox whose items are TBoxes.
Val mu(VarietyId v, const Val& tt);

/// Representative element of a class value.
const Val& class_rep_elem(const Val& v);

// -- structural operations --------------------------------------------------

/// Total order; StreamCls compares by key only, BisimCls by representative
/// identity (stable within a process, not across runs).
int val_cmp(const Val& a, const Val& b);
bool val_eq(const Val& a, const Val& b);
bool val_lt(const Val& a, const Val& b);

/// Canonical string encoding, usable as a hash-map key.
std::string val_key(const Val& v);

/// Rebuild a value with every Atom index replaced via fn (used for
/// coproduct injections of generator sets).
Val reindex_atoms(const Val& v, const std::function<std::uint64_t(std::uint64_t)>& fn);

/// Debug/plain printing; generator names resolved when gens is given.
std::string show(const Val& v, const FinSet* gens = nullptr);

}  // namespace elgot
