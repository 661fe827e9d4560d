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

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "elgot/base.hpp"
#include "elgot/value.hpp"
#include "elgot/variety.hpp"

namespace elgot {

/// Finite label set with decidable equality. A join table (plus bottom)
/// turns it into a finite join-semilattice, which the JSL determinization
/// law requires of Moore outputs.
struct LabelSet {
    std::vector<std::string> names;
    std::vector<std::vector<std::uint32_t>> join;  // empty when not a semilattice
    std::uint32_t bottom = 0;

    bool is_jsl() const { return !join.empty(); }
    std::size_t size() const { return names.size(); }
    std::uint32_t joined(std::uint32_t a, std::uint32_t b) const;
};

using LabelSetPtr = std::shared_ptr<const LabelSet>;

/// The two-element semilattice {0,1} with max as join.
LabelSetPtr bool_labels();
LabelSetPtr plain_labels(std::vector<std::string> names);
LabelSetPtr jsl_labels(std::vector<std::string> names,
                       std::vector<std::vector<std::uint32_t>> join, std::uint32_t bottom);

/// Behavior functor shapes on sets: Moore machines O x X^Sigma, polynomial
/// functors from a signature, and the identity functor (its own kind so the
/// stream instance reads naturally).
struct MooreShape {
    LabelSetPtr outputs;
    FinSetPtr alphabet;
};
struct PolyShape {
    std::vector<std::pair<std::string, std::uint32_t>> ops;  // (symbol, arity)
};
struct IdShape {};

struct Shape {
    std::variant<MooreShape, PolyShape, IdShape> v;

    bool is_moore() const { return std::holds_alternative<MooreShape>(v); }
    bool is_poly() const { return std::holds_alternative<PolyShape>(v); }
    bool is_id() const { return std::holds_alternative<IdShape>(v); }
    const MooreShape& moore() const { return std::get<MooreShape>(v); }
    const PolyShape& poly() const { return std::get<PolyShape>(v); }

    std::size_t label_count() const;
    std::size_t arity(std::uint64_t label) const;
    /// A node with this label and children; validates label and arity.
    Val make_node(std::uint64_t label, std::vector<Val> children) const;
    std::string str() const;
};

Shape moore_shape(LabelSetPtr outputs, FinSetPtr alphabet);
Shape poly_shape(std::vector<std::pair<std::string, std::uint32_t>> ops);
Shape id_shape();
bool shape_eq(const Shape& a, const Shape& b);

/// A distributive law of the effect monad over the functor shape: a map
/// T(F0 W) -> F0(T W), generic in the child values W. Wrong laws are
/// caught by check_dist_law rather than by construction.
struct DistLaw {
    VarietyId variety;
    Shape shape;
    std::string name;
    std::function<Val(const Shape&, const Val&)> apply_fn;

    Val apply(const Val& monad_layer_of_nodes) const;
};

/// The shipped laws: SET with any shape (identity law), UNARY with Moore
/// or Id (counter pushed into the children), JSL with Moore over a
/// semilattice label set (the subset construction).
DistLaw builtin_law(VarietyId variety, const Shape& shape);

struct LawBounds {
    std::size_t max_gens = 2;
    std::uint64_t max_counter = 2;
    std::size_t max_subset = 2;  // size bound per JSL monad layer
};

struct LawReport {
    bool ok = true;
    std::size_t checked = 0;
    std::string axiom;       // which diagram failed
    std::string counterexample;
};

/// Evaluates the unit and multiplication diagrams of the law pointwise on
/// all inputs within the bounds (monad layers are enumerated up to the
/// stated subset size / counter). Failure is a report, not an error.
LawReport check_dist_law(const DistLaw& law, const LawBounds& bounds);

/// Naturality of the law on all functions between atom sets within the
/// bounds.
LawReport check_law_naturality(const DistLaw& law, const LawBounds& bounds);

/// The lifting applied to an algebra: carrier F0(A) with structure
/// F0(alpha) . lambda. For JSL/Moore this is the pointwise semilattice on
/// rows, for UNARY the operation pushed into the children.
AlgebraPtr lift_apply(const DistLaw& law, AlgebraPtr base);

/// An instance bundles the effect monad, the behavior shape, the law, and
/// an optional parameter object Y, giving the parametrized functor
/// F(-) (+) Y used for free solution spaces.
struct Instance {
    VarietyId variety;
    Shape shape;
    DistLaw law;
    AlgebraPtr param;  // nullptr for plain F

    bool has_param() const { return param != nullptr; }
};

Instance make_instance(VarietyId variety, Shape shape);
Instance make_instance(VarietyId variety, Shape shape, DistLaw law);
Instance with_param(Instance inst, AlgebraPtr param);
bool compatible_instances(const Instance& a, const Instance& b);

/// Algebra of behavior values over a carrier: F0(carrier) lifted, then
/// coproducted with the parameter object when one is present.
AlgebraPtr bnode_algebra(const Instance& inst, AlgebraPtr carrier);

/// Behavior value constructors: embed a functor node / a parameter value.
Val bval_from_node(const Instance& inst, const AlgebraPtr& carrier, Val fnode);
Val bval_from_param(const Instance& inst, const AlgebraPtr& carrier, Val y);

/// Applies fn to the functor children of a behavior value; the parameter
/// part is left untouched.
Val bval_map(const Instance& inst, const Val& bval, const std::function<Val(const Val&)>& fn);

/// Enumerates plain functor nodes over the given child pool.
std::vector<Val> enum_nodes(const Shape& shape, const std::vector<Val>& children);

/// Enumerates one monad layer over the given item pool.
std::vector<Val> enum_tlayer(VarietyId v, const std::vector<Val>& items,
                             std::uint64_t max_counter, std::size_t max_subset);

}  // namespace elgot
