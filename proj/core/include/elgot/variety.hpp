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
#include <memory>
#include <string>
#include <vector>

#include "elgot/base.hpp"
#include "elgot/value.hpp"

namespace elgot {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An algebra for one of the three effect monads. Carriers come in four
/// flavours: free on a finite generator set, explicit finite carriers with
/// operation tables, carriers derived from other algebras (liftings,
/// coproducts), and the fixed-point backends. All values are immutable and
/// every operation is pure, so handles can be shared freely across threads.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    virtual ~Algebra() = default;

    VarietyId variety() const { return variety_; }
    virtual std::string describe() const = 0;

    /// JSL structure. Default implementations reject the call.
    virtual Val join(const Val& a, const Val& b) const;
    virtual Val bottom() const;
    /// UNARY structure.
    virtual Val unary(const Val& a) const;

    /// The Eilenberg-Moore structure map applied to one monad layer whose
    /// items are elements of this carrier.
    Val alpha(const Val& tb) const;
    /// unary() applied n times.
    Val unary_pow(Val a, std::uint64_t n) const;

    /// Element equality. Structural by default; fixed-point backends
    /// override this with their decision procedure.
    virtual bool equal(const Val& a, const Val& b) const { return val_eq(a, b); }

    virtual bool contains(const Val& v) const = 0;

    /// All elements within the bounds. Throws NotEnumerable for opaque
    /// carriers and for unbounded UNARY requests.
    virtual std::vector<Val> enumerate(const EnumBounds& bounds) const = 0;

    /// Generator set when this is a free algebra, else nullptr.
    virtual const FinSetPtr* free_gens() const { return nullptr; }

protected:
    explicit Algebra(VarietyId v) : variety_(v) {}

private:
    VarietyId variety_;
};

/// Free algebra TX on a finite generator set.
AlgebraPtr free_algebra(VarietyId variety, FinSetPtr gens);

/// The initial object: the free algebra on no generators.
AlgebraPtr initial_algebra(VarietyId variety);

/// eta into a free algebra: generator index -> element.
Val free_eta(VarietyId variety, std::uint64_t gen_index);

/// Explicit finite carriers. Construction validates the operation tables
/// against the variety's equations.
AlgebraPtr finite_jsl(FinSetPtr elems, std::vector<std::vector<std::uint32_t>> join_table,
                      std::uint32_t bottom_index);
AlgebraPtr finite_unary(FinSetPtr elems, std::vector<std::uint32_t> successor_table);
AlgebraPtr finite_set(FinSetPtr elems);

/// Opaque carrier driven by callbacks; used by the fixed-point backends.
struct OpaqueOps {
    std::function<Val(const Val&, const Val&)> join;  // JSL
    std::function<Val()> bottom;                      // JSL
    std::function<Val(const Val&)> unary;             // UNARY
    std::function<bool(const Val&, const Val&)> equal;
    std::function<bool(const Val&)> contains;
    std::string name;
};
AlgebraPtr opaque_algebra(VarietyId variety, OpaqueOps ops);

/// Homomorphic extension: the unique homomorphism TX -> A determined by a
/// generator assignment. `gen_images[i]` is the image of generator i.
Val extend_apply(const Algebra& target, const std::vector<Val>& gen_images, const Val& t);

/// A homomorphism between algebras, with enough data to validate it.
struct Hom {
    AlgebraPtr src;
    AlgebraPtr dst;
    std::function<Val(const Val&)> fn;
};

Hom hom_id(AlgebraPtr a);
Hom hom_compose(const Hom& outer, const Hom& inner);
/// The extension of a generator assignment, as a Hom.
Hom hom_from_gens(AlgebraPtr free_src, AlgebraPtr dst, std::vector<Val> gen_images);

struct HomCheck {
    bool ok = true;
    std::string detail;
};
/// Checks the homomorphism equations pointwise on the enumerated carrier.
HomCheck check_hom(const Hom& h, const EnumBounds& bounds);

/// Coproduct B (+) A with injections. JSL represents it as the product
/// carrier with componentwise join; SET and UNARY as a tagged union.
struct Coproduct {
    AlgebraPtr alg;
    AlgebraPtr left;
    AlgebraPtr right;
    Val inl(const Val& b) const;
    Val inr(const Val& a) const;
};

Coproduct coproduct(AlgebraPtr b, AlgebraPtr a);

/// Copairing [f,g]: B (+) A -> C of two homomorphisms into the same target.
Hom copair(const Coproduct& c, const Hom& f, const Hom& g);

}  // namespace elgot
