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

#include "elgot/phi.hpp"

namespace elgot {

/// A recursive equation system e: X -> FX (+) A over a free finitely
/// generated variable object X, with parameters in an arbitrary algebra A.
/// Each step is a coproduct element of (behavior values over the variable
/// carrier) (+) A.
struct FfgEquation {
    Instance inst;
    FinSetPtr vars;
    AlgebraPtr params;
    std::vector<Val> step;

    AlgebraPtr carrier() const;       // free algebra on vars (cached)
    AlgebraPtr step_algebra() const;  // FX (+) A as an algebra (cached)

private:
    mutable AlgebraPtr carrier_;
    mutable AlgebraPtr step_alg_;
};

FfgEquation make_equation(Instance inst, FinSetPtr vars, AlgebraPtr params,
                          std::vector<Val> step);

/// Step constructors.
Val eq_step_behavior(const FfgEquation& e, Val bval);
Val eq_step_param(const FfgEquation& e, Val a);
/// Convenience: build a step value against instance data before the
/// equation exists.
Val eq_inl(const Instance& inst, const AlgebraPtr& carrier, const AlgebraPtr& params, Val bval);
Val eq_inr(const Instance& inst, const AlgebraPtr& carrier, const AlgebraPtr& params, Val a);

/// Structural equality of equations (same variables, same parameter
/// algebra, identical steps).
bool equation_eq(const FfgEquation& a, const FfgEquation& b);

/// Two algebra handles denote the same object (pointer-equal, or both free
/// on the same generator names).
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Re-parameterization h . e: pushes every parameter value through the
/// homomorphism h: A -> B.
FfgEquation aft(const Hom& h, const FfgEquation& e);

/// Sequential combination e [] f on variables X+Y: parameters of e, which
/// live in the free algebra on f's variables, are expanded through f's
/// homomorphic extension.
FfgEquation box(const FfgEquation& e, const FfgEquation& f);

/// The effectful frontend: a raw system X0 -> T(F0 X0 + A), i.e. one
/// monad layer of (functor node | parameter) items per variable, is turned
/// into an equation by splitting the layer and applying the distributive
/// law on the left and the algebra structure of A on the right.
FfgEquation from_effectful(const Instance& inst, FinSetPtr vars, AlgebraPtr params,
                           const std::vector<Val>& raw);

/// An item of a raw effectful system.
Val eff_next(Val fnode);
Val eff_param(Val a);

/// A coalgebra reread as the equation i_A . c with parameters in A (no
/// parameter value is ever hit).
FfgEquation coalg_as_equation(const CoalgPtr& c, AlgebraPtr params);

/// A parameter-free equation (parameters in the initial object) reread as
/// an ffg-coalgebra.
CoalgPtr equation_as_coalg(const FfgEquation& e, std::string name = "");

/// A solution: an assignment of parameter values to variables whose
/// homomorphic extension closes the equation square.
struct Solution {
    FfgEquation equation;
    std::vector<Val> assignment;  // one value per variable

    /// The extension of the assignment at any carrier element.
    Val at(const Val& carrier_elem) const;
};

/// Solves an equation whose parameters are backend classes: factorizes the
/// parameters through the coproduct of their representative coalgebras,
/// combines with that coalgebra, and reads the solution off the colimit
/// injection. The choice of representatives does not affect the result.
Solution solve_in_phi(const BackendPtr& backend, const FfgEquation& e);

}  // namespace elgot
