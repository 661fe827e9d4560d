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

#include "elgot/equation.hpp"

namespace elgot {

/// An algebra with a solution operator: a carrier, a structure map on
/// behavior values, and a solver assigning to every equation a solution.
/// The two solution-operator axioms are semantic, so they are enforced by
/// the harness below rather than by construction.
struct ElgotAlgebra {
    std::string name;
    Instance inst;
    AlgebraPtr carrier;
    std::function<Val(const Val&)> structure;  // behavior value over carrier -> carrier
    std::function<Solution(const FfgEquation&)> solver;
};

/// Validates that the structure map is a homomorphism from the lifted
/// algebra of behavior values to the carrier, on the given sample of
/// carrier elements.
HomCheck check_structure_hom(const ElgotAlgebra& alg, const std::vector<Val>& carrier_pool);

/// The defining square of a solution, checked pointwise on the variables.
bool check_solution(const ElgotAlgebra& alg, const FfgEquation& e, const Solution& s);

/// The fixed-point backend as an Elgot algebra: structure inverts the
/// colimit coalgebra structure, solving is by factorization.
ElgotAlgebra backend_elgot(const BackendPtr& backend);

/// A finite pointed poset with a monotone structure map, over the SET
/// variety; solved by least-fixed-point iteration.
struct PointedPosetAlgebra {
    AlgebraPtr carrier;                        // finite SET carrier
    std::vector<std::vector<bool>> leq;        // partial order on carrier indices
    std::uint32_t bottom = 0;
    Shape shape;
    std::function<Val(const Val&)> structure;  // monotone on behavior values

    bool less_eq(const Val& a, const Val& b) const;
};

PointedPosetAlgebra make_poset_algebra(AlgebraPtr carrier, std::vector<std::vector<bool>> leq,
                                       std::uint32_t bottom, Shape shape,
                                       std::function<Val(const Val&)> structure);

/// Iterates the equation's one-step operator from the constant-bottom
/// assignment until stabilization; at most |carrier| * |vars| rounds are
/// needed. Detects non-monotone structure maps along the way.
Solution kleene_solve(const PointedPosetAlgebra& poset, const FfgEquation& e);

/// The poset as an Elgot algebra (solver = kleene_solve).
ElgotAlgebra poset_elgot(const PointedPosetAlgebra& poset);

/// Passage (1): an algebra for F plus a morphism h: Y -> A (Y free) gives
/// an algebra for F(-) (+) Y, with structure [a, h]. Solving collapses the
/// Y summand through h first.
ElgotAlgebra passage_to_param(const ElgotAlgebra& alg, const Hom& h);

/// Passage (2): an algebra for F(-) (+) Y gives one for F by embedding
/// equations with the Y summand never hit.
ElgotAlgebra passage_from_param(const ElgotAlgebra& alg);

/// The underlying equation transforms, exposed for round-trip checks.
FfgEquation collapse_param(const Instance& parametrized, const Hom& h, const FfgEquation& e);
FfgEquation embed_param(const Instance& parametrized, const FfgEquation& e);

/// The unique solution-preserving map out of the backend into any Elgot
/// algebra of the same instance: a class represented by (C,c) at z maps to
/// the solution of c, read as an equation into A, evaluated at z.
std::function<Val(const Val&)> initial_morphism(const BackendPtr& backend,
                                                const ElgotAlgebra& target);

/// The unit of the free solution space on a free object Y: the class of
/// the one-generator coalgebra stepping immediately into the parameter.
/// Only the parametrized bisimilarity backend realizes this.
Val free_unit(const BackendPtr& backend, const Val& y);

/// Axiom harness ------------------------------------------------------------

struct HarnessBounds {
    std::size_t max_vars = 2;       // generators of the variable objects
    std::size_t max_params = 1;     // generators of the middle object Z
    std::uint64_t max_counter = 2;  // UNARY counters in enumerated values
    std::size_t subset_max = static_cast<std::size_t>(-1);
    std::size_t max_instances = static_cast<std::size_t>(-1);
};

struct HarnessReport {
    std::string axiom;
    std::size_t instances = 0;
    std::vector<std::string> failures;
    std::uint64_t seed = 0;

    bool ok() const { return failures.empty(); }
};

/// Solutions commute with coalgebra homomorphisms between equation
/// systems, for every re-parameterization from the pool.
HarnessReport check_weak_functoriality(const ElgotAlgebra& alg, const HarnessBounds& bounds,
                                       const std::vector<Val>& param_pool);

/// Solving in stages agrees with solving the combined system.
HarnessReport check_compositionality(const ElgotAlgebra& alg, const HarnessBounds& bounds,
                                     const std::vector<Val>& param_pool);

}  // namespace elgot
