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

#include "elgot/elgot_algebra.hpp"

namespace elgot {

/// x0, x1, ... with the given prefix.
FinSetPtr var_set(const std::string& prefix, std::size_t n);

/// A small pool of backend classes (with representatives) for harness
/// parameters.
std::vector<Val> default_param_pool(const BackendPtr& backend);

/// All step values for equations X -> FX (+) P, where the parameter values
/// are drawn from the pool. Behavior values are enumerated within the
/// bounds.
std::vector<Val> enum_step_values(const Instance& inst, const AlgebraPtr& carrier,
                                  const AlgebraPtr& params, const std::vector<Val>& param_pool,
                                  const EnumBounds& bounds);

/// All equations over the variables with steps from the given choices,
/// capped. The cap cuts the cartesian product deterministically.
std::vector<FfgEquation> enum_equations(const Instance& inst, FinSetPtr vars, AlgebraPtr params,
                                        const std::vector<Val>& step_values, std::size_t cap);

/// Seeded random equation with steps drawn uniformly from the choices.
FfgEquation random_equation(Rng& rng, const Instance& inst, FinSetPtr vars, AlgebraPtr params,
                            const std::vector<Val>& step_values);

/// Seeded random homomorphism between free algebras: every generator maps
/// to a random element of the target within the bounds.
Hom random_free_hom(Rng& rng, const AlgebraPtr& free_src, const AlgebraPtr& free_dst,
                    const EnumBounds& bounds);

/// Both diagrams plus naturality for every shipped law, as one report.
HarnessReport builtin_laws_report(const LawBounds& bounds);

/// The three combinator laws on seeded random instances, exact pointwise
/// equality of the resulting systems. Runs per variety.
HarnessReport combinator_laws_report(std::size_t rounds_per_variety, std::uint64_t seed,
                                     std::size_t var_bound);

/// Random equations solved in the backend, every output checked against
/// the solution square.
HarnessReport solution_square_report(const BackendPtr& backend, std::size_t rounds,
                                     std::uint64_t seed, std::size_t var_bound);

}  // namespace elgot
