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

#include <json.hpp>

#include "elgot/elgot_algebra.hpp"

namespace elgot {

using Json = nlohmann::json;

Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j);

/// Finite carriers only: elements plus operation tables.
Json algebra_to_json(const AlgebraPtr& a);
AlgebraPtr algebra_from_json(const Json& j);

/// Free-algebra elements: {"gen":"x"} / {"n":3,"gen":"x"} / {"set":[...]}.
Json free_elem_to_json(VarietyId v, const Val& t, const FinSet& gens);
Val free_elem_from_json(VarietyId v, const Json& j, const FinSet& gens);

Json coalg_to_json(const FfgCoalgebra& c);
CoalgPtr coalg_from_json(const Json& j);

/// Equations round-trip with parameter classes embedded as their
/// representative (coalgebra, element) pairs; the backend rebuilds them.
Json equation_to_json(const FfgEquation& e);
FfgEquation equation_from_json(const Json& j, const BackendPtr& backend);

Json report_to_json(const HarnessReport& r);

Json solution_to_json(const Solution& s, const BackendPtr& backend);

}  // namespace elgot
