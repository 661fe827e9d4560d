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

#include <map>

#include "elgot/elgot_algebra.hpp"

namespace elgot {

/// A parsed input file: instance header, named coalgebras, parameter
/// bindings (backend classes) and equations. The grammar is documented in
/// docs/dsl.md.
struct Workspace {
    Instance inst;
    BackendPtr backend;  // null when no backend line is present
    std::map<std::string, CoalgPtr> coalgebras;
    std::map<std::string, Val> params;
    std::map<std::string, FfgEquation> equations;

    const CoalgPtr& coalg(const std::string& name) const;
    const FfgEquation& equation(const std::string& name) const;
};

Workspace parse_workspace(const std::string& text);

/// A state reference "C:{p,q}" or "C:(2,x)" or "C:x" against a workspace.
struct StateRef {
    CoalgPtr coalg;
    Val element;
};
StateRef parse_state_ref(const Workspace& ws, const std::string& text);

/// Renders a carrier element in the DSL's element syntax.
std::string element_str(VarietyId v, const Val& t, const FinSet& gens);

}  // namespace elgot
