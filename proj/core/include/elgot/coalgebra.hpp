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

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "elgot/functor.hpp"
#include "elgot/value.hpp"
#include "elgot/variety.hpp"

namespace elgot {

/// A coalgebra with free finitely generated carrier: the transition
/// structure is the unique homomorphic extension of `step`, which maps
/// each generator to a behavior value over the carrier. These are exactly
/// the machines produced by generalized determinization.
struct FfgCoalgebra {
    Instance inst;
    FinSetPtr gens;
    std::vector<Val> step;  // one behavior value per generator
    std::string name;

    // both caches are filled at construction; read-only afterwards
    AlgebraPtr carrier() const;  // the free algebra on gens
    AlgebraPtr bvals() const;    // behavior values over the carrier

private:
    friend CoalgPtr make_ffg_coalgebra(Instance, FinSetPtr, std::vector<Val>, std::string);
    mutable AlgebraPtr carrier_;
    mutable AlgebraPtr bvals_;
};

CoalgPtr make_ffg_coalgebra(Instance inst, FinSetPtr gens, std::vector<Val> step,
                            std::string name = "");

/// Generalized determinization: extends a generator map X -> F0(TX) (+) Y
/// to the homomorphism TX -> F(TX) (+) Y, i.e. wraps it as an
/// ffg-coalgebra. For the JSL/Moore instance this is the subset
/// construction on a nondeterministic automaton.
CoalgPtr determinize(const Instance& inst, FinSetPtr gens, std::vector<Val> step,
                     std::string name = "");

/// The extension of the step map, evaluated at a carrier element.
Val coalg_step_ext(const FfgCoalgebra& c, const Val& t);

/// A homomorphism of ffg-coalgebras, given on generators.
struct CoalgHom {
    CoalgPtr src;
    CoalgPtr dst;
    std::vector<Val> gen_map;  // per source generator: element of the target carrier
};

struct HomReport {
    bool ok = true;
    std::string detail;
    std::optional<std::size_t> witness;  // offending generator / element index
};

/// Checks the homomorphism square on all generators (sufficient by
/// freeness of the carrier).
HomReport is_coalg_hom(const CoalgHom& h);

/// Coproduct of two ffg-coalgebras on the disjoint union of generators.
struct CoalgCoproduct {
    CoalgPtr coalg;
    std::size_t left_size = 0;

    Val map_left(const Val& t) const;   // reindex a left carrier element
    Val map_right(const Val& t) const;  // reindex a right carrier element
    CoalgHom inj_left(const CoalgPtr& left) const;
    CoalgHom inj_right(const CoalgPtr& right) const;
};

CoalgCoproduct coproduct_coalg(const CoalgPtr& c, const CoalgPtr& d);

/// A coalgebra on an explicit (not necessarily free) carrier.
struct PlainCoalgebra {
    Instance inst;
    AlgebraPtr carrier;
    std::function<Val(const Val&)> step;
    std::string name;
};

HomReport is_plain_to_ffg_hom(const PlainCoalgebra& src, const FfgCoalgebra& dst,
                              const std::function<Val(const Val&)>& fn,
                              const EnumBounds& bounds = {});
HomReport is_ffg_to_plain_hom(const FfgCoalgebra& src, const PlainCoalgebra& dst,
                              const std::function<Val(const Val&)>& fn);

/// Transport of a coalgebra along a split quotient: given a coalgebra on a
/// carrier X that splits an ffg object W (retraction e: W ->> X, section
/// m: X >-> W with e.m = id), produces the ffg-coalgebra w = Fm.c.e on W.
/// Both m and e are then coalgebra homomorphisms, which this checks.
struct SplitQuotient {
    CoalgPtr ffg;                          // (W, w)
    std::function<Val(const Val&)> section;     // m, into the W carrier
    std::function<Val(const Val&)> retraction;  // e, out of the W carrier
};

SplitQuotient split_quotient_to_ffg(const PlainCoalgebra& c, const Hom& retraction,
                                    const Hom& section);

/// Completes a span of homomorphisms out of a split-quotient carrier to a
/// zig-zag through the transported ffg-coalgebra.
struct SpanZigzag {
    CoalgPtr mid;       // (W, w)
    CoalgHom leg_left;  // (W,w) -> (Y,d)
    CoalgHom leg_right; // (W,w) -> (Z,e)
};

SpanZigzag zigzag_from_span(const PlainCoalgebra& c, const Hom& retraction, const Hom& section,
                            const CoalgPtr& left_target,
                            const std::function<Val(const Val&)>& f,
                            const CoalgPtr& right_target,
                            const std::function<Val(const Val&)>& g);

/// A materialized finite machine: one row per reachable carrier element.
/// Successor counts may vary per state for polynomial shapes.
struct Machine {
    std::vector<Val> states;
    std::vector<std::uint32_t> label;              // functor label per state
    std::vector<std::string> param_key;            // canonical key of the parameter part
    std::vector<std::vector<std::uint32_t>> next;  // successor state ids
    std::unordered_map<std::string, std::uint32_t> index;

    std::uint32_t state_of(const Val& v) const;
    std::size_t size() const { return states.size(); }
};

struct MaterializeOptions {
    bool reachable_only = true;
    std::vector<Val> roots;          // carrier elements to start from
    std::size_t max_states = 1u << 14;
};

/// Materializes the carrier of a finite-carrier instance (JSL: the subset
/// machine; SET: the generators). UNARY carriers are infinite and reported
/// as such.
Machine materialize(const FfgCoalgebra& c, const MaterializeOptions& opts = {});

/// Partition refinement on a machine; returns the block id per state.
std::vector<std::uint32_t> partition_refine(const Machine& m);

/// The quotient machine on refinement blocks, with a state map.
struct MinimizedMachine {
    Machine machine;
    std::vector<std::uint32_t> block_of;  // original state -> minimized state
};
MinimizedMachine minimize(const Machine& m);

/// Behavioral equivalence of two states, decided by partition refinement
/// on the (coproduct) machine. Requires a finite carrier: JSL and SET
/// instances qualify, UNARY does not.
bool behavioral_equiv(const CoalgPtr& c1, const Val& s1, const CoalgPtr& c2, const Val& s2);

/// DOT rendering of a materialized machine.
std::string machine_dot(const Machine& m, const Instance& inst, const std::string& name);
/// DOT rendering of the generator-level transition graph.
std::string coalg_dot(const FfgCoalgebra& c);

}  // namespace elgot
