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

#include <mutex>
#include <optional>
#include <unordered_map>

#include "elgot/coalgebra.hpp"

namespace elgot {

/// An eventually periodic stream of naturals, prefix . period^omega.
/// Kept in canonical form: the period is primitive (not a power of a
/// shorter word) and the prefix carries no trailing chunk of the cycle.
/// Normalization preserves the denoted infinite stream.
struct EpStream {
    std::vector<std::uint64_t> prefix;
    std::vector<std::uint64_t> period;  // nonempty

    /// Arithmetic mean of the period, as an exact rational.
    Rational mean() const;
    /// First n values of the denoted stream.
    std::vector<std::uint64_t> take(std::size_t n) const;
    /// Literal form, e.g. "(1,2,7,4)(1,3,2)^w".
    std::string str() const;

    bool operator==(const EpStream& o) const { return prefix == o.prefix && period == o.period; }
};

/// Builds the canonical form; the period must be nonempty.
EpStream make_epstream(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period);

/// Parses the literal form.
EpStream parse_epstream(const std::string& text);

/// Stream equivalence: equal period means. Independent of the chosen
/// representation.
bool ep_equiv(const EpStream& s, const EpStream& t);

/// The stream generated by a state (m,x) of a UNARY/Id coalgebra: the
/// sequence of counter increments along the orbit of x. Cycle detection
/// on the generator component bounds the simulation by the carrier size.
EpStream stream_of(const FfgCoalgebra& c, const Val& state);

/// A zig-zag witnessing that two states are merged in the colimit: a
/// middle coalgebra with homomorphisms onto both sides connecting the
/// states. Exists precisely when the generated streams are equivalent.
struct ZigzagWitness {
    CoalgPtr mid;
    Val mid_state;        // maps to the queried states under the two legs
    CoalgHom to_left;
    CoalgHom to_right;
};

std::optional<ZigzagWitness> zigzag_witness(const CoalgPtr& cx, const Val& sx,
                                            const CoalgPtr& cy, const Val& sy);

/// A backend realizing the colimit of all ffg-coalgebras of one instance:
/// it decides class equality and produces classes from states. Classes
/// keep a representative (coalgebra, element) pair so equation solving can
/// factorize through them.
class PhiBackend : public std::enable_shared_from_this<PhiBackend> {
public:
    virtual ~PhiBackend() = default;

    const Instance& inst() const { return inst_; }
    /// The colimit carrier as an algebra handle (opaque; equality is the
    /// backend's decision procedure).
    const AlgebraPtr& algebra() const { return algebra_; }

    virtual Val class_of(const CoalgPtr& c, const Val& element) const = 0;
    bool equal(const Val& a, const Val& b) const { return algebra_->equal(a, b); }
    virtual std::string key_str(const Val& cls) const = 0;
    virtual std::string name() const = 0;

protected:
    Instance inst_;
    AlgebraPtr algebra_;
};

using BackendPtr = std::shared_ptr<const PhiBackend>;

/// The stream backend: UNARY effects, identity shape. Classes are keyed
/// by the period mean of the generated stream.
BackendPtr stream_backend();

/// The bisimilarity backend for locally finite instances (JSL carriers),
/// optionally for the parametrized functor F(-) (+) Y. Class equality is
/// behavioral equivalence of representatives.
BackendPtr bisim_backend(Instance inst);

/// Realizes a reduced rational a/b as a stream-backend class: a cycle
/// coalgebra with b generators emitting a in total.
Val realize_rational(const Rational& r);

/// Alternative realization of the same class (different representative):
/// the emission pattern is spread differently over a doubled cycle.
Val realize_rational_alt(const Rational& r);

/// The language view of a bisimilarity class over Moore outputs {0,1}:
/// a membership predicate plus the partition-refinement-minimized machine.
struct Language {
    Machine machine;       // reachable part, minimized
    std::uint32_t initial = 0;

    bool member(const std::vector<std::uint32_t>& word) const;
};

Language language_of(const BackendPtr& backend, const Val& cls);

}  // namespace elgot
