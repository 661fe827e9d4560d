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
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <memory>
#include <vector>

namespace elgot {

/// Error taxonomy; the CLI maps these onto its exit-code contract.
enum class ErrorKind {
    VarietyMismatch,
    UnsupportedInstance,
    InfiniteCarrier,
    NotEnumerable,
    InvalidArgument,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& reason)
        : Error(ErrorKind::Parse, "parse error at " + std::to_string(line) + ":" +
                                      std::to_string(col) + ": " + reason),
          line_(line), col_(col), reason_(reason) {}
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_, col_;
    std::string reason_;
};

/// The three effect monads the library ships. SET is the identity monad,
/// UNARY is TX = N x X (one unary operation, no equations), JSL is the
/// finite power-set monad (join-semilattices with a bottom element).
enum class VarietyId : std::uint8_t { Set, Unary, Jsl };

std::string to_string(VarietyId v);
VarietyId variety_from_string(const std::string& s);

/// A finite set of named generators. Elements are addressed by index;
/// names are kept for parsing and printing.
class FinSet {
public:
    FinSet() = default;
    explicit FinSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a name, or npos.
    std::size_t index_of(const std::string& name) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::string> names_;
};

using FinSetPtr = std::shared_ptr<const FinSet>;

FinSetPtr make_finset(std::vector<std::string> names);
FinSetPtr make_finset(std::initializer_list<const char*> names);

/// Disjoint union. Names from the right set that clash with the left set
/// get a deterministic tick suffix. Right-hand indices are shifted by
/// left->size().
FinSetPtr finset_union(const FinSetPtr& left, const FinSetPtr& right);

/// Exact nonnegative rational, always stored reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    std::string str() const;
};

/// Bounds for enumerating algebra carriers. UNARY free algebras are
/// infinite, so any enumeration must state a counter bound up front;
/// asking for one without a bound fails fast.
struct EnumBounds {
    std::optional<std::uint64_t> unary_counter;              // max counter for UNARY elements
    std::size_t subset_max = static_cast<std::size_t>(-1);   // max JSL subset size
    std::size_t element_cap = 1u << 20;                      // hard safety cap

    static EnumBounds counters(std::uint64_t c) {
        EnumBounds b;
        b.unary_counter = c;
        return b;
    }
};

/// splitmix64: tiny deterministic generator so seeded law runs are
/// bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace elgot
