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

#include "elgot/base.hpp"

#include <algorithm>
#include <unordered_set>

namespace elgot {

std::string to_string(VarietyId v) {
    switch (v) {
        case VarietyId::Set: return "set";
        case VarietyId::Unary: return "unary";
        case VarietyId::Jsl: return "jsl";
    }
    return "?";
}

VarietyId variety_from_string(const std::string& s) {
    if (s == "set" || s == "SET") return VarietyId::Set;
    if (s == "unary" || s == "UNARY") return VarietyId::Unary;
    if (s == "jsl" || s == "JSL") return VarietyId::Jsl;
    throw Error(ErrorKind::InvalidArgument, "unknown variety: " + s);
}

FinSet::FinSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate generator name: " + n);
    }
}

std::size_t FinSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return npos;
}

FinSetPtr make_finset(std::vector<std::string> names) {
    return std::make_shared<const FinSet>(std::move(names));
}

FinSetPtr make_finset(std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    for (const char* n : names) v.emplace_back(n);
    return make_finset(std::move(v));
}

FinSetPtr finset_union(const FinSetPtr& left, const FinSetPtr& right) {
    std::vector<std::string> names = left->names();
    std::unordered_set<std::string> seen(names.begin(), names.end());
    for (const auto& n : right->names()) {
        std::string cand = n;
        while (seen.count(cand)) cand += "'";
        seen.insert(cand);
        names.push_back(cand);
    }
    return make_finset(std::move(names));
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

}  // namespace elgot
