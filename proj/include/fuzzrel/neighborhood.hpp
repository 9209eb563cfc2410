/*
 *   Copyright 2026 the fuzzrel authors
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

/**
 * @file
 * Fuzzy neighborhoods of an element under a relation.
 *
 * Four kinds: the predecessor neighborhood y -> R(y, x) (the column of x),
 * the successor neighborhood y -> R(x, y) (the row of x), and their
 * pointwise meet and join. Results are fresh FuzzySet values.
 */

#ifndef FUZZREL_NEIGHBORHOOD_HPP
#define FUZZREL_NEIGHBORHOOD_HPP

#include <string>

#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/fuzzy_set.hpp"

namespace fuzzrel {

enum class NeighborhoodKind { Pred, Succ, Meet, Join };

inline const char* to_string(NeighborhoodKind kind) {
    switch (kind) {
    case NeighborhoodKind::Pred: return "pred";
    case NeighborhoodKind::Succ: return "succ";
    case NeighborhoodKind::Meet: return "meet";
    case NeighborhoodKind::Join: return "join";
    }
    return "?";
}

inline NeighborhoodKind parse_neighborhood_kind(const std::string& name) {
    if (name == "pred") return NeighborhoodKind::Pred;
    if (name == "succ") return NeighborhoodKind::Succ;
    if (name == "meet") return NeighborhoodKind::Meet;
    if (name == "join") return NeighborhoodKind::Join;
    throw ParameterError("unknown neighborhood kind '" + name +
                         "' (expected pred, succ, meet or join)");
}

inline FuzzySet neighborhood(const FuzzyRelation& r, std::size_t x, NeighborhoodKind kind) {
    switch (kind) {
    case NeighborhoodKind::Pred: return r.column(x);
    case NeighborhoodKind::Succ: return r.row(x);
    case NeighborhoodKind::Meet: return meet(r.column(x), r.row(x));
    case NeighborhoodKind::Join: return join(r.column(x), r.row(x));
    }
    throw ParameterError("unknown neighborhood kind");
}

inline FuzzySet neighborhood(const FuzzyRelation& r, const std::string& x,
                             NeighborhoodKind kind) {
    return neighborhood(r, r.universe()->index_of(x), kind);
}

} // namespace fuzzrel

#endif // FUZZREL_NEIGHBORHOOD_HPP
