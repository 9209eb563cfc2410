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

// Golden test fixtures: the eight-element sample relation, the three sample
// mappings, and the hand-checked image/round-trip values they produce.

#ifndef FUZZREL_TESTS_FIXTURES_HPP
#define FUZZREL_TESTS_FIXTURES_HPP

#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/mapping.hpp"

namespace fixtures {

using namespace fuzzrel;

inline Grade g(const char* text) { return Grade::parse(text); }

inline UniversePtr domain_u() {
    static const UniversePtr u =
        Universe::make({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"});
    return u;
}

inline UniversePtr codomain_v() {
    static const UniversePtr v =
        Universe::make({"y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8"});
    return v;
}

/// The running sample relation used throughout the tests.
inline const FuzzyRelation& sample_relation() {
    static const FuzzyRelation r = FuzzyRelation::from_terms(
        domain_u(),
        {{"x1", "x2", g("1")},   {"x1", "x3", g("1")},   {"x2", "x4", g("0.8")},
         {"x2", "x5", g("0.8")}, {"x3", "x4", g("0.9")}, {"x3", "x5", g("0.8")},
         {"x4", "x6", g("0.7")}, {"x4", "x7", g("0.7")}, {"x5", "x6", g("0.7")},
         {"x5", "x7", g("0.7")}, {"x6", "x8", g("0.9")}, {"x7", "x8", g("0.9")}});
    return r;
}

/// Merges x2 and x3 (predecessor-consistent, not successor-consistent).
inline const UniverseMapping& mapping_f1() {
    static const UniverseMapping f(domain_u(), codomain_v(),
                                   {{"x1", "y1"},
                                    {"x2", "y2"},
                                    {"x3", "y2"},
                                    {"x4", "y4"},
                                    {"x5", "y5"},
                                    {"x6", "y6"},
                                    {"x7", "y7"},
                                    {"x8", "y8"}});
    return f;
}

/// Merges x4 and x5 (successor-consistent, not predecessor-consistent).
inline const UniverseMapping& mapping_f2() {
    static const UniverseMapping f(domain_u(), codomain_v(),
                                   {{"x1", "y1"},
                                    {"x2", "y2"},
                                    {"x3", "y3"},
                                    {"x4", "y4"},
                                    {"x5", "y4"},
                                    {"x6", "y6"},
                                    {"x7", "y7"},
                                    {"x8", "y8"}});
    return f;
}

/// Merges x6 and x7 (both predecessor- and successor-consistent).
inline const UniverseMapping& mapping_f3() {
    static const UniverseMapping f(domain_u(), codomain_v(),
                                   {{"x1", "y1"},
                                    {"x2", "y2"},
                                    {"x3", "y3"},
                                    {"x4", "y4"},
                                    {"x5", "y5"},
                                    {"x6", "y6"},
                                    {"x7", "y6"},
                                    {"x8", "y8"}});
    return f;
}

/// Hand-checked forward image of the sample relation under mapping_f1:
/// nine nonzero terms.
inline const FuzzyRelation& expected_image_f1() {
    static const FuzzyRelation r = FuzzyRelation::from_terms(
        codomain_v(),
        {{"y1", "y2", g("1")},   {"y2", "y4", g("0.9")}, {"y2", "y5", g("0.8")},
         {"y4", "y6", g("0.7")}, {"y4", "y7", g("0.7")}, {"y5", "y6", g("0.7")},
         {"y5", "y7", g("0.7")}, {"y6", "y8", g("0.9")}, {"y7", "y8", g("0.9")}});
    return r;
}

/// Hand-checked round trip of the sample relation through mapping_f1:
/// identical to the sample except (x2, x4) rises from 0.8 to 0.9.
inline const FuzzyRelation& expected_roundtrip_f1() {
    static const FuzzyRelation r = FuzzyRelation::from_terms(
        domain_u(),
        {{"x1", "x2", g("1")},   {"x1", "x3", g("1")},   {"x2", "x4", g("0.9")},
         {"x2", "x5", g("0.8")}, {"x3", "x4", g("0.9")}, {"x3", "x5", g("0.8")},
         {"x4", "x6", g("0.7")}, {"x4", "x7", g("0.7")}, {"x5", "x6", g("0.7")},
         {"x5", "x7", g("0.7")}, {"x6", "x8", g("0.9")}, {"x7", "x8", g("0.9")}});
    return r;
}

} // namespace fixtures

#endif // FUZZREL_TESTS_FIXTURES_HPP
