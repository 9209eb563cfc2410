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

#include <catch2/catch_amalgamated.hpp>

#include "fuzzrel/grade.hpp"

using namespace fuzzrel;

TEST_CASE("grade parsing accepts decimal strings in [0, 1]") {
    CHECK(Grade::parse("0").ticks() == 0);
    CHECK(Grade::parse("1").ticks() == Grade::kDefaultScale);
    CHECK(Grade::parse("0.9").ticks() == 900000);
    CHECK(Grade::parse("0.85").ticks() == 850000);
    CHECK(Grade::parse(".5").ticks() == 500000);
    CHECK(Grade::parse("0.123456").ticks() == 123456);
    CHECK(Grade::parse("1.0").is_one());
    CHECK(Grade::parse("0.000001").ticks() == 1);
    // trailing zeros beyond the scale are representable, so accepted
    CHECK(Grade::parse("0.1234560").ticks() == 123456);
}

TEST_CASE("grade parsing rejects junk, out-of-range and over-precise input") {
    CHECK_THROWS_AS(Grade::parse(""), ParseError);
    CHECK_THROWS_AS(Grade::parse("x"), ParseError);
    CHECK_THROWS_AS(Grade::parse("0."), ParseError);
    CHECK_THROWS_AS(Grade::parse("-0.1"), ParseError);
    CHECK_THROWS_AS(Grade::parse("2"), ParseError);
    CHECK_THROWS_AS(Grade::parse("1.000001"), ParseError);
    CHECK_THROWS_AS(Grade::parse("0.5e-1"), ParseError);
    CHECK_THROWS_AS(Grade::parse("0.1234567"), ParseError);
    CHECK_THROWS_AS(Grade::parse("0.55", 10), ParseError);
    CHECK(Grade::parse("0.5", 10).ticks() == 5);
}

TEST_CASE("grade scale must be a power of ten within range") {
    CHECK_THROWS_AS(Grade::zero(3), ParameterError);
    CHECK_THROWS_AS(Grade::zero(0), ParameterError);
    CHECK_THROWS_AS(Grade::zero(10'000'000'000), ParameterError);
    CHECK_NOTHROW(Grade::zero(1));
    CHECK_NOTHROW(Grade::one(1'000'000'000));
    CHECK_THROWS_AS(Grade::from_ticks(11, 10), ParameterError);
    CHECK_THROWS_AS(Grade::from_ticks(-1, 10), ParameterError);
}

TEST_CASE("grade comparisons are exact and cross-scale") {
    CHECK(Grade::parse("0.5", 10) == Grade::parse("0.5"));
    CHECK(Grade::parse("0.5", 10) == Grade::parse("0.500000"));
    CHECK(Grade::parse("0.5") != Grade::parse("0.500001"));
    CHECK(Grade::parse("0.5", 10) < Grade::parse("0.6", 100));
    CHECK(Grade::parse("0.999999") < Grade::one());
    CHECK(Grade::parse("0.3") <= Grade::parse("0.3"));
}

TEST_CASE("min and max return an operand unchanged") {
    const Grade a = Grade::parse("0.3", 10);
    const Grade b = Grade::parse("0.70");
    const Grade lo = grade_min(a, b);
    const Grade hi = grade_max(a, b);
    CHECK(lo.ticks() == a.ticks());
    CHECK(lo.scale() == a.scale());
    CHECK(hi.ticks() == b.ticks());
    CHECK(hi.scale() == b.scale());
    CHECK(grade_min(a, a) == a);
    CHECK(grade_max(b, b) == b);
}

TEST_CASE("canonical printing round-trips") {
    CHECK(Grade::parse("0.90").str() == "0.9");
    CHECK(Grade::parse("1.0").str() == "1");
    CHECK(Grade::zero().str() == "0");
    CHECK(Grade::parse("0.123456").str() == "0.123456");
    for (const char* text : {"0", "1", "0.5", "0.07", "0.999999", "0.000001"}) {
        const Grade grade = Grade::parse(text);
        CHECK(Grade::parse(grade.str()) == grade);
    }
}

TEST_CASE("tolerance comparison is exact rational arithmetic") {
    const Grade tol = Grade::parse("0.1");
    CHECK(grade_diff_within(Grade::parse("0.5"), Grade::parse("0.6"), tol));
    CHECK(grade_diff_within(Grade::parse("0.6"), Grade::parse("0.5"), tol));
    CHECK_FALSE(grade_diff_within(Grade::parse("0.5"), Grade::parse("0.600001"), tol));
    CHECK(grade_diff_within(Grade::parse("0.5", 10), Grade::parse("0.6"), Grade::parse("0.1", 10)));
    CHECK(grade_diff_within(Grade::parse("0.5"), Grade::parse("0.5"), Grade::zero()));
    CHECK_FALSE(grade_diff_within(Grade::parse("0.5"), Grade::parse("0.500001"), Grade::zero()));
}
