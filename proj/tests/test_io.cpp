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

#include <string>

#include "fixtures.hpp"
#include "fuzzrel/io.hpp"
#include "fuzzrel/random.hpp"

using namespace fuzzrel;
using fixtures::g;
using fixtures::sample_relation;

namespace {

const std::string kDataDir = FUZZREL_TEST_DATA_DIR;

io::NamedRelations random_document(std::uint64_t seed) {
    RandomSource rng(seed);
    const auto u = make_indexed_universe(1 + rng.below(6), "e");
    std::vector<std::pair<std::string, FuzzyRelation>> relations;
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t k = 0; k < count; ++k)
        relations.emplace_back("rel" + std::to_string(k),
                               random_relation(rng, u, default_grade_alphabet(), 0.5));
    return {u, std::move(relations)};
}

bool documents_equal(const io::NamedRelations& a, const io::NamedRelations& b) {
    if (!same_universe(a.universe, b.universe)) return false;
    if (a.relations.size() != b.relations.size()) return false;
    for (std::size_t i = 0; i < a.relations.size(); ++i) {
        if (a.relations[i].first != b.relations[i].first) return false;
        if (a.relations[i].second != b.relations[i].second) return false;
    }
    return true;
}

} // namespace

TEST_CASE("the bundled documents reproduce the golden fixtures") {
    const io::NamedRelations doc =
        io::load_relations(kDataDir + "/example_relation.json");
    REQUIRE(doc.relations.size() == 1);
    CHECK(doc.relations[0].first == "R");
    CHECK(doc.relations[0].second == sample_relation());

    CHECK(io::load_mapping(kDataDir + "/f1.json").apply("x3") == "y2");
    CHECK(io::load_mapping(kDataDir + "/f2.json").apply("x5") == "y4");
    CHECK(io::load_mapping(kDataDir + "/f3.json").apply("x7") == "y6");

    const FuzzyInformationSystem system =
        io::to_system(io::load_relations(kDataDir + "/example_system.json"));
    CHECK(system.attribute_count() == 2);
    CHECK(system.attribute("R") == sample_relation());
    CHECK(system.attribute("S") == inverse(sample_relation()));
}

TEST_CASE("zadeh printing orders nonzero terms row-major") {
    const std::string text = io::zadeh(sample_relation());
    CHECK(text.rfind("1/(x1,x2)", 0) == 0);
    CHECK(text ==
          "1/(x1,x2) + 1/(x1,x3) + 0.8/(x2,x4) + 0.8/(x2,x5) + 0.9/(x3,x4) + "
          "0.8/(x3,x5) + 0.7/(x4,x6) + 0.7/(x4,x7) + 0.7/(x5,x6) + 0.7/(x5,x7) + "
          "0.9/(x6,x8) + 0.9/(x7,x8)");
    CHECK(io::zadeh(FuzzyRelation::zero(fixtures::domain_u())) == "0");

    const FuzzySet set = FuzzySet::from_terms(fixtures::domain_u(),
                                              {{"x2", g("0.8")}, {"x3", g("0.9")}});
    CHECK(io::zadeh(set) == "0.8/x2 + 0.9/x3");
    CHECK(io::zadeh(FuzzySet::zero(fixtures::domain_u())) == "0");
}

TEST_CASE("parse after emit is the identity on random documents") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const io::NamedRelations doc = random_document(seed);
        const io::NamedRelations from_json =
            io::parse_relations(io::emit_relations_json(doc));
        CHECK(documents_equal(doc, from_json));
        const io::NamedRelations from_text = io::parse_relations(
            io::emit_relations_text(doc.universe, doc.relations));
        CHECK(documents_equal(doc, from_text));
    }
}

TEST_CASE("emission is byte-deterministic") {
    const io::NamedRelations doc = random_document(5);
    CHECK(io::emit_relations_json(doc) == io::emit_relations_json(doc));
    const std::string round =
        io::emit_relations_json(io::parse_relations(io::emit_relations_json(doc)));
    CHECK(round == io::emit_relations_json(doc));
}

TEST_CASE("mapping documents round-trip") {
    const UniverseMapping& f1 = fixtures::mapping_f1();
    const std::string emitted = io::emit_mapping_json(f1);
    const UniverseMapping parsed = io::parse_mapping(emitted);
    CHECK(same_universe(parsed.domain(), f1.domain()));
    CHECK(same_universe(parsed.codomain(), f1.codomain()));
    for (const auto& label : f1.domain()->labels())
        CHECK(parsed.apply(label) == f1.apply(label));
}

TEST_CASE("text documents accept comments and blank lines") {
    const io::NamedRelations doc = io::parse_relations(
        "# a small example\n"
        "\n"
        "universe: a b c\n"
        "R = 0.5/(a,b) + 1/(b,c)\n"
        "empty = 0\n");
    CHECK(doc.universe->labels() == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(doc.relations.size() == 2);
    CHECK(doc.relations[0].second.grade("a", "b") == g("0.5"));
    CHECK(doc.relations[1].second.is_zero());
}

TEST_CASE("parse diagnostics name the offending file and field") {
    const auto check_error = [](const std::string& text, const std::string& needle) {
        try {
            io::parse_relations(text, Grade::kDefaultScale, "doc.json");
            FAIL("expected a ParseError");
        } catch (const ParseError& e) {
            const std::string what = e.what();
            INFO(what);
            CHECK(what.find("doc.json") != std::string::npos);
            CHECK(what.find(needle) != std::string::npos);
        }
    };
    check_error("", "empty");
    check_error("{", "parse error");
    check_error(R"({"relations": {}})", "universe");
    check_error(R"({"universe": ["a","a"], "relations": {}})", "duplicate");
    check_error(R"({"universe": ["a"], "relations": {}})", "no relation");
    check_error(R"({"universe": ["a"], "relations": {"R": [["a","b","1"]]}})", "not in");
    check_error(R"({"universe": ["a"], "relations": {"R": [["a","a",0.5]]}})",
                "decimal strings");
    check_error(R"({"universe": ["a"], "relations": {"R": [["a","a","1.5"]]}})",
                "outside [0, 1]");
    check_error(R"({"universe": ["a"], "relations": {"R": [["a","a","0.0000005"]]}})",
                "precision");
    check_error(R"({"universe": ["a"], "relations": {"R": [["a","a","1"],["a","a","1"]]}})",
                "duplicate");
    check_error("universe: a b\nR 0.5/(a,b)\n", "expected 'NAME = terms'");
    check_error("universe: a b\nR = 0.5/a,b)\n", "g/(a,b)");
    check_error("R = 0.5/(a,b)\n", "universe");
}

TEST_CASE("mapping documents are validated") {
    const auto check_error = [](const std::string& text, const std::string& needle) {
        try {
            io::parse_mapping(text, "map.json");
            FAIL("expected a ParseError");
        } catch (const ParseError& e) {
            const std::string what = e.what();
            INFO(what);
            CHECK(what.find(needle) != std::string::npos);
        }
    };
    check_error(R"({"domain": ["a"], "codomain": ["v"]})", "missing field 'map'");
    check_error(R"({"domain": ["a","b"], "codomain": ["v"], "map": [["a","v"]]})",
                "not total");
    check_error(R"({"domain": ["a"], "codomain": ["v"], "map": [["a","w"]]})",
                "not in the codomain");
    check_error(R"({"domain": ["a"], "codomain": ["v"], "map": [["a","v"],["a","v"]]})",
                "twice");
    check_error(R"({"domain": ["a"], "codomain": ["v"], "map": [["a"]]})", "map[0]");
}

TEST_CASE("documents parse at a caller-chosen scale") {
    const std::string text = R"({"universe": ["a"], "relations": {"R": [["a","a","0.5"]]}})";
    const io::NamedRelations coarse = io::parse_relations(text, 10);
    CHECK(coarse.relations[0].second.grade("a", "a").ticks() == 5);
    CHECK(coarse.relations[0].second.grade("a", "a").scale() == 10);
    CHECK_THROWS_AS(
        io::parse_relations(
            R"({"universe": ["a"], "relations": {"R": [["a","a","0.55"]]}})", 10),
        ParseError);
}

TEST_CASE("missing files raise a parse error naming the path") {
    try {
        io::load_relations("no/such/file.json");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("no/such/file.json") != std::string::npos);
    }
}
