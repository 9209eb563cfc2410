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
 * Document formats for relations, systems and mappings.
 *
 * The primary interchange format is JSON with grades as decimal strings
 * (never binary floats), so values survive round trips bit-exactly:
 *
 *   { "universe": ["x1", "x2"],
 *     "relations": { "R": [["x1", "x2", "0.8"]] } }
 *
 *   { "domain": ["x1", "x2"], "codomain": ["y1"],
 *     "map": [["x1", "y1"], ["x2", "y1"]] }
 *
 * A document may hold several named relations over one universe, which is
 * also the serialization of an information system. Pairs not listed read
 * as grade 0. Mappings must be total on their domain.
 *
 * A human-oriented text format is supported for relation documents as
 * input and pretty-printing:
 *
 *   universe: x1 x2 x3
 *   R = 1/(x1,x2) + 0.8/(x2,x3)
 *
 * Text-format labels cannot contain whitespace, '(', ')' or ','; JSON has
 * no such restriction. Emission is canonical and byte-deterministic, with
 * nonzero terms listed row-major in universe order.
 */

#ifndef FUZZREL_IO_HPP
#define FUZZREL_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/fuzzy_set.hpp"
#include "fuzzrel/grade.hpp"
#include "fuzzrel/info_system.hpp"
#include "fuzzrel/mapping.hpp"

namespace fuzzrel::io {

/// The content of a relation document: one universe, named relations in
/// document order.
struct NamedRelations {
    UniversePtr universe;
    std::vector<std::pair<std::string, FuzzyRelation>> relations;
};

// ---------------------------------------------------------------------------
// Zadeh-notation pretty printing.
// ---------------------------------------------------------------------------

/// "0.8/x2 + 0.9/x3" over the support, universe order; "0" when empty.
inline std::string zadeh(const FuzzySet& set) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.grade_at(i).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += set.grade_at(i).str() + "/" + set.universe()->label(i);
    }
    return out.empty() ? "0" : out;
}

/// "1/(x1,x2) + 0.8/(x2,x4)" row-major in universe order; "0" when empty.
inline std::string zadeh(const FuzzyRelation& rel) {
    std::string out;
    for (const auto& [from, to, grade] : rel.nonzero_terms()) {
        if (!out.empty()) out += " + ";
        out += grade.str() + "/(" + from + "," + to + ")";
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

namespace detail {

using json = nlohmann::ordered_json;

inline ParseError fail(const std::string& origin, const std::string& message) {
    return ParseError(origin + ": " + message);
}

inline std::vector<std::string> string_array(const json& value, const std::string& origin,
                                             const std::string& field) {
    if (!value.is_array()) throw fail(origin, "field '" + field + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string())
            throw fail(origin, "field '" + field + "' must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

inline Grade parse_grade_string(const json& value, const std::string& origin,
                                const std::string& field, std::int64_t scale) {
    if (!value.is_string())
        throw fail(origin, "field '" + field + "': grades must be decimal strings");
    try {
        return Grade::parse(value.get<std::string>(), scale);
    } catch (const Error& e) {
        throw fail(origin, "field '" + field + "': " + e.what());
    }
}

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

inline NamedRelations parse_relations_text(const std::string& text, std::int64_t scale,
                                           const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    UniversePtr universe;
    std::vector<std::pair<std::string, FuzzyRelation>> relations;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        if (!universe) {
            if (line.rfind("universe:", 0) != 0)
                throw fail(where, "expected a 'universe:' line first");
            std::istringstream labels(line.substr(9));
            std::vector<std::string> names;
            std::string label;
            while (labels >> label) names.push_back(label);
            try {
                universe = Universe::make(names);
            } catch (const Error& e) {
                throw fail(where, e.what());
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw fail(where, "expected 'NAME = terms'");
        const std::string name = trim(line.substr(0, eq));
        if (name.empty()) throw fail(where, "relation name is empty");
        std::string rhs = trim(line.substr(eq + 1));
        std::vector<std::tuple<std::string, std::string, Grade>> terms;
        if (rhs != "0") {
            std::size_t pos = 0;
            while (pos < rhs.size()) {
                const auto slash = rhs.find('/', pos);
                if (slash == std::string::npos)
                    throw fail(where, "term is missing '/' separator");
                const std::string grade_text = trim(rhs.substr(pos, slash - pos));
                const auto open = rhs.find('(', slash);
                const auto comma = rhs.find(',', open);
                const auto close = rhs.find(')', comma == std::string::npos ? slash : comma);
                if (open == std::string::npos || comma == std::string::npos ||
                    close == std::string::npos)
                    throw fail(where, "term is not of the form g/(a,b)");
                const std::string from = trim(rhs.substr(open + 1, comma - open - 1));
                const std::string to = trim(rhs.substr(comma + 1, close - comma - 1));
                Grade grade = Grade::zero(scale);
                try {
                    grade = Grade::parse(grade_text, scale);
                } catch (const Error& e) {
                    throw fail(where, e.what());
                }
                terms.emplace_back(from, to, grade);
                pos = rhs.find('+', close);
                if (pos == std::string::npos) break;
                ++pos;
            }
        }
        try {
            relations.emplace_back(name, FuzzyRelation::from_terms(universe, terms));
        } catch (const Error& e) {
            throw fail(where, e.what());
        }
        for (std::size_t i = 0; i + 1 < relations.size(); ++i)
            if (relations[i].first == name)
                throw fail(where, "duplicate relation name '" + name + "'");
    }
    if (!universe) throw fail(origin, "document has no 'universe:' line");
    if (relations.empty()) throw fail(origin, "document defines no relation");
    return {std::move(universe), std::move(relations)};
}

} // namespace detail

/// Parses a relation document, JSON or text, chosen by the first
/// non-whitespace byte. `origin` names the source in diagnostics.
inline NamedRelations parse_relations(const std::string& text,
                                      std::int64_t scale = Grade::kDefaultScale,
                                      const std::string& origin = "<input>") {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw detail::fail(origin, "document is empty");
    if (text[first] != '{') return detail::parse_relations_text(text, scale, origin);

    detail::json doc;
    try {
        doc = detail::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw detail::fail(origin, e.what());
    }
    if (!doc.is_object()) throw detail::fail(origin, "top level must be an object");
    if (!doc.contains("universe")) throw detail::fail(origin, "missing field 'universe'");
    if (!doc.contains("relations")) throw detail::fail(origin, "missing field 'relations'");

    UniversePtr universe;
    try {
        universe = Universe::make(detail::string_array(doc["universe"], origin, "universe"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw detail::fail(origin, std::string("field 'universe': ") + e.what());
    }

    if (!doc["relations"].is_object())
        throw detail::fail(origin, "field 'relations' must be an object");
    std::vector<std::pair<std::string, FuzzyRelation>> relations;
    for (const auto& [name, triples] : doc["relations"].items()) {
        const std::string field = "relations['" + name + "']";
        if (!triples.is_array())
            throw detail::fail(origin, "field '" + field + "' must be an array of triples");
        std::vector<std::tuple<std::string, std::string, Grade>> terms;
        std::size_t index = 0;
        for (const auto& triple : triples) {
            const std::string at = field + "[" + std::to_string(index++) + "]";
            if (!triple.is_array() || triple.size() != 3)
                throw detail::fail(origin,
                                   "field '" + at + "' must be [from, to, grade]");
            if (!triple[0].is_string() || !triple[1].is_string())
                throw detail::fail(origin, "field '" + at + "': labels must be strings");
            terms.emplace_back(triple[0].get<std::string>(), triple[1].get<std::string>(),
                               detail::parse_grade_string(triple[2], origin, at, scale));
        }
        try {
            relations.emplace_back(name, FuzzyRelation::from_terms(universe, terms));
        } catch (const Error& e) {
            throw detail::fail(origin, "field '" + field + "': " + e.what());
        }
    }
    if (relations.empty()) throw detail::fail(origin, "document defines no relation");
    for (std::size_t i = 0; i < relations.size(); ++i)
        for (std::size_t j = i + 1; j < relations.size(); ++j)
            if (relations[i].first == relations[j].first)
                throw detail::fail(origin,
                                   "duplicate relation name '" + relations[i].first + "'");
    return {std::move(universe), std::move(relations)};
}

/// Parses a mapping document (JSON only).
inline UniverseMapping parse_mapping(const std::string& text,
                                     const std::string& origin = "<input>") {
    detail::json doc;
    try {
        doc = detail::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw detail::fail(origin, e.what());
    }
    if (!doc.is_object()) throw detail::fail(origin, "top level must be an object");
    for (const char* field : {"domain", "codomain", "map"})
        if (!doc.contains(field))
            throw detail::fail(origin, std::string("missing field '") + field + "'");

    UniversePtr domain;
    UniversePtr codomain;
    try {
        domain = Universe::make(detail::string_array(doc["domain"], origin, "domain"));
        codomain = Universe::make(detail::string_array(doc["codomain"], origin, "codomain"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw detail::fail(origin, e.what());
    }

    if (!doc["map"].is_array())
        throw detail::fail(origin, "field 'map' must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t index = 0;
    for (const auto& pair : doc["map"]) {
        const std::string at = "map[" + std::to_string(index++) + "]";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string())
            throw detail::fail(origin, "field '" + at + "' must be [from, to]");
        pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    try {
        return UniverseMapping(domain, codomain, pairs);
    } catch (const Error& e) {
        throw detail::fail(origin, std::string("field 'map': ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Emission (canonical, byte-deterministic).
// ---------------------------------------------------------------------------

inline std::string emit_relations_json(
    const UniversePtr& universe,
    const std::vector<std::pair<std::string, FuzzyRelation>>& relations) {
    detail::json doc;
    doc["universe"] = universe->labels();
    doc["relations"] = detail::json::object();
    for (const auto& [name, rel] : relations) {
        detail::json triples = detail::json::array();
        for (const auto& [from, to, grade] : rel.nonzero_terms())
            triples.push_back({from, to, grade.str()});
        doc["relations"][name] = std::move(triples);
    }
    return doc.dump(2) + "\n";
}

inline std::string emit_relations_text(
    const UniversePtr& universe,
    const std::vector<std::pair<std::string, FuzzyRelation>>& relations) {
    std::string out = "universe:";
    for (const auto& label : universe->labels()) out += " " + label;
    out += "\n";
    for (const auto& [name, rel] : relations) out += name + " = " + zadeh(rel) + "\n";
    return out;
}

inline std::string emit_relations_json(const NamedRelations& doc) {
    return emit_relations_json(doc.universe, doc.relations);
}

inline std::string emit_relations_json(const FuzzyInformationSystem& system) {
    return emit_relations_json(system.universe(), system.attributes());
}

inline std::string emit_mapping_json(const UniverseMapping& mapping) {
    detail::json doc;
    doc["domain"] = mapping.domain()->labels();
    doc["codomain"] = mapping.codomain()->labels();
    detail::json pairs = detail::json::array();
    for (const auto& label : mapping.domain()->labels())
        pairs.push_back({label, mapping.apply(label)});
    doc["map"] = std::move(pairs);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// File helpers.
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << content;
    if (!out) throw ParseError(path + ": write failed");
}

inline NamedRelations load_relations(const std::string& path,
                                     std::int64_t scale = Grade::kDefaultScale) {
    return parse_relations(read_file(path), scale, path);
}

inline UniverseMapping load_mapping(const std::string& path) {
    return parse_mapping(read_file(path), path);
}

/// Relation documents double as information-system files.
inline FuzzyInformationSystem to_system(NamedRelations doc) {
    return FuzzyInformationSystem(std::move(doc.universe), std::move(doc.relations));
}

} // namespace fuzzrel::io

#endif // FUZZREL_IO_HPP
