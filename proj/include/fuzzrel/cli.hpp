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
 * Command-line driver.
 *
 * Exit codes: 0 = success (computation done, property holds / consistent),
 * 1 = computation succeeded but a violation or inconsistency was found,
 * 2 = usage or document format error. All output is deterministic:
 * identical inputs produce byte-identical reports.
 */

#ifndef FUZZREL_CLI_HPP
#define FUZZREL_CLI_HPP

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzrel/consistency.hpp"
#include "fuzzrel/info_system.hpp"
#include "fuzzrel/io.hpp"
#include "fuzzrel/lawcheck.hpp"
#include "fuzzrel/neighborhood.hpp"

namespace fuzzrel::cli {

namespace detail {

inline std::pair<std::string, FuzzyRelation> select_relation(io::NamedRelations& doc,
                                                             const std::string& name,
                                                             const std::string& origin) {
    if (name.empty()) {
        if (doc.relations.size() != 1)
            throw ParseError(origin + ": document holds " +
                             std::to_string(doc.relations.size()) +
                             " relations; pick one with --name");
        return std::move(doc.relations.front());
    }
    for (auto& entry : doc.relations)
        if (entry.first == name) return std::move(entry);
    throw ParseError(origin + ": no relation named '" + name + "'");
}

inline void emit_output(const std::string& content, const std::string& path,
                        std::ostream& out) {
    if (path.empty())
        out << content;
    else
        io::write_file(path, content);
}

inline std::string projection_line(const UniverseMapping& f) {
    std::string line = "projection:";
    for (const auto& label : f.domain()->labels())
        line += " " + label + "->" + f.apply(label);
    return line;
}

inline void print_witness(std::ostream& out, const char* side, const ConsistencyWitness& w) {
    out << side << " witness: " << w.first << " ~ " << w.second << " differ at " << w.probe
        << ": " << w.lhs.str() << " vs " << w.rhs.str() << "\n";
}

inline std::int64_t default_scale() {
    if (const char* env = std::getenv("FUZZREL_SCALE")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw ParameterError(std::string("FUZZREL_SCALE value '") + env +
                                 "' is not an integer");
        }
    }
    return Grade::kDefaultScale;
}

} // namespace detail

/// Runs the CLI on `args` (program name excluded). Streams are injectable
/// for tests; the binary entry point forwards std::cout/std::cerr.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fuzzy relation algebra: consistency classification, relation "
                 "mappings, lossless compression and an executable law suite.\n"
                 "Grades are exact decimals at a configurable scale (default 10^-6 "
                 "resolution; override with --scale or the FUZZREL_SCALE variable)."};
    app.name("fuzzrel");
    app.require_subcommand(1);

    std::int64_t scale = 0; // resolved after parsing: flag > env > default
    app.add_option("--scale", scale, "grade scale (power of ten, at most 10^9)");

    int exit_code = 0;

    // -- classify ------------------------------------------------------------
    std::string cl_rel, cl_map, cl_name, cl_tol = "0";
    auto* classify_cmd =
        app.add_subcommand("classify", "classify a mapping against a relation");
    classify_cmd->add_option("-r,--relation", cl_rel, "relation document")->required();
    classify_cmd->add_option("-m,--mapping", cl_map, "mapping document")->required();
    classify_cmd->add_option("--name", cl_name, "relation name within the document");
    classify_cmd->add_option("--tol", cl_tol,
                             "grade tolerance for approximate grouping (default 0)");
    classify_cmd->callback([&] {
        auto doc = io::load_relations(cl_rel, scale);
        auto [name, rel] = detail::select_relation(doc, cl_name, cl_rel);
        const UniverseMapping f = io::load_mapping(cl_map);
        const Grade tol = Grade::parse(cl_tol, scale);
        const ConsistencyReport report = classify(f, rel, tol);
        out << "pred=" << (report.pred_consistent ? "true" : "false")
            << " succ=" << (report.succ_consistent ? "true" : "false")
            << " blockwise=" << (report.blockwise_consistent ? "true" : "false") << "\n";
        if (report.pred_witness) detail::print_witness(out, "pred", *report.pred_witness);
        if (report.succ_witness) detail::print_witness(out, "succ", *report.succ_witness);
        if (report.blockwise_witness)
            detail::print_witness(out, "blockwise", *report.blockwise_witness);
        if (report.approximate)
            out << "note: approximate classification (tol=" << tol.str()
                << "); exact reconstruction guarantees do not apply\n";
        exit_code = report.blockwise_consistent && report.both() ? 0 : 1;
    });

    // -- image / preimage ------------------------------------------------------
    std::string im_rel, im_map, im_out, im_name, im_format = "json";
    auto* image_cmd =
        app.add_subcommand("image", "map a relation forward through a mapping");
    image_cmd->add_option("-r,--relation", im_rel, "relation document")->required();
    image_cmd->add_option("-m,--mapping", im_map, "mapping document")->required();
    image_cmd->add_option("-o,--output", im_out, "output file (default stdout)");
    image_cmd->add_option("--name", im_name, "relation name within the document");
    image_cmd->add_option("--format", im_format, "output format: json or zadeh");
    image_cmd->callback([&] {
        auto doc = io::load_relations(im_rel, scale);
        auto [name, rel] = detail::select_relation(doc, im_name, im_rel);
        const UniverseMapping f = io::load_mapping(im_map);
        const FuzzyRelation mapped = image_relation(f, rel);
        const std::vector<std::pair<std::string, FuzzyRelation>> result{{name, mapped}};
        const std::string content =
            im_format == "zadeh" ? io::emit_relations_text(f.codomain(), result)
                                 : io::emit_relations_json(f.codomain(), result);
        detail::emit_output(content, im_out, out);
    });

    std::string pre_rel, pre_map, pre_out, pre_name, pre_format = "json";
    auto* preimage_cmd =
        app.add_subcommand("preimage", "map a relation backward through a mapping");
    preimage_cmd->add_option("-q,--relation", pre_rel, "codomain relation document")
        ->required();
    preimage_cmd->add_option("-m,--mapping", pre_map, "mapping document")->required();
    preimage_cmd->add_option("-o,--output", pre_out, "output file (default stdout)");
    preimage_cmd->add_option("--name", pre_name, "relation name within the document");
    preimage_cmd->add_option("--format", pre_format, "output format: json or zadeh");
    preimage_cmd->callback([&] {
        auto doc = io::load_relations(pre_rel, scale);
        auto [name, rel] = detail::select_relation(doc, pre_name, pre_rel);
        const UniverseMapping f = io::load_mapping(pre_map);
        const FuzzyRelation pulled = preimage_relation(f, rel);
        const std::vector<std::pair<std::string, FuzzyRelation>> result{{name, pulled}};
        const std::string content =
            pre_format == "zadeh" ? io::emit_relations_text(f.domain(), result)
                                  : io::emit_relations_json(f.domain(), result);
        detail::emit_output(content, pre_out, out);
    });

    // -- neighborhood -----------------------------------------------------------
    std::string nb_rel, nb_elem, nb_kind = "pred", nb_name;
    auto* nbhd_cmd = app.add_subcommand(
        "neighborhood", "print a fuzzy neighborhood in Zadeh notation");
    nbhd_cmd->add_option("-r,--relation", nb_rel, "relation document")->required();
    nbhd_cmd->add_option("-x,--element", nb_elem, "element label")->required();
    nbhd_cmd->add_option("--kind", nb_kind, "pred, succ, meet or join");
    nbhd_cmd->add_option("--name", nb_name, "relation name within the document");
    nbhd_cmd->callback([&] {
        auto doc = io::load_relations(nb_rel, scale);
        auto [name, rel] = detail::select_relation(doc, nb_name, nb_rel);
        const FuzzySet result =
            neighborhood(rel, nb_elem, parse_neighborhood_kind(nb_kind));
        out << io::zadeh(result) << "\n";
    });

    // -- compress ----------------------------------------------------------------
    std::string cp_rel, cp_mode = "both", cp_out, cp_name;
    auto* compress_cmd = app.add_subcommand(
        "compress", "quotient a relation by its coarsest consistent partition");
    compress_cmd->add_option("-r,--relation", cp_rel, "relation document")->required();
    compress_cmd->add_option("--mode", cp_mode, "pred, succ or both (default both)");
    compress_cmd->add_option("-o,--output", cp_out, "output file for projection + quotient");
    compress_cmd->add_option("--name", cp_name, "relation name within the document");
    compress_cmd->callback([&] {
        auto doc = io::load_relations(cp_rel, scale);
        auto [name, rel] = detail::select_relation(doc, cp_name, cp_rel);
        const CompressionResult result = compress(rel, parse_consistency_mode(cp_mode));
        out << "mode=" << to_string(result.mode) << " blocks=" << result.partition.block_count()
            << "\n";
        out << detail::projection_line(result.projection) << "\n";
        out << "quotient " << name << " = " << io::zadeh(result.quotient) << "\n";
        const RoundTripReport roundtrip = verify_roundtrip(result.projection, rel);
        if (roundtrip.equal) {
            out << "roundtrip=exact\n";
        } else {
            out << "roundtrip=differs diffs=" << roundtrip.diffs.size() << "\n";
            for (const auto& d : roundtrip.diffs)
                out << "(" << d.from << "," << d.to << "): " << d.original.str() << " -> "
                    << d.reconstructed.str() << "\n";
            exit_code = 1;
        }
        if (!cp_out.empty()) {
            nlohmann::ordered_json combined;
            combined["projection"] =
                nlohmann::ordered_json::parse(io::emit_mapping_json(result.projection));
            combined["quotient"] = nlohmann::ordered_json::parse(io::emit_relations_json(
                result.projection.codomain(), {{name, result.quotient}}));
            io::write_file(cp_out, combined.dump(2) + "\n");
        }
    });

    // -- compress-system ------------------------------------------------------------
    std::string cs_sys, cs_out;
    auto* compress_system_cmd = app.add_subcommand(
        "compress-system", "losslessly compress every attribute of a system at once");
    compress_system_cmd->add_option("-s,--system", cs_sys, "system document")->required();
    compress_system_cmd->add_option("-o,--output", cs_out,
                                    "output file for projection + image system");
    compress_system_cmd->callback([&] {
        const FuzzyInformationSystem system = io::to_system(io::load_relations(cs_sys, scale));
        const SystemCompressionResult result = compress_system(system);
        out << "blocks=" << result.partition.block_count()
            << " attributes=" << system.attribute_count() << "\n";
        out << detail::projection_line(result.projection) << "\n";
        bool exact = true;
        for (const auto& [name, rel] : system.attributes())
            exact = exact &&
                    preimage_relation(result.projection, result.image.attribute(name)) == rel;
        out << (exact ? "roundtrip=exact\n" : "roundtrip=differs\n");
        exit_code = exact ? 0 : 1;
        if (!cs_out.empty()) {
            nlohmann::ordered_json combined;
            combined["projection"] =
                nlohmann::ordered_json::parse(io::emit_mapping_json(result.projection));
            combined["image"] =
                nlohmann::ordered_json::parse(io::emit_relations_json(result.image));
            io::write_file(cs_out, combined.dump(2) + "\n");
        }
    });

    // -- verify-laws ---------------------------------------------------------------
    std::string vl_law;
    std::uint64_t vl_trials = 10000, vl_seed = 0;
    std::size_t vl_max_size = 6;
    auto* verify_cmd =
        app.add_subcommand("verify-laws", "run the law suite on seeded random instances");
    verify_cmd->add_option("--law", vl_law, "check a single law id");
    verify_cmd->add_option("--trials", vl_trials, "instances per law")->required();
    verify_cmd->add_option("--seed", vl_seed, "generation seed")->required();
    verify_cmd->add_option("--max-size", vl_max_size, "largest universe size (default 6)");
    verify_cmd->callback([&] {
        laws::GenConfig cfg;
        cfg.max_size = vl_max_size;
        std::vector<const laws::LawSpec*> selected;
        if (vl_law.empty()) {
            for (const auto& law : laws::law_catalog())
                if (!law.weakened) selected.push_back(&law);
        } else {
            selected.push_back(&laws::find_law(vl_law));
        }
        bool violations = false;
        for (const auto* law : selected) {
            const laws::LawRunStats stats = laws::run_law(*law, vl_trials, vl_seed, cfg);
            out << stats.id << ": trials=" << stats.trials << " holds=" << stats.holds
                << " vacuous=" << stats.vacuous << " violated=" << stats.violated << "\n";
            if (stats.violated > 0) {
                violations = true;
                out << "  witness trial=" << *stats.first_violation_trial
                    << " location=" << stats.first_witness->location
                    << " lhs=" << stats.first_witness->lhs.str()
                    << " rhs=" << stats.first_witness->rhs.str() << "\n";
            }
        }
        out << (violations ? "result=violations\n" : "result=ok\n");
        exit_code = violations ? 1 : 0;
    });

    // -- counterexample --------------------------------------------------------------
    std::string ce_law;
    std::uint64_t ce_trials = 10000, ce_seed = 0;
    std::size_t ce_max_size = 4;
    auto* counter_cmd = app.add_subcommand(
        "counterexample", "search for an instance violating a (weakened) law");
    counter_cmd->add_option("--law", ce_law, "law id, e.g. W-T3.3-pred")->required();
    counter_cmd->add_option("--trials", ce_trials, "number of seeded instances")->required();
    counter_cmd->add_option("--seed", ce_seed, "generation seed")->required();
    counter_cmd->add_option("--max-size", ce_max_size, "largest universe size (default 4)");
    counter_cmd->callback([&] {
        laws::GenConfig cfg;
        cfg.max_size = ce_max_size;
        const laws::LawSpec& law = laws::find_law(ce_law);
        const laws::CounterexampleResult result =
            laws::search_counterexample(law, ce_trials, ce_seed, cfg);
        if (!result.instance) {
            out << "none (trials=" << ce_trials << ")\n";
            exit_code = 0;
            return;
        }
        const laws::Instance& inst = *result.instance;
        out << "violated at trial " << result.trial_index << "\n";
        out << "universe:";
        for (const auto& label : inst.r.universe()->labels()) out << " " << label;
        out << "\n";
        out << "R = " << io::zadeh(inst.r) << "\n";
        if (inst.q) out << "Q = " << io::zadeh(*inst.q) << "\n";
        if (inst.f) {
            out << "f:";
            for (const auto& label : inst.f->domain()->labels())
                out << " " << label << "->" << inst.f->apply(label);
            out << "\n";
        }
        if (inst.x) out << "x = " << *inst.x << "\n";
        out << "witness: " << result.witness->location << ": " << result.witness->lhs.str()
            << " vs " << result.witness->rhs.str() << "\n";
        exit_code = 1;
    });

    try {
        if (scale == 0) scale = detail::default_scale();
        Grade::zero(scale); // validates the scale
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

} // namespace fuzzrel::cli

#endif // FUZZREL_CLI_HPP
