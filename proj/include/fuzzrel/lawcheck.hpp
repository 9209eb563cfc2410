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
 * Executable catalog of the algebraic laws this library implements, with
 * seeded random instance generation and counterexample search.
 *
 * Each law is a (hypothesis, conclusion) pair over an Instance of one or
 * two relations, an optional mapping and an optional distinguished element.
 * check_law evaluates the hypothesis first (false -> vacuous), then the
 * conclusion exactly, reporting a deterministic witness on failure. Laws
 * whose ids start with "W-" are deliberately weakened variants kept in the
 * catalog to demonstrate that the dropped hypotheses are necessary; they
 * are expected to be violable and are exercised by counterexample search,
 * never by the law suite.
 *
 * Instance generation is hypothesis-targeted: conditional laws draw most
 * instances from constructions that satisfy their hypothesis (consistent
 * projections, column/row/block-lifted relations, structural closure), with
 * a fraction of plain random instances mixed in. All draws are seeded and
 * bit-identical across platforms; the suite reports the violation with the
 * smallest trial index.
 */

#ifndef FUZZREL_LAWCHECK_HPP
#define FUZZREL_LAWCHECK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzrel/consistency.hpp"
#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/fuzzy_set.hpp"
#include "fuzzrel/mapping.hpp"
#include "fuzzrel/neighborhood.hpp"
#include "fuzzrel/random.hpp"

namespace fuzzrel::laws {

/// One test instance. Components beyond `r` are optional; a law that needs
/// a missing component raises MissingComponent. When `x` is absent,
/// element-quantified laws check every element of the universe.
struct Instance {
    FuzzyRelation r;
    std::optional<FuzzyRelation> q;
    std::optional<UniverseMapping> f;
    std::optional<std::string> x;
};

enum class LawStatus { Holds, Vacuous, Violated };

inline const char* to_string(LawStatus s) {
    switch (s) {
    case LawStatus::Holds: return "holds";
    case LawStatus::Vacuous: return "vacuous";
    case LawStatus::Violated: return "violated";
    }
    return "?";
}

/// Where the two sides of a conclusion first differ, with both grades.
struct LawWitness {
    std::string location;
    Grade lhs;
    Grade rhs;
};

struct Verdict {
    LawStatus status = LawStatus::Holds;
    std::optional<LawWitness> witness; // present iff status == Violated
};

struct GenConfig {
    std::size_t min_size = 1;
    std::size_t max_size = 6;
    std::vector<Grade> alphabet = default_grade_alphabet();
    double density = 0.5;
};

struct LawSpec {
    std::string id;
    std::string summary;
    bool needs_q = false;
    bool needs_f = false;
    /// True when the law is a deliberately weakened variant that random
    /// search is expected to violate.
    bool weakened = false;
    std::function<bool(const Instance&)> hypothesis; // null -> unconditional
    std::function<std::optional<LawWitness>(const Instance&)> conclusion;
    std::function<Instance(RandomSource&, const GenConfig&)> generate;
};

namespace detail {

inline std::optional<LawWitness> diff_sets(const FuzzySet& lhs, const FuzzySet& rhs,
                                           const std::string& context) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs.grade_at(i) != rhs.grade_at(i)) {
            const std::string at = lhs.universe()->label(i);
            return LawWitness{context.empty() ? at : context + " at " + at,
                              lhs.grade_at(i), rhs.grade_at(i)};
        }
    }
    return std::nullopt;
}

inline std::optional<LawWitness> diff_relations(const FuzzyRelation& lhs,
                                                const FuzzyRelation& rhs) {
    const std::size_t n = lhs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lhs.at(i, j) != rhs.at(i, j))
                return LawWitness{"(" + lhs.universe()->label(i) + "," +
                                      lhs.universe()->label(j) + ")",
                                  lhs.at(i, j), rhs.at(i, j)};
    return std::nullopt;
}

inline LawWitness from_consistency(const ConsistencyWitness& w) {
    return LawWitness{"(" + w.first + "," + w.second + ")@" + w.probe, w.lhs, w.rhs};
}

/// Runs `body` on the instance's element if present, else on every element
/// of r's universe, returning the first witness found.
template <typename Body>
std::optional<LawWitness> each_element(const Instance& inst, Body body) {
    const Universe& u = *inst.r.universe();
    if (inst.x) return body(u.index_of(*inst.x));
    for (std::size_t x = 0; x < u.size(); ++x)
        if (auto w = body(x)) return w;
    return std::nullopt;
}

// FNV-1a; std::hash is not portable across standard libraries.
inline std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Instance builders shared by the per-law generators.
// ---------------------------------------------------------------------------

namespace gen {

inline UniversePtr universe(RandomSource& rng, const GenConfig& cfg) {
    const std::size_t span = cfg.max_size - cfg.min_size + 1;
    return make_indexed_universe(cfg.min_size + rng.below(span));
}

inline FuzzyRelation relation(RandomSource& rng, const UniversePtr& u, const GenConfig& cfg,
                              RelationFlags flags = {}) {
    return random_relation(rng, u, cfg.alphabet, cfg.density, flags);
}

/// Random total mapping onto a fresh codomain of size 1..|U|; small
/// codomains make image collisions (shared kernel classes) frequent.
inline UniverseMapping plain_mapping(RandomSource& rng, const UniversePtr& domain) {
    const std::size_t m = 1 + rng.below(domain->size());
    UniversePtr codomain = make_indexed_universe(m, "v");
    std::vector<std::size_t> assignment;
    assignment.reserve(domain->size());
    for (std::size_t i = 0; i < domain->size(); ++i) assignment.push_back(rng.below(m));
    return UniverseMapping(domain, codomain, std::move(assignment));
}

/// R(z, x) depends only on (z, f(x)): f is predecessor-consistent w.r.t.
/// the result by construction.
inline FuzzyRelation column_lifted(RandomSource& rng, const UniverseMapping& f,
                                   const GenConfig& cfg) {
    const std::size_t n = f.domain()->size();
    const std::size_t m = f.codomain()->size();
    std::vector<Grade> lifted(n * m, Grade::zero());
    for (auto& g : lifted)
        if (rng.chance(cfg.density)) g = cfg.alphabet[rng.below(cfg.alphabet.size())];
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t x = 0; x < n; ++x)
            grades.push_back(lifted[z * m + f.apply_index(x)]);
    return FuzzyRelation(f.domain(), std::move(grades));
}

/// R(x, z) depends only on (f(x), z): f is successor-consistent w.r.t. the
/// result by construction.
inline FuzzyRelation row_lifted(RandomSource& rng, const UniverseMapping& f,
                                const GenConfig& cfg) {
    const std::size_t n = f.domain()->size();
    const std::size_t m = f.codomain()->size();
    std::vector<Grade> lifted(m * n, Grade::zero());
    for (auto& g : lifted)
        if (rng.chance(cfg.density)) g = cfg.alphabet[rng.below(cfg.alphabet.size())];
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z)
            grades.push_back(lifted[f.apply_index(x) * n + z]);
    return FuzzyRelation(f.domain(), std::move(grades));
}

/// R = inverse image of a random codomain relation: f is both predecessor-
/// and successor-consistent w.r.t. the result by construction.
inline FuzzyRelation block_lifted(RandomSource& rng, const UniverseMapping& f,
                                  const GenConfig& cfg) {
    return preimage_relation(f, relation(rng, f.codomain(), cfg));
}

inline std::optional<std::string> maybe_element(RandomSource& rng, const UniversePtr& u) {
    if (rng.chance(0.5)) return std::nullopt;
    return u->label(rng.below(u->size()));
}

} // namespace gen

// ---------------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------------

/// All catalog entries, full laws first, weakened variants last.
const std::vector<LawSpec>& law_catalog();

/// Lookup by id. ASCII aliases "T3.3=>" and "T3.3<=" resolve to the arrow
/// ids. Throws ParameterError for unknown ids.
inline const LawSpec& find_law(const std::string& id) {
    std::string wanted = id;
    if (wanted == "T3.3=>") wanted = "T3.3⇒";
    if (wanted == "T3.3<=") wanted = "T3.3⇐";
    for (const auto& law : law_catalog())
        if (law.id == wanted) return law;
    throw ParameterError("unknown law id '" + id + "'");
}

/// Evaluates one law on one instance: hypothesis first (false -> Vacuous),
/// then the conclusion exactly, with a deterministic first-in-scan-order
/// witness on failure.
inline Verdict check_law(const LawSpec& law, const Instance& inst) {
    if (law.needs_f && !inst.f)
        throw MissingComponent("law " + law.id + " requires a mapping component");
    if (law.needs_q && !inst.q)
        throw MissingComponent("law " + law.id + " requires a second relation");
    if (law.hypothesis && !law.hypothesis(inst)) return {LawStatus::Vacuous, std::nullopt};
    if (auto witness = law.conclusion(inst)) return {LawStatus::Violated, std::move(witness)};
    return {LawStatus::Holds, std::nullopt};
}

// ---------------------------------------------------------------------------
// Suite runner and counterexample search.
// ---------------------------------------------------------------------------

struct LawRunStats {
    std::string id;
    std::uint64_t trials = 0;
    std::uint64_t holds = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t violated = 0;
    std::optional<std::uint64_t> first_violation_trial;
    std::optional<Instance> first_violation;
    std::optional<LawWitness> first_witness;
};

/**
 * Runs `trials` seeded instances through the law. Every trial derives its
 * own generator from (seed, law id, trial index), so results are
 * bit-identical regardless of evaluation order and the reported violation
 * is always the one with the smallest trial index.
 */
inline LawRunStats run_law(const LawSpec& law, std::uint64_t trials, std::uint64_t seed,
                           const GenConfig& cfg = {}) {
    LawRunStats stats;
    stats.id = law.id;
    stats.trials = trials;
    const std::uint64_t base = detail::mix_seed(seed, detail::fnv1a(law.id));
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomSource rng(detail::mix_seed(base, t));
        Instance inst = law.generate(rng, cfg);
        const Verdict verdict = check_law(law, inst);
        switch (verdict.status) {
        case LawStatus::Holds: ++stats.holds; break;
        case LawStatus::Vacuous: ++stats.vacuous; break;
        case LawStatus::Violated:
            ++stats.violated;
            if (!stats.first_violation_trial) {
                stats.first_violation_trial = t;
                stats.first_violation = std::move(inst);
                stats.first_witness = verdict.witness;
            }
            break;
        }
    }
    return stats;
}

struct CounterexampleResult {
    std::optional<Instance> instance;
    std::optional<LawWitness> witness;
    std::uint64_t trial_index = 0;
    std::uint64_t trials_run = 0;
};

/**
 * Seeded search for an instance that satisfies the law's (possibly
 * weakened) hypothesis yet fails its conclusion. Vacuous trials do not
 * count as counterexamples. Returns the first hit or nothing.
 */
inline CounterexampleResult search_counterexample(const LawSpec& law, std::uint64_t trials,
                                                  std::uint64_t seed,
                                                  const GenConfig& cfg = {}) {
    if (trials < 1) throw ParameterError("counterexample search needs at least one trial");
    const std::uint64_t base = detail::mix_seed(seed, detail::fnv1a(law.id));
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomSource rng(detail::mix_seed(base, t));
        Instance inst = law.generate(rng, cfg);
        const Verdict verdict = check_law(law, inst);
        if (verdict.status == LawStatus::Violated)
            return {std::move(inst), verdict.witness, t, t + 1};
    }
    return {std::nullopt, std::nullopt, 0, trials};
}

/**
 * Stored counterexample instances for the weakened catalog entries, kept
 * as regression anchors: they must stay violations of their law.
 */
inline std::optional<Instance> known_witness(const std::string& law_id) {
    const auto g = [](const char* text) { return Grade::parse(text); };
    if (law_id == "W-T3.3-pred") {
        // Eight-element relation whose quotient under "merge the 2nd and
        // 3rd elements" is predecessor-consistent but not successor-
        // consistent: the round trip bumps one grade from 0.8 to 0.9.
        UniversePtr u = Universe::make({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"});
        UniversePtr v = Universe::make({"y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8"});
        FuzzyRelation r = FuzzyRelation::from_terms(
            u, {{"x1", "x2", g("1")},   {"x1", "x3", g("1")},   {"x2", "x4", g("0.8")},
                {"x2", "x5", g("0.8")}, {"x3", "x4", g("0.9")}, {"x3", "x5", g("0.8")},
                {"x4", "x6", g("0.7")}, {"x4", "x7", g("0.7")}, {"x5", "x6", g("0.7")},
                {"x5", "x7", g("0.7")}, {"x6", "x8", g("0.9")}, {"x7", "x8", g("0.9")}});
        UniverseMapping f(u, v,
                          {{"x1", "y1"},
                           {"x2", "y2"},
                           {"x3", "y2"},
                           {"x4", "y4"},
                           {"x5", "y5"},
                           {"x6", "y6"},
                           {"x7", "y7"},
                           {"x8", "y8"}});
        return Instance{std::move(r), std::nullopt, std::move(f), std::nullopt};
    }
    if (law_id == "W-T3.2") {
        // Two elements collapsing to one: the image of the meet is 0 at
        // (v1, v1) while the meet of the images is 1.
        UniversePtr u = Universe::make({"a", "b"});
        UniversePtr v = Universe::make({"v1"});
        FuzzyRelation r = FuzzyRelation::from_terms(u, {{"a", "a", g("1")}});
        FuzzyRelation q = FuzzyRelation::from_terms(u, {{"b", "b", g("1")}});
        UniverseMapping f(u, v, {{"a", "v1"}, {"b", "v1"}});
        return Instance{std::move(r), std::move(q), std::move(f), std::nullopt};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Catalog definition.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<LawSpec> build_catalog() {
    using Inst = Instance;
    std::vector<LawSpec> laws;

    const auto pred_of = [](const Inst& i, const FuzzyRelation& r) {
        return classify(*i.f, r).pred_consistent;
    };
    const auto succ_of = [](const Inst& i, const FuzzyRelation& r) {
        return classify(*i.f, r).succ_consistent;
    };

    // -- Neighborhood/inverse identities ------------------------------------

    const auto nbhd_swap_law = [](NeighborhoodKind direct, NeighborhoodKind flipped) {
        return [direct, flipped](const Inst& inst) {
            const FuzzyRelation inv = inverse(inst.r);
            return detail::each_element(inst, [&](std::size_t x) {
                return detail::diff_sets(neighborhood(inst.r, x, direct),
                                         neighborhood(inv, x, flipped),
                                         "x=" + inst.r.universe()->label(x));
            });
        };
    };
    const auto plain_rx = [](RandomSource& rng, const GenConfig& cfg) {
        UniversePtr u = gen::universe(rng, cfg);
        FuzzyRelation r = gen::relation(rng, u, cfg);
        return Inst{std::move(r), std::nullopt, std::nullopt, gen::maybe_element(rng, u)};
    };
    laws.push_back({"EQ1",
                    "predecessor neighborhood under R equals successor neighborhood "
                    "under the inverse of R",
                    false, false, false, nullptr,
                    nbhd_swap_law(NeighborhoodKind::Pred, NeighborhoodKind::Succ), plain_rx});
    laws.push_back({"EQ2",
                    "successor neighborhood under R equals predecessor neighborhood "
                    "under the inverse of R",
                    false, false, false, nullptr,
                    nbhd_swap_law(NeighborhoodKind::Succ, NeighborhoodKind::Pred), plain_rx});

    // -- Neighborhoods distribute over union/intersection --------------------

    enum class Combine { Join, Meet };
    const auto nbhd_distrib_law = [](Combine op, NeighborhoodKind kind) {
        return [op, kind](const Inst& inst) {
            const FuzzyRelation combined =
                op == Combine::Join ? join(inst.r, *inst.q) : meet(inst.r, *inst.q);
            return detail::each_element(inst, [&](std::size_t x) {
                const FuzzySet a = neighborhood(inst.r, x, kind);
                const FuzzySet b = neighborhood(*inst.q, x, kind);
                return detail::diff_sets(neighborhood(combined, x, kind),
                                         op == Combine::Join ? join(a, b) : meet(a, b),
                                         "x=" + inst.r.universe()->label(x));
            });
        };
    };
    const auto plain_rqx = [](RandomSource& rng, const GenConfig& cfg) {
        UniversePtr u = gen::universe(rng, cfg);
        FuzzyRelation r = gen::relation(rng, u, cfg);
        FuzzyRelation q = gen::relation(rng, u, cfg);
        return Inst{std::move(r), std::move(q), std::nullopt, gen::maybe_element(rng, u)};
    };
    laws.push_back({"EQ3", "predecessor neighborhoods distribute over relation union",
                    true, false, false, nullptr,
                    nbhd_distrib_law(Combine::Join, NeighborhoodKind::Pred), plain_rqx});
    laws.push_back({"EQ4", "successor neighborhoods distribute over relation union",
                    true, false, false, nullptr,
                    nbhd_distrib_law(Combine::Join, NeighborhoodKind::Succ), plain_rqx});
    laws.push_back({"EQ5", "predecessor neighborhoods distribute over relation intersection",
                    true, false, false, nullptr,
                    nbhd_distrib_law(Combine::Meet, NeighborhoodKind::Pred), plain_rqx});
    laws.push_back({"EQ6", "successor neighborhoods distribute over relation intersection",
                    true, false, false, nullptr,
                    nbhd_distrib_law(Combine::Meet, NeighborhoodKind::Succ), plain_rqx});

    // -- Consistency equivalences --------------------------------------------

    const auto plain_rf = [](RandomSource& rng, const GenConfig& cfg) {
        UniversePtr u = gen::universe(rng, cfg);
        FuzzyRelation r = gen::relation(rng, u, cfg);
        UniverseMapping f = gen::plain_mapping(rng, u);
        return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
    };
    // Mixes consistent projections in so both sides of the biconditionals
    // get exercised with true antecedents.
    const auto mixed_rf = [](RandomSource& rng, const GenConfig& cfg) {
        UniversePtr u = gen::universe(rng, cfg);
        FuzzyRelation r = gen::relation(rng, u, cfg);
        std::optional<UniverseMapping> f;
        switch (rng.below(4)) {
        case 0: f = gen::plain_mapping(rng, u); break;
        case 1: f = random_consistent_mapping(rng, r, ConsistencyMode::Pred); break;
        case 2: f = random_consistent_mapping(rng, r, ConsistencyMode::Succ); break;
        default: f = random_consistent_mapping(rng, r, ConsistencyMode::Both); break;
        }
        return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
    };

    laws.push_back(
        {"T2.1",
         "blockwise consistency is exactly predecessor- plus successor-consistency",
         false, true, false, nullptr,
         [](const Inst& inst) -> std::optional<LawWitness> {
             const ConsistencyReport rep = classify(*inst.f, inst.r);
             if (rep.blockwise_consistent == (rep.pred_consistent && rep.succ_consistent))
                 return std::nullopt;
             if (rep.blockwise_witness) return detail::from_consistency(*rep.blockwise_witness);
             if (rep.pred_witness) return detail::from_consistency(*rep.pred_witness);
             return detail::from_consistency(*rep.succ_witness);
         },
         mixed_rf});

    laws.push_back(
        {"P2.1",
         "consistency sides swap under relation inversion",
         false, true, false, nullptr,
         [](const Inst& inst) -> std::optional<LawWitness> {
             const ConsistencyReport direct = classify(*inst.f, inst.r);
             const ConsistencyReport flipped = classify(*inst.f, inverse(inst.r));
             if (direct.pred_consistent != flipped.succ_consistent) {
                 const auto& w = direct.pred_witness ? *direct.pred_witness
                                                     : *flipped.succ_witness;
                 return detail::from_consistency(w);
             }
             if (direct.succ_consistent != flipped.pred_consistent) {
                 const auto& w = direct.succ_witness ? *direct.succ_witness
                                                     : *flipped.pred_witness;
                 return detail::from_consistency(w);
             }
             return std::nullopt;
         },
         mixed_rf});

    const auto pred_iff_succ = [](const Inst& inst) -> std::optional<LawWitness> {
        const ConsistencyReport rep = classify(*inst.f, inst.r);
        if (rep.pred_consistent == rep.succ_consistent) return std::nullopt;
        const auto& w = rep.pred_witness ? *rep.pred_witness : *rep.succ_witness;
        return detail::from_consistency(w);
    };
    laws.push_back({"C2.1",
                    "over a symmetric relation, predecessor- and successor-consistency "
                    "coincide",
                    false, true, false,
                    [](const Inst& inst) {
                        return check_property(inst.r, RelationProperty::Symmetric).holds;
                    },
                    pred_iff_succ,
                    [](RandomSource& rng, const GenConfig& cfg) {
                        UniversePtr u = gen::universe(rng, cfg);
                        FuzzyRelation r =
                            gen::relation(rng, u, cfg, {.symmetric = true});
                        std::optional<UniverseMapping> f =
                            rng.chance(0.5)
                                ? gen::plain_mapping(rng, u)
                                : random_consistent_mapping(rng, r, ConsistencyMode::Pred);
                        return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
                    }});

    const auto refl_trans = [](const Inst& inst) {
        return check_property(inst.r, RelationProperty::Reflexive).holds &&
               check_property(inst.r, RelationProperty::Transitive).holds;
    };
    const auto gen_refl_trans_r = [](RandomSource& rng, const GenConfig& cfg) {
        UniversePtr u = gen::universe(rng, cfg);
        FuzzyRelation r =
            gen::relation(rng, u, cfg, {.reflexive = true, .transitive = true});
        return Inst{std::move(r), std::nullopt, std::nullopt, std::nullopt};
    };

    laws.push_back(
        {"L2.1",
         "over a reflexive transitive relation, equal columns and equal rows "
         "single out the same element pairs",
         false, false, false, refl_trans,
         [](const Inst& inst) -> std::optional<LawWitness> {
             const std::size_t n = inst.r.size();
             for (std::size_t x = 0; x < n; ++x) {
                 for (std::size_t y = x + 1; y < n; ++y) {
                     const FuzzySet cx = inst.r.column(x);
                     const FuzzySet cy = inst.r.column(y);
                     const FuzzySet rx = inst.r.row(x);
                     const FuzzySet ry = inst.r.row(y);
                     if ((cx == cy) == (rx == ry)) continue;
                     const std::string pair = "(" + inst.r.universe()->label(x) + "," +
                                              inst.r.universe()->label(y) + ")";
                     if (cx == cy) return detail::diff_sets(rx, ry, pair);
                     return detail::diff_sets(cx, cy, pair);
                 }
             }
             return std::nullopt;
         },
         gen_refl_trans_r});

    laws.push_back({"T2.2",
                    "over a reflexive transitive relation, predecessor- and "
                    "successor-consistency coincide",
                    false, true, false, refl_trans, pred_iff_succ,
                    [](RandomSource& rng, const GenConfig& cfg) {
                        UniversePtr u = gen::universe(rng, cfg);
                        FuzzyRelation r = gen::relation(
                            rng, u, cfg, {.reflexive = true, .transitive = true});
                        std::optional<UniverseMapping> f =
                            rng.chance(0.5)
                                ? gen::plain_mapping(rng, u)
                                : random_consistent_mapping(rng, r, ConsistencyMode::Pred);
                        return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
                    }});

    // -- Images of neighborhoods under mappings -------------------------------

    // Image of the meet-relation neighborhood splits when the mapping is
    // consistent on the opposite side for at least one operand.
    const auto meet_nbhd_law = [](NeighborhoodKind kind) {
        return [kind](const Inst& inst) {
            const FuzzyRelation combined = meet(inst.r, *inst.q);
            return detail::each_element(inst, [&](std::size_t x) {
                const FuzzySet lhs = image_set(*inst.f, neighborhood(combined, x, kind));
                const FuzzySet rhs =
                    meet(image_set(*inst.f, neighborhood(inst.r, x, kind)),
                         image_set(*inst.f, neighborhood(*inst.q, x, kind)));
                return detail::diff_sets(lhs, rhs, "x=" + inst.r.universe()->label(x));
            });
        };
    };
    const auto gen_lifted_pair = [](bool lift_columns) {
        return [lift_columns](RandomSource& rng, const GenConfig& cfg) {
            UniversePtr u = gen::universe(rng, cfg);
            UniverseMapping f = gen::plain_mapping(rng, u);
            FuzzyRelation r = rng.chance(0.25)
                                  ? gen::relation(rng, u, cfg)
                                  : (lift_columns ? gen::column_lifted(rng, f, cfg)
                                                  : gen::row_lifted(rng, f, cfg));
            FuzzyRelation q = gen::relation(rng, u, cfg);
            if (rng.chance(0.5)) std::swap(r, q);
            return Inst{std::move(r), std::move(q), std::move(f),
                        gen::maybe_element(rng, u)};
        };
    };
    laws.push_back({"T2.3a",
                    "successor neighborhoods of an intersection map through f "
                    "when f is predecessor-consistent for either operand",
                    true, true, false,
                    [pred_of](const Inst& inst) {
                        return pred_of(inst, inst.r) || pred_of(inst, *inst.q);
                    },
                    meet_nbhd_law(NeighborhoodKind::Succ), gen_lifted_pair(true)});
    laws.push_back({"T2.3b",
                    "predecessor neighborhoods of an intersection map through f "
                    "when f is successor-consistent for either operand",
                    true, true, false,
                    [succ_of](const Inst& inst) {
                        return succ_of(inst, inst.r) || succ_of(inst, *inst.q);
                    },
                    meet_nbhd_law(NeighborhoodKind::Pred), gen_lifted_pair(false)});

    // Union-relation neighborhoods split under every mapping.
    const auto join_nbhd_law = [](NeighborhoodKind kind) {
        return [kind](const Inst& inst) {
            const FuzzyRelation combined = join(inst.r, *inst.q);
            return detail::each_element(inst, [&](std::size_t x) {
                const FuzzySet lhs = image_set(*inst.f, neighborhood(combined, x, kind));
                const FuzzySet rhs =
                    join(image_set(*inst.f, neighborhood(inst.r, x, kind)),
                         image_set(*inst.f, neighborhood(*inst.q, x, kind)));
                return detail::diff_sets(lhs, rhs, "x=" + inst.r.universe()->label(x));
            });
        };
    };
    const auto plain_rqfx = [](RandomSource& rng, const GenConfig& cfg) {
        UniversePtr u = gen::universe(rng, cfg);
        FuzzyRelation r = gen::relation(rng, u, cfg);
        FuzzyRelation q = gen::relation(rng, u, cfg);
        UniverseMapping f = gen::plain_mapping(rng, u);
        return Inst{std::move(r), std::move(q), std::move(f), gen::maybe_element(rng, u)};
    };
    laws.push_back({"P2.2a",
                    "predecessor neighborhoods of a union map through every f",
                    true, true, false, nullptr, join_nbhd_law(NeighborhoodKind::Pred),
                    plain_rqfx});
    laws.push_back({"P2.2b",
                    "successor neighborhoods of a union map through every f",
                    true, true, false, nullptr, join_nbhd_law(NeighborhoodKind::Succ),
                    plain_rqfx});

    // -- Round-trip characterizations of consistency --------------------------

    const auto roundtrip_char_law = [](bool pred_side) {
        return [pred_side](const Inst& inst) -> std::optional<LawWitness> {
            const ConsistencyReport rep = classify(*inst.f, inst.r);
            const bool flag = pred_side ? rep.pred_consistent : rep.succ_consistent;
            std::optional<LawWitness> roundtrip_diff;
            for (std::size_t x = 0; x < inst.r.size() && !roundtrip_diff; ++x) {
                const FuzzySet nb = pred_side ? inst.r.row(x) : inst.r.column(x);
                roundtrip_diff = detail::diff_sets(
                    preimage_set(*inst.f, image_set(*inst.f, nb)), nb,
                    "x=" + inst.r.universe()->label(x));
            }
            if (flag == !roundtrip_diff) return std::nullopt;
            if (roundtrip_diff) return roundtrip_diff;
            const auto& w = pred_side ? *rep.pred_witness : *rep.succ_witness;
            return detail::from_consistency(w);
        };
    };
    laws.push_back({"T2.4a",
                    "predecessor-consistency is exactly: every successor neighborhood "
                    "survives the image/preimage round trip",
                    false, true, false, nullptr, roundtrip_char_law(true), mixed_rf});
    laws.push_back({"T2.4b",
                    "successor-consistency is exactly: every predecessor neighborhood "
                    "survives the image/preimage round trip",
                    false, true, false, nullptr, roundtrip_char_law(false), mixed_rf});

    // -- Transitivity transport ------------------------------------------------

    const auto image_transitive = [](const Inst& inst) -> std::optional<LawWitness> {
        const FuzzyRelation mapped = image_relation(*inst.f, inst.r);
        const PropertyCheck check = check_property(mapped, RelationProperty::Transitive);
        if (check.holds) return std::nullopt;
        const auto& w = check.witness;
        const Grade via = grade_min(mapped.grade(w[0], w[1]), mapped.grade(w[1], w[2]));
        return LawWitness{"(" + w[0] + "," + w[1] + "," + w[2] + ")",
                          mapped.grade(w[0], w[2]), via};
    };
    const auto gen_transitive_consistent = [](ConsistencyMode mode) {
        return [mode](RandomSource& rng, const GenConfig& cfg) {
            UniversePtr u = gen::universe(rng, cfg);
            FuzzyRelation r = gen::relation(rng, u, cfg, {.transitive = true});
            std::optional<UniverseMapping> f = rng.chance(0.25)
                                                   ? gen::plain_mapping(rng, u)
                                                   : random_consistent_mapping(rng, r, mode);
            return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
        };
    };
    laws.push_back({"T3.1a",
                    "images of transitive relations stay transitive under "
                    "predecessor-consistent mappings",
                    false, true, false,
                    [pred_of](const Inst& inst) {
                        return check_property(inst.r, RelationProperty::Transitive).holds &&
                               pred_of(inst, inst.r);
                    },
                    image_transitive, gen_transitive_consistent(ConsistencyMode::Pred)});
    laws.push_back({"T3.1b",
                    "images of transitive relations stay transitive under "
                    "successor-consistent mappings",
                    false, true, false,
                    [succ_of](const Inst& inst) {
                        return check_property(inst.r, RelationProperty::Transitive).holds &&
                               succ_of(inst, inst.r);
                    },
                    image_transitive, gen_transitive_consistent(ConsistencyMode::Succ)});

    // -- Images of intersections -----------------------------------------------

    const auto image_meet_law = [](const Inst& inst) -> std::optional<LawWitness> {
        const FuzzyRelation lhs = image_relation(*inst.f, meet(inst.r, *inst.q));
        const FuzzyRelation rhs =
            meet(image_relation(*inst.f, inst.r), image_relation(*inst.f, *inst.q));
        return detail::diff_relations(lhs, rhs);
    };
    // Generators choose lifted constructions matching each hypothesis variant.
    enum class LiftKind { Block, Column, Row, Plain };
    const auto gen_lift = [](RandomSource& rng, const GenConfig& cfg,
                             const UniverseMapping& f, LiftKind kind) {
        switch (kind) {
        case LiftKind::Block: return gen::block_lifted(rng, f, cfg);
        case LiftKind::Column: return gen::column_lifted(rng, f, cfg);
        case LiftKind::Row: return gen::row_lifted(rng, f, cfg);
        case LiftKind::Plain: break;
        }
        return gen::relation(rng, f.domain(), cfg);
    };
    const auto gen_meet_pair = [gen_lift](LiftKind for_r, LiftKind for_q) {
        return [gen_lift, for_r, for_q](RandomSource& rng, const GenConfig& cfg) {
            UniversePtr u = gen::universe(rng, cfg);
            UniverseMapping f = gen::plain_mapping(rng, u);
            const bool plain = rng.chance(0.25);
            FuzzyRelation r = gen_lift(rng, cfg, f, plain ? LiftKind::Plain : for_r);
            FuzzyRelation q = gen_lift(rng, cfg, f, plain ? LiftKind::Plain : for_q);
            return Inst{std::move(r), std::move(q), std::move(f), std::nullopt};
        };
    };
    laws.push_back({"T3.2.1",
                    "images commute with intersection when f is both-consistent "
                    "for the first operand",
                    true, true, false,
                    [pred_of, succ_of](const Inst& inst) {
                        return pred_of(inst, inst.r) && succ_of(inst, inst.r);
                    },
                    image_meet_law, gen_meet_pair(LiftKind::Block, LiftKind::Plain)});
    laws.push_back({"T3.2.2",
                    "images commute with intersection when f is both-consistent "
                    "for the second operand",
                    true, true, false,
                    [pred_of, succ_of](const Inst& inst) {
                        return pred_of(inst, *inst.q) && succ_of(inst, *inst.q);
                    },
                    image_meet_law, gen_meet_pair(LiftKind::Plain, LiftKind::Block)});
    laws.push_back({"T3.2.3",
                    "images commute with intersection when f is predecessor-consistent "
                    "for the first operand and successor-consistent for the second",
                    true, true, false,
                    [pred_of, succ_of](const Inst& inst) {
                        return pred_of(inst, inst.r) && succ_of(inst, *inst.q);
                    },
                    image_meet_law, gen_meet_pair(LiftKind::Column, LiftKind::Row)});
    laws.push_back({"T3.2.4",
                    "images commute with intersection when f is successor-consistent "
                    "for the first operand and predecessor-consistent for the second",
                    true, true, false,
                    [pred_of, succ_of](const Inst& inst) {
                        return succ_of(inst, inst.r) && pred_of(inst, *inst.q);
                    },
                    image_meet_law, gen_meet_pair(LiftKind::Row, LiftKind::Column)});

    // -- Lossless reconstruction ------------------------------------------------

    const auto gen_both_consistent = [](RandomSource& rng, const GenConfig& cfg) {
        UniversePtr u = gen::universe(rng, cfg);
        if (rng.chance(0.5)) {
            UniverseMapping f = gen::plain_mapping(rng, u);
            FuzzyRelation r = rng.chance(0.25) ? gen::relation(rng, u, cfg)
                                               : gen::block_lifted(rng, f, cfg);
            return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
        }
        FuzzyRelation r = gen::relation(rng, u, cfg);
        UniverseMapping f = random_consistent_mapping(rng, r, ConsistencyMode::Both);
        return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
    };
    laws.push_back({"T3.3⇒",
                    "both-consistency makes the image/preimage round trip exact",
                    false, true, false,
                    [](const Inst& inst) { return classify(*inst.f, inst.r).both(); },
                    [](const Inst& inst) {
                        return detail::diff_relations(
                            preimage_relation(*inst.f, image_relation(*inst.f, inst.r)),
                            inst.r);
                    },
                    gen_both_consistent});
    laws.push_back({"T3.3⇐",
                    "an exact image/preimage round trip forces both-consistency",
                    false, true, false,
                    [](const Inst& inst) { return verify_roundtrip(*inst.f, inst.r).equal; },
                    [](const Inst& inst) -> std::optional<LawWitness> {
                        const ConsistencyReport rep = classify(*inst.f, inst.r);
                        if (rep.both()) return std::nullopt;
                        const auto& w =
                            rep.pred_witness ? *rep.pred_witness : *rep.succ_witness;
                        return detail::from_consistency(w);
                    },
                    gen_both_consistent});

    // -- Neighborhoods of image relations ----------------------------------------

    const auto image_nbhd_law = [](NeighborhoodKind kind, ConsistencyMode mode) {
        return [kind, mode](const Inst& inst) -> std::optional<LawWitness> {
            const UniverseMapping& f = *inst.f;
            const FuzzyRelation mapped = image_relation(f, inst.r);
            const ConsistencyReport rep = classify(f, inst.r);
            const bool consistent = mode == ConsistencyMode::Pred ? rep.pred_consistent
                                                                  : rep.succ_consistent;
            for (std::size_t y = 0; y < f.codomain()->size(); ++y) {
                const std::string context = "y=" + f.codomain()->label(y);
                FuzzySet expected = FuzzySet::zero(f.codomain());
                for (const std::size_t x : f.fiber_indices(y))
                    expected = join(expected, image_set(f, neighborhood(inst.r, x, kind)));
                if (auto w = detail::diff_sets(neighborhood(mapped, y, kind), expected,
                                               context))
                    return w;
                if (!consistent) continue;
                // With the matching consistency, any single fiber member
                // already determines the neighborhood.
                for (const std::size_t x : f.fiber_indices(y)) {
                    if (auto w = detail::diff_sets(
                            neighborhood(mapped, y, kind),
                            image_set(f, neighborhood(inst.r, x, kind)), context))
                        return w;
                }
            }
            return std::nullopt;
        };
    };
    laws.push_back({"T3.4a",
                    "predecessor neighborhoods in the image are fiberwise unions of "
                    "mapped source neighborhoods",
                    false, true, false, nullptr,
                    image_nbhd_law(NeighborhoodKind::Pred, ConsistencyMode::Pred),
                    mixed_rf});
    laws.push_back({"T3.4b",
                    "successor neighborhoods in the image are fiberwise unions of "
                    "mapped source neighborhoods",
                    false, true, false, nullptr,
                    image_nbhd_law(NeighborhoodKind::Succ, ConsistencyMode::Succ),
                    mixed_rf});

    // -- Weakened variants (expected to be violable) ------------------------------

    laws.push_back({"W-T3.3-pred",
                    "weakened round-trip law: predecessor-consistency alone",
                    false, true, true,
                    [](const Inst& inst) { return classify(*inst.f, inst.r).pred_consistent; },
                    [](const Inst& inst) {
                        return detail::diff_relations(
                            preimage_relation(*inst.f, image_relation(*inst.f, inst.r)),
                            inst.r);
                    },
                    [](RandomSource& rng, const GenConfig& cfg) {
                        UniversePtr u = gen::universe(rng, cfg);
                        UniverseMapping seed_map = gen::plain_mapping(rng, u);
                        FuzzyRelation r = rng.chance(0.5)
                                              ? gen::column_lifted(rng, seed_map, cfg)
                                              : gen::relation(rng, u, cfg);
                        UniverseMapping f =
                            random_consistent_mapping(rng, r, ConsistencyMode::Pred);
                        return Inst{std::move(r), std::nullopt, std::move(f), std::nullopt};
                    }});
    laws.push_back({"W-T3.2",
                    "weakened intersection-image law: no consistency hypothesis",
                    true, true, true, nullptr, image_meet_law, plain_rqfx});

    return laws;
}

} // namespace detail

inline const std::vector<LawSpec>& law_catalog() {
    static const std::vector<LawSpec> catalog = detail::build_catalog();
    return catalog;
}

} // namespace fuzzrel::laws

#endif // FUZZREL_LAWCHECK_HPP
