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
 * Seeded, deterministic generation of structured random instances.
 *
 * The draws go through RandomSource rather than <random> distributions so
 * identical seeds produce bit-identical values on every platform and
 * standard library. Structured relation generation can impose reflexivity,
 * symmetry and max-min transitivity; the generator re-asserts every
 * requested flag on its output and iterates symmetrize/close to a joint
 * fixed point when needed (termination: grades come from a finite alphabet
 * and each step is pointwise non-decreasing).
 */

#ifndef FUZZREL_RANDOM_HPP
#define FUZZREL_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fuzzrel/consistency.hpp"
#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/universe.hpp"

namespace fuzzrel {

/// mt19937_64 wrapper with platform-independent bounded draws.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, bound). bound must be positive.
    std::size_t below(std::size_t bound) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(engine_()) * bound) >> 64);
    }

    /// Uniform draw from [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double probability) { return unit() < probability; }

private:
    std::mt19937_64 engine_;
};

/// The 11-point grade alphabet 0, 0.1, ..., 1.0 used as the generation
/// default: coarse enough that equal grades collide often, which is what
/// exercises the equality-based hypotheses.
inline std::vector<Grade> default_grade_alphabet() {
    std::vector<Grade> alphabet;
    for (int i = 0; i <= 10; ++i)
        alphabet.push_back(Grade::from_ticks(i * (Grade::kDefaultScale / 10),
                                             Grade::kDefaultScale));
    return alphabet;
}

struct RelationFlags {
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
};

/// Universe with labels u1..un.
inline UniversePtr make_indexed_universe(std::size_t n, const std::string& prefix = "u") {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
    return Universe::make(labels);
}

/**
 * Seeded random relation over `universe`. Each pair independently receives
 * an alphabet draw with probability `density` and grade 0 otherwise, then
 * the requested structural flags are imposed: diagonal set to 1, symmetrized
 * by joining with the inverse, closed under max-min transitivity. The
 * symmetrize/close loop runs to a joint fixed point, and every requested
 * flag is re-checked before returning.
 */
inline FuzzyRelation random_relation(RandomSource& rng, const UniversePtr& universe,
                                     const std::vector<Grade>& alphabet, double density,
                                     RelationFlags flags = {}) {
    if (alphabet.empty()) throw ParameterError("grade alphabet must be nonempty");
    if (density < 0.0 || density > 1.0)
        throw ParameterError("density must lie in [0, 1]");

    const std::size_t n = universe->size();
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        if (rng.chance(density))
            grades.push_back(alphabet[rng.below(alphabet.size())]);
        else
            grades.push_back(Grade::zero());
    }
    FuzzyRelation r(universe, std::move(grades));

    if (flags.reflexive) r = join(r, FuzzyRelation::crisp_identity(universe));
    if (flags.symmetric) r = join(r, inverse(r));
    if (flags.transitive) {
        r = transitive_closure(r);
        while (flags.symmetric && !check_property(r, RelationProperty::Symmetric).holds)
            r = transitive_closure(join(r, inverse(r)));
    }

    if (flags.reflexive && !check_property(r, RelationProperty::Reflexive).holds)
        throw ParameterError("generator failed to impose reflexivity");
    if (flags.symmetric && !check_property(r, RelationProperty::Symmetric).holds)
        throw ParameterError("generator failed to impose symmetry");
    if (flags.transitive && !check_property(r, RelationProperty::Transitive).holds)
        throw ParameterError("generator failed to impose transitivity");
    return r;
}

/// Convenience overload: fresh n-element universe, explicit seed.
inline FuzzyRelation random_relation(std::size_t n, const std::vector<Grade>& alphabet,
                                     double density, RelationFlags flags,
                                     std::uint64_t seed) {
    if (n < 1) throw ParameterError("universe size must be at least 1");
    RandomSource rng(seed);
    return random_relation(rng, make_indexed_universe(n), alphabet, density, flags);
}

/**
 * Random partition refining `coarsest`: each coarsest block is split by a
 * sequential random assignment of members to existing or new sub-blocks.
 * Every refinement of the coarsest mode-partition projects to a
 * mode-consistent mapping, so the returned partition always does.
 */
inline Partition random_refinement(RandomSource& rng, const Partition& coarsest) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& block : coarsest.blocks()) {
        std::vector<std::vector<std::size_t>> sub;
        for (const std::size_t member : block) {
            // Place the member in one of the existing sub-blocks or a new
            // one, all equally likely.
            const std::size_t pick = rng.below(sub.size() + 1);
            if (pick == sub.size())
                sub.push_back({member});
            else
                sub[pick].push_back(member);
        }
        for (auto& s : sub) blocks.push_back(std::move(s));
    }
    return Partition(coarsest.universe(), std::move(blocks));
}

/**
 * Seeded random mapping that classify() reports consistent for `mode`:
 * the natural projection of a random partition lying between the identity
 * partition and the coarsest mode-partition of `r`.
 */
inline UniverseMapping random_consistent_mapping(RandomSource& rng, const FuzzyRelation& r,
                                                 ConsistencyMode mode) {
    const Partition coarsest = coarsest_consistent_partition(r, mode);
    return random_refinement(rng, coarsest).to_projection();
}

inline UniverseMapping random_consistent_mapping(const FuzzyRelation& r, ConsistencyMode mode,
                                                 std::uint64_t seed) {
    RandomSource rng(seed);
    return random_consistent_mapping(rng, r, mode);
}

} // namespace fuzzrel

#endif // FUZZREL_RANDOM_HPP
