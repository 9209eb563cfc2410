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
 * Multi-attribute fuzzy information systems: one named fuzzy relation per
 * attribute, all over a shared universe. System-level classification,
 * homomorphic images and lossless compression apply the single-relation
 * machinery attribute-wise; the compression partition groups elements by
 * the tuple of their signatures across all attributes.
 */

#ifndef FUZZREL_INFO_SYSTEM_HPP
#define FUZZREL_INFO_SYSTEM_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fuzzrel/consistency.hpp"
#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/mapping.hpp"

namespace fuzzrel {

class FuzzyInformationSystem {
public:
    /// Attribute order is preserved from input; names must be unique and
    /// every relation must live over the system universe.
    FuzzyInformationSystem(UniversePtr universe,
                           std::vector<std::pair<std::string, FuzzyRelation>> attributes)
        : universe_(std::move(universe)), attributes_(std::move(attributes)) {
        if (attributes_.empty())
            throw ParameterError("information system needs at least one attribute");
        std::vector<std::string> names;
        for (const auto& [name, rel] : attributes_) {
            require_same_universe(universe_, rel.universe(), "information system");
            names.push_back(name);
        }
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw ParameterError("duplicate attribute name in information system");
    }

    const UniversePtr& universe() const { return universe_; }
    const std::vector<std::pair<std::string, FuzzyRelation>>& attributes() const {
        return attributes_;
    }
    std::size_t attribute_count() const { return attributes_.size(); }

    const FuzzyRelation& attribute(const std::string& name) const {
        for (const auto& [n, rel] : attributes_)
            if (n == name) return rel;
        throw ParameterError("no attribute named '" + name + "'");
    }

    /// Equality is order-insensitive on attributes.
    friend bool operator==(const FuzzyInformationSystem& a, const FuzzyInformationSystem& b) {
        if (!same_universe(a.universe_, b.universe_)) return false;
        if (a.attributes_.size() != b.attributes_.size()) return false;
        auto sorted = [](const FuzzyInformationSystem& s) {
            auto copy = s.attributes_;
            std::sort(copy.begin(), copy.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            return copy;
        };
        const auto sa = sorted(a);
        const auto sb = sorted(b);
        for (std::size_t i = 0; i < sa.size(); ++i)
            if (sa[i].first != sb[i].first || sa[i].second != sb[i].second) return false;
        return true;
    }
    friend bool operator!=(const FuzzyInformationSystem& a, const FuzzyInformationSystem& b) {
        return !(a == b);
    }

private:
    UniversePtr universe_;
    std::vector<std::pair<std::string, FuzzyRelation>> attributes_;
};

struct SystemConsistencyReport {
    std::vector<std::pair<std::string, ConsistencyReport>> per_attribute;
    /// True iff every attribute is both predecessor- and successor-consistent.
    bool homomorphism = true;
};

/// One ConsistencyReport per attribute, in attribute order.
inline SystemConsistencyReport classify_system(const UniverseMapping& f,
                                               const FuzzyInformationSystem& s) {
    require_same_universe(f.domain(), s.universe(), "classify_system");
    SystemConsistencyReport report;
    for (const auto& [name, rel] : s.attributes()) {
        ConsistencyReport r = classify(f, rel);
        report.homomorphism = report.homomorphism && r.both();
        report.per_attribute.emplace_back(name, std::move(r));
    }
    return report;
}

struct SystemImage {
    FuzzyInformationSystem image;
    /// True iff the mapping was both-consistent for every attribute, i.e.
    /// the image reconstructs the source exactly.
    bool lossless = false;
};

/// Maps every attribute forward through f. Inconsistent mappings are not
/// refused: the image is computed anyway and flagged lossy.
inline SystemImage homomorphic_image(const UniverseMapping& f,
                                     const FuzzyInformationSystem& s) {
    require_same_universe(f.domain(), s.universe(), "homomorphic_image");
    std::vector<std::pair<std::string, FuzzyRelation>> mapped;
    bool lossless = true;
    for (const auto& [name, rel] : s.attributes()) {
        lossless = lossless && classify(f, rel).both();
        mapped.emplace_back(name, image_relation(f, rel));
    }
    return {FuzzyInformationSystem(f.codomain(), std::move(mapped)), lossless};
}

struct SystemCompressionResult {
    Partition partition;
    UniverseMapping projection;
    FuzzyInformationSystem image;
};

/**
 * Compresses the whole system at once: elements are grouped by the tuple of
 * their (column, row) signatures across all attributes, which is the common
 * refinement of the per-attribute both-mode partitions. The projection is
 * both-consistent for every attribute, so every attribute reconstructs
 * exactly from the image.
 */
inline SystemCompressionResult compress_system(const FuzzyInformationSystem& s) {
    const std::size_t n = s.universe()->size();
    std::map<std::vector<Grade>, std::vector<std::size_t>, detail::GradeVectorLess> groups;
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<Grade> sig;
        for (const auto& [name, rel] : s.attributes()) {
            const auto part = detail::signature(rel, x, ConsistencyMode::Both);
            sig.insert(sig.end(), part.begin(), part.end());
        }
        groups[std::move(sig)].push_back(x);
    }
    std::vector<std::vector<std::size_t>> blocks;
    blocks.reserve(groups.size());
    for (auto& [sig, members] : groups) blocks.push_back(std::move(members));
    Partition partition(s.universe(), std::move(blocks));
    UniverseMapping projection = partition.to_projection();
    std::vector<std::pair<std::string, FuzzyRelation>> mapped;
    for (const auto& [name, rel] : s.attributes())
        mapped.emplace_back(name, image_relation(projection, rel));
    FuzzyInformationSystem image(projection.codomain(), std::move(mapped));
    return {std::move(partition), std::move(projection), std::move(image)};
}

} // namespace fuzzrel

#endif // FUZZREL_INFO_SYSTEM_HPP
