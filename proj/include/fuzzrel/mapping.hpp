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
 * Total mappings between universes and the induced fuzzy-set and
 * fuzzy-relation mappings.
 *
 * The forward direction lifts f : U -> V to fuzzy sets by taking suprema
 * over fibers, and to relations by suprema over products of fibers; the
 * inverse direction substitutes through f. The supremum over an empty fiber
 * is 0, so a non-surjective codomain simply yields zero rows and columns.
 * Mappings must be total on their domain; partial assignments are rejected
 * at construction.
 */

#ifndef FUZZREL_MAPPING_HPP
#define FUZZREL_MAPPING_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/fuzzy_set.hpp"
#include "fuzzrel/universe.hpp"

namespace fuzzrel {

class UniverseMapping {
public:
    /// Builds a total mapping from (domain-label, codomain-label) pairs.
    UniverseMapping(UniversePtr domain, UniversePtr codomain,
                    const std::vector<std::pair<std::string, std::string>>& pairs)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {
        const std::size_t n = domain_->size();
        std::vector<bool> assigned(n, false);
        assignment_.assign(n, 0);
        for (const auto& [from, to] : pairs) {
            const std::size_t i = domain_->index_of(from);
            if (!codomain_->contains(to))
                throw ElementNotInUniverse("image '" + to + "' is not in the codomain");
            if (assigned[i])
                throw ParameterError("element '" + from + "' is mapped twice");
            assigned[i] = true;
            assignment_[i] = codomain_->index_of(to);
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!assigned[i])
                throw ParameterError("mapping is not total: element '" + domain_->label(i) +
                                     "' has no image");
        build_fibers();
    }

    /// Index-level constructor; assignment[i] is the codomain index of
    /// domain element i and must be total.
    UniverseMapping(UniversePtr domain, UniversePtr codomain,
                    std::vector<std::size_t> assignment)
        : domain_(std::move(domain)), codomain_(std::move(codomain)),
          assignment_(std::move(assignment)) {
        if (assignment_.size() != domain_->size())
            throw ParameterError("assignment size does not match domain size");
        for (const std::size_t j : assignment_)
            if (j >= codomain_->size())
                throw ParameterError("assignment image index out of range");
        build_fibers();
    }

    static UniverseMapping identity(const UniversePtr& universe) {
        std::vector<std::size_t> assignment(universe->size());
        for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = i;
        return UniverseMapping(universe, universe, std::move(assignment));
    }

    const UniversePtr& domain() const { return domain_; }
    const UniversePtr& codomain() const { return codomain_; }

    std::size_t apply_index(std::size_t i) const { return assignment_[i]; }
    const std::string& apply(const std::string& label) const {
        return codomain_->label(assignment_[domain_->index_of(label)]);
    }

    /// Domain indices mapping to codomain index j, ascending. May be empty.
    const std::vector<std::size_t>& fiber_indices(std::size_t j) const { return fibers_[j]; }

    /// Fiber of a codomain element: {x in domain : f(x) = y}.
    std::vector<std::string> fiber(const std::string& y) const {
        std::vector<std::string> out;
        for (const std::size_t i : fibers_[codomain_->index_of(y)])
            out.push_back(domain_->label(i));
        return out;
    }

    /// Kernel class of a domain element: all elements sharing its image.
    std::vector<std::string> kernel_class(const std::string& x) const {
        std::vector<std::string> out;
        for (const std::size_t i : fibers_[assignment_[domain_->index_of(x)]])
            out.push_back(domain_->label(i));
        return out;
    }

    bool surjective() const {
        for (const auto& f : fibers_)
            if (f.empty()) return false;
        return true;
    }

private:
    void build_fibers() {
        fibers_.assign(codomain_->size(), {});
        for (std::size_t i = 0; i < assignment_.size(); ++i)
            fibers_[assignment_[i]].push_back(i);
    }

    UniversePtr domain_;
    UniversePtr codomain_;
    std::vector<std::size_t> assignment_;          // domain index -> codomain index
    std::vector<std::vector<std::size_t>> fibers_; // codomain index -> domain indices
};

/// Forward image of a set: result(y) = max of A over the fiber of y.
inline FuzzySet image_set(const UniverseMapping& f, const FuzzySet& a) {
    require_same_universe(f.domain(), a.universe(), "image_set");
    std::vector<Grade> grades;
    grades.reserve(f.codomain()->size());
    for (std::size_t j = 0; j < f.codomain()->size(); ++j) {
        Grade best = Grade::zero();
        for (const std::size_t i : f.fiber_indices(j)) best = grade_max(best, a.grade_at(i));
        grades.push_back(best);
    }
    return FuzzySet(f.codomain(), std::move(grades));
}

/// Inverse image of a set: result(x) = B(f(x)).
inline FuzzySet preimage_set(const UniverseMapping& f, const FuzzySet& b) {
    require_same_universe(f.codomain(), b.universe(), "preimage_set");
    std::vector<Grade> grades;
    grades.reserve(f.domain()->size());
    for (std::size_t i = 0; i < f.domain()->size(); ++i)
        grades.push_back(b.grade_at(f.apply_index(i)));
    return FuzzySet(f.domain(), std::move(grades));
}

/// Forward image of a relation: result(y1, y2) = max of R over
/// fiber(y1) x fiber(y2); 0 when either fiber is empty.
inline FuzzyRelation image_relation(const UniverseMapping& f, const FuzzyRelation& r) {
    require_same_universe(f.domain(), r.universe(), "image_relation");
    const std::size_t m = f.codomain()->size();
    std::vector<Grade> grades;
    grades.reserve(m * m);
    for (std::size_t j1 = 0; j1 < m; ++j1) {
        for (std::size_t j2 = 0; j2 < m; ++j2) {
            Grade best = Grade::zero();
            for (const std::size_t i1 : f.fiber_indices(j1))
                for (const std::size_t i2 : f.fiber_indices(j2))
                    best = grade_max(best, r.at(i1, i2));
            grades.push_back(best);
        }
    }
    return FuzzyRelation(f.codomain(), std::move(grades));
}

/// Inverse image of a relation: result(x1, x2) = Q(f(x1), f(x2)).
inline FuzzyRelation preimage_relation(const UniverseMapping& f, const FuzzyRelation& q) {
    require_same_universe(f.codomain(), q.universe(), "preimage_relation");
    const std::size_t n = f.domain()->size();
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            grades.push_back(q.at(f.apply_index(i1), f.apply_index(i2)));
    return FuzzyRelation(f.domain(), std::move(grades));
}

} // namespace fuzzrel

#endif // FUZZREL_MAPPING_HPP
