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
 * Fuzzy binary relations over a finite universe.
 *
 * A FuzzyRelation is a square grade matrix stored densely in row-major
 * universe order; absent entries at construction read as 0. Lattice
 * operations, inversion, max-min composition, structural property checks
 * and transitive closure all live here. Everything is pure: inputs are
 * never modified and results are fresh values.
 */

#ifndef FUZZREL_FUZZY_RELATION_HPP
#define FUZZREL_FUZZY_RELATION_HPP

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fuzzrel/fuzzy_set.hpp"
#include "fuzzrel/grade.hpp"
#include "fuzzrel/universe.hpp"

namespace fuzzrel {

class FuzzyRelation {
public:
    /// The zero relation (all grades 0).
    static FuzzyRelation zero(UniversePtr universe) {
        const std::size_t n = universe->size();
        return FuzzyRelation(std::move(universe), std::vector<Grade>(n * n, Grade::zero()));
    }

    /// The crisp identity: grade 1 on the diagonal, 0 elsewhere.
    static FuzzyRelation crisp_identity(UniversePtr universe) {
        const std::size_t n = universe->size();
        std::vector<Grade> grades(n * n, Grade::zero());
        for (std::size_t i = 0; i < n; ++i) grades[i * n + i] = Grade::one();
        return FuzzyRelation(std::move(universe), std::move(grades));
    }

    /// Builds a relation from sparse (from, to, grade) terms.
    static FuzzyRelation from_terms(
        UniversePtr universe,
        const std::vector<std::tuple<std::string, std::string, Grade>>& terms) {
        const std::size_t n = universe->size();
        std::vector<Grade> grades(n * n, Grade::zero());
        std::vector<bool> seen(n * n, false);
        for (const auto& [from, to, grade] : terms) {
            const std::size_t i = universe->index_of(from);
            const std::size_t j = universe->index_of(to);
            if (seen[i * n + j])
                throw ParameterError("duplicate term for pair (" + from + ", " + to + ")");
            seen[i * n + j] = true;
            grades[i * n + j] = grade;
        }
        return FuzzyRelation(std::move(universe), std::move(grades));
    }

    /// Dense row-major constructor; `grades` must have size() == n*n.
    FuzzyRelation(UniversePtr universe, std::vector<Grade> grades)
        : universe_(std::move(universe)), grades_(std::move(grades)) {
        if (grades_.size() != universe_->size() * universe_->size())
            throw ParameterError("grade matrix size does not match universe size");
    }

    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return universe_->size(); }

    const Grade& at(std::size_t from, std::size_t to) const {
        return grades_[from * size() + to];
    }
    const Grade& grade(const std::string& from, const std::string& to) const {
        return at(universe_->index_of(from), universe_->index_of(to));
    }

    /// Row of `x` as a fuzzy set: y -> R(x, y).
    FuzzySet row(std::size_t x) const {
        const std::size_t n = size();
        std::vector<Grade> grades(grades_.begin() + x * n, grades_.begin() + (x + 1) * n);
        return FuzzySet(universe_, std::move(grades));
    }

    /// Column of `x` as a fuzzy set: y -> R(y, x).
    FuzzySet column(std::size_t x) const {
        const std::size_t n = size();
        std::vector<Grade> grades;
        grades.reserve(n);
        for (std::size_t y = 0; y < n; ++y) grades.push_back(at(y, x));
        return FuzzySet(universe_, std::move(grades));
    }

    /// Nonzero entries as (from, to, grade), row-major in universe order.
    std::vector<std::tuple<std::string, std::string, Grade>> nonzero_terms() const {
        std::vector<std::tuple<std::string, std::string, Grade>> out;
        const std::size_t n = size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!at(i, j).is_zero())
                    out.emplace_back(universe_->label(i), universe_->label(j), at(i, j));
        return out;
    }

    bool is_zero() const {
        for (const auto& g : grades_)
            if (!g.is_zero()) return false;
        return true;
    }

    /// True when every grade is 0 or 1.
    bool is_crisp() const {
        for (const auto& g : grades_)
            if (!g.is_crisp()) return false;
        return true;
    }

    friend bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
        if (!same_universe(a.universe_, b.universe_)) return false;
        for (std::size_t i = 0; i < a.grades_.size(); ++i)
            if (a.grades_[i] != b.grades_[i]) return false;
        return true;
    }
    friend bool operator!=(const FuzzyRelation& a, const FuzzyRelation& b) { return !(a == b); }

private:
    UniversePtr universe_;
    std::vector<Grade> grades_; // row-major, size n*n
};

inline FuzzyRelation join(const FuzzyRelation& a, const FuzzyRelation& b) {
    require_same_universe(a.universe(), b.universe(), "join");
    const std::size_t n = a.size();
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            grades.push_back(grade_max(a.at(i, j), b.at(i, j)));
    return FuzzyRelation(a.universe(), std::move(grades));
}

inline FuzzyRelation meet(const FuzzyRelation& a, const FuzzyRelation& b) {
    require_same_universe(a.universe(), b.universe(), "meet");
    const std::size_t n = a.size();
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            grades.push_back(grade_min(a.at(i, j), b.at(i, j)));
    return FuzzyRelation(a.universe(), std::move(grades));
}

/// Pointwise order: R(x,y) <= Q(x,y) everywhere.
inline bool subset_of(const FuzzyRelation& a, const FuzzyRelation& b) {
    require_same_universe(a.universe(), b.universe(), "subset_of");
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(a.at(i, j) <= b.at(i, j))) return false;
    return true;
}

/// The inverse relation: result(x, y) = R(y, x).
inline FuzzyRelation inverse(const FuzzyRelation& r) {
    const std::size_t n = r.size();
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            grades.push_back(r.at(j, i));
    return FuzzyRelation(r.universe(), std::move(grades));
}

/// Max-min composition: result(x, z) = max_y min(R(x, y), Q(y, z)).
inline FuzzyRelation compose(const FuzzyRelation& r, const FuzzyRelation& q) {
    require_same_universe(r.universe(), q.universe(), "compose");
    const std::size_t n = r.size();
    std::vector<Grade> grades;
    grades.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
            Grade best = Grade::zero();
            for (std::size_t y = 0; y < n; ++y)
                best = grade_max(best, grade_min(r.at(x, y), q.at(y, z)));
            grades.push_back(best);
        }
    }
    return FuzzyRelation(r.universe(), std::move(grades));
}

enum class RelationProperty { Reflexive, Symmetric, Transitive };

/// Verdict of a structural property check. On failure `witness` holds the
/// first violating tuple in row-major scan order: {x} for reflexivity,
/// {x, y} for symmetry, {x, y, z} for transitivity.
struct PropertyCheck {
    bool holds = true;
    std::vector<std::string> witness;
};

inline PropertyCheck check_property(const FuzzyRelation& r, RelationProperty prop) {
    const std::size_t n = r.size();
    const Universe& u = *r.universe();
    switch (prop) {
    case RelationProperty::Reflexive:
        for (std::size_t x = 0; x < n; ++x)
            if (!r.at(x, x).is_one()) return {false, {u.label(x)}};
        return {};
    case RelationProperty::Symmetric:
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (r.at(x, y) != r.at(y, x)) return {false, {u.label(x), u.label(y)}};
        return {};
    case RelationProperty::Transitive:
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (r.at(x, z) < grade_min(r.at(x, y), r.at(y, z)))
                        return {false, {u.label(x), u.label(y), u.label(z)}};
        return {};
    }
    throw ParameterError("unknown relation property");
}

/**
 * Smallest max-min transitive relation containing `r`: the iterated join
 * R, R union R.R, ... which stabilizes within |U| - 1 composition steps.
 */
inline FuzzyRelation transitive_closure(const FuzzyRelation& r) {
    FuzzyRelation closure = r;
    for (std::size_t step = 1; step < r.size(); ++step) {
        FuzzyRelation next = join(closure, compose(closure, closure));
        if (next == closure) break;
        closure = std::move(next);
    }
    return closure;
}

} // namespace fuzzrel

#endif // FUZZREL_FUZZY_RELATION_HPP
