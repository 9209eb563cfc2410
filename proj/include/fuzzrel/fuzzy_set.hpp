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
 * Fuzzy subsets of a finite universe.
 *
 * A FuzzySet is a total map element -> Grade, stored densely in universe
 * order. Elements not mentioned at construction read as grade 0. Values are
 * immutable after construction; every operation returns a fresh set.
 */

#ifndef FUZZREL_FUZZY_SET_HPP
#define FUZZREL_FUZZY_SET_HPP

#include <string>
#include <utility>
#include <vector>

#include "fuzzrel/grade.hpp"
#include "fuzzrel/universe.hpp"

namespace fuzzrel {

class FuzzySet {
public:
    /// The zero (empty) fuzzy set.
    static FuzzySet zero(UniversePtr universe) {
        std::vector<Grade> grades(universe->size(), Grade::zero());
        return FuzzySet(std::move(universe), std::move(grades));
    }

    /// Builds a set from sparse (label, grade) terms; unlisted elements are 0.
    static FuzzySet from_terms(UniversePtr universe,
                               const std::vector<std::pair<std::string, Grade>>& terms) {
        std::vector<Grade> grades(universe->size(), Grade::zero());
        std::vector<bool> seen(universe->size(), false);
        for (const auto& [label, grade] : terms) {
            const std::size_t i = universe->index_of(label);
            if (seen[i]) throw ParameterError("duplicate term for element '" + label + "'");
            seen[i] = true;
            grades[i] = grade;
        }
        return FuzzySet(std::move(universe), std::move(grades));
    }

    /// Dense constructor; `grades` must have one entry per universe element.
    FuzzySet(UniversePtr universe, std::vector<Grade> grades)
        : universe_(std::move(universe)), grades_(std::move(grades)) {
        if (grades_.size() != universe_->size())
            throw ParameterError("grade vector size does not match universe size");
    }

    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return grades_.size(); }

    const Grade& grade_at(std::size_t i) const { return grades_[i]; }
    const Grade& grade(const std::string& label) const {
        return grades_[universe_->index_of(label)];
    }

    /// Elements with strictly positive grade, in universe order.
    std::vector<std::string> support() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < grades_.size(); ++i)
            if (!grades_[i].is_zero()) out.push_back(universe_->label(i));
        return out;
    }

    bool is_zero() const {
        for (const auto& g : grades_)
            if (!g.is_zero()) return false;
        return true;
    }

    friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
        if (!same_universe(a.universe_, b.universe_)) return false;
        for (std::size_t i = 0; i < a.grades_.size(); ++i)
            if (a.grades_[i] != b.grades_[i]) return false;
        return true;
    }
    friend bool operator!=(const FuzzySet& a, const FuzzySet& b) { return !(a == b); }

private:
    UniversePtr universe_;
    std::vector<Grade> grades_;
};

/// Pointwise max of two same-universe sets.
inline FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a.universe(), b.universe(), "join");
    std::vector<Grade> grades;
    grades.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        grades.push_back(grade_max(a.grade_at(i), b.grade_at(i)));
    return FuzzySet(a.universe(), std::move(grades));
}

/// Pointwise min of two same-universe sets.
inline FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a.universe(), b.universe(), "meet");
    std::vector<Grade> grades;
    grades.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        grades.push_back(grade_min(a.grade_at(i), b.grade_at(i)));
    return FuzzySet(a.universe(), std::move(grades));
}

/// Pointwise order: A(x) <= B(x) everywhere.
inline bool subset_of(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a.universe(), b.universe(), "subset_of");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a.grade_at(i) <= b.grade_at(i))) return false;
    return true;
}

} // namespace fuzzrel

#endif // FUZZREL_FUZZY_SET_HPP
