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
 * Finite labeled universes.
 *
 * A Universe is an ordered list of distinct element labels. Insertion order
 * is significant: it fixes the deterministic scan order used for witness
 * reporting throughout the library. Universes are immutable and shared via
 * UniversePtr; compatibility checks compare contents, not identity, so
 * universes parsed from separate documents interoperate.
 */

#ifndef FUZZREL_UNIVERSE_HPP
#define FUZZREL_UNIVERSE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzrel/errors.hpp"

namespace fuzzrel {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

class Universe {
public:
    static UniversePtr make(std::vector<std::string> labels) {
        return std::make_shared<const Universe>(std::move(labels));
    }

    explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw ParameterError("universe must be nonempty");
        index_.reserve(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw ParameterError("duplicate universe label '" + labels_[i] + "'");
        }
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw ElementNotInUniverse("element '" + label + "' is not in the universe");
        return it->second;
    }

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.labels_ == b.labels_;
    }
    friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Content equality with a cheap identity fast path.
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || *a == *b;
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b,
                                  const char* what) {
    if (!same_universe(a, b))
        throw UniverseMismatch(std::string(what) + ": operands live over different universes");
}

} // namespace fuzzrel

#endif // FUZZREL_UNIVERSE_HPP
