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
 * Consistency classification of mappings and lossless compression of
 * relations.
 *
 * A mapping is predecessor-consistent when elements sharing an image share
 * their predecessor neighborhood (equal columns), successor-consistent when
 * they share their successor neighborhood (equal rows), and blockwise
 * consistent when the relation is constant on every product of kernel
 * classes. classify() computes the three verdicts by three independent
 * scans; the blockwise verdict is never derived from the other two, so
 * their equivalence stays observable in tests.
 *
 * Grouping elements by identical neighborhood signatures yields the
 * coarsest partition whose natural projection is consistent; compressing
 * through that projection is lossless exactly in `both` mode, where the
 * inverse image of the image reproduces the original relation bit-exactly.
 *
 * All witness reporting is deterministic: kernel classes are visited in
 * the order of their smallest member, and probe elements in universe
 * insertion order.
 */

#ifndef FUZZREL_CONSISTENCY_HPP
#define FUZZREL_CONSISTENCY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzrel/fuzzy_relation.hpp"
#include "fuzzrel/mapping.hpp"
#include "fuzzrel/neighborhood.hpp"

namespace fuzzrel {

enum class ConsistencyMode { Pred, Succ, Both };

inline const char* to_string(ConsistencyMode mode) {
    switch (mode) {
    case ConsistencyMode::Pred: return "pred";
    case ConsistencyMode::Succ: return "succ";
    case ConsistencyMode::Both: return "both";
    }
    return "?";
}

inline ConsistencyMode parse_consistency_mode(const std::string& name) {
    if (name == "pred") return ConsistencyMode::Pred;
    if (name == "succ") return ConsistencyMode::Succ;
    if (name == "both") return ConsistencyMode::Both;
    throw ParameterError("unknown consistency mode '" + name +
                         "' (expected pred, succ or both)");
}

/**
 * A concrete violation: `first` and `second` share their image under f but
 * their neighborhoods differ at `probe`. For Side::Pred the cited grades
 * are R(probe, first) vs R(probe, second); for Side::Succ they are
 * R(first, probe) vs R(second, probe). The grades always genuinely differ
 * in the source relation.
 */
struct ConsistencyWitness {
    enum class Side { Pred, Succ };
    Side side = Side::Pred;
    std::string first;
    std::string second;
    std::string probe;
    Grade lhs;
    Grade rhs;
};

struct ConsistencyReport {
    bool pred_consistent = true;
    bool succ_consistent = true;
    bool blockwise_consistent = true;
    std::optional<ConsistencyWitness> pred_witness;
    std::optional<ConsistencyWitness> succ_witness;
    std::optional<ConsistencyWitness> blockwise_witness;
    /// True when a nonzero tolerance relaxed the comparisons; exact
    /// reconstruction guarantees do not apply to approximate reports.
    bool approximate = false;

    bool both() const { return pred_consistent && succ_consistent; }
};

namespace detail {

inline bool grades_match(const Grade& a, const Grade& b, const Grade& tol) {
    return tol.is_zero() ? a == b : grade_diff_within(a, b, tol);
}

/// Kernel classes with at least one element, ordered by smallest member;
/// members ascend in universe order.
inline std::vector<std::vector<std::size_t>> kernel_classes(const UniverseMapping& f) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t j = 0; j < f.codomain()->size(); ++j)
        if (!f.fiber_indices(j).empty()) classes.push_back(f.fiber_indices(j));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

} // namespace detail

/**
 * Classifies `f` against `r` with three independent scans.
 *
 * The predecessor scan compares columns within every kernel class, the
 * successor scan compares rows, and the blockwise scan checks constancy of
 * `r` on every product of kernel classes directly. Witnesses cite the
 * first violation in deterministic scan order.
 */
inline ConsistencyReport classify(const UniverseMapping& f, const FuzzyRelation& r,
                                  const Grade& tol = Grade::zero()) {
    require_same_universe(f.domain(), r.universe(), "classify");
    const Universe& u = *r.universe();
    const auto classes = detail::kernel_classes(f);

    ConsistencyReport report;
    report.approximate = !tol.is_zero();

    // Predecessor scan: within each class, every member's column must match
    // the first member's. With tol == 0 this is equivalent to all-pairs
    // equality.
    for (const auto& cls : classes) {
        for (std::size_t k = 1; k < cls.size() && !report.pred_witness; ++k) {
            for (std::size_t z = 0; z < u.size(); ++z) {
                if (!detail::grades_match(r.at(z, cls[0]), r.at(z, cls[k]), tol)) {
                    report.pred_consistent = false;
                    report.pred_witness = ConsistencyWitness{
                        ConsistencyWitness::Side::Pred, u.label(cls[0]), u.label(cls[k]),
                        u.label(z), r.at(z, cls[0]), r.at(z, cls[k])};
                    break;
                }
            }
        }
        if (report.pred_witness) break;
    }

    // Successor scan: rows instead of columns.
    for (const auto& cls : classes) {
        for (std::size_t k = 1; k < cls.size() && !report.succ_witness; ++k) {
            for (std::size_t z = 0; z < u.size(); ++z) {
                if (!detail::grades_match(r.at(cls[0], z), r.at(cls[k], z), tol)) {
                    report.succ_consistent = false;
                    report.succ_witness = ConsistencyWitness{
                        ConsistencyWitness::Side::Succ, u.label(cls[0]), u.label(cls[k]),
                        u.label(z), r.at(cls[0], z), r.at(cls[k], z)};
                    break;
                }
            }
        }
        if (report.succ_witness) break;
    }

    // Blockwise scan: r must be constant on every product of kernel classes.
    // Computed from the definition, not from the two verdicts above.
    for (std::size_t ci = 0; ci < classes.size() && !report.blockwise_witness; ++ci) {
        for (std::size_t cj = 0; cj < classes.size() && !report.blockwise_witness; ++cj) {
            const auto& cx = classes[ci];
            const auto& cy = classes[cj];
            const Grade& ref = r.at(cx[0], cy[0]);
            for (const std::size_t a : cx) {
                for (const std::size_t b : cy) {
                    if (detail::grades_match(r.at(a, b), ref, tol)) continue;
                    report.blockwise_consistent = false;
                    // Normalize the 4-element violation to a same-image pair
                    // differing at one probe.
                    if (!detail::grades_match(r.at(cx[0], b), ref, tol)) {
                        report.blockwise_witness = ConsistencyWitness{
                            ConsistencyWitness::Side::Pred, u.label(cy[0]), u.label(b),
                            u.label(cx[0]), ref, r.at(cx[0], b)};
                    } else {
                        report.blockwise_witness = ConsistencyWitness{
                            ConsistencyWitness::Side::Succ, u.label(cx[0]), u.label(a),
                            u.label(b), r.at(cx[0], b), r.at(a, b)};
                    }
                    break;
                }
                if (report.blockwise_witness) break;
            }
        }
    }

    return report;
}

/**
 * Equivalent classification through set round-trips: f is predecessor-
 * consistent iff every successor neighborhood survives the image/preimage
 * round trip unchanged, and dually for successor consistency. Returns
 * (pred, succ). Exact equality only; cross-checks classify() in tests.
 */
inline std::pair<bool, bool> classify_via_roundtrip(const UniverseMapping& f,
                                                    const FuzzyRelation& r) {
    require_same_universe(f.domain(), r.universe(), "classify_via_roundtrip");
    bool pred = true;
    bool succ = true;
    for (std::size_t x = 0; x < r.size() && (pred || succ); ++x) {
        if (pred) {
            const FuzzySet s = r.row(x);
            if (preimage_set(f, image_set(f, s)) != s) pred = false;
        }
        if (succ) {
            const FuzzySet p = r.column(x);
            if (preimage_set(f, image_set(f, p)) != p) succ = false;
        }
    }
    return {pred, succ};
}

/**
 * A partition of a universe into disjoint nonempty blocks. Blocks are
 * ordered by their smallest member (universe order); members ascend in
 * universe order. The canonical label of a block is its lexicographically
 * smallest member label.
 */
class Partition {
public:
    Partition(UniversePtr universe, std::vector<std::vector<std::size_t>> blocks)
        : universe_(std::move(universe)), blocks_(std::move(blocks)) {
        std::vector<bool> seen(universe_->size(), false);
        for (auto& block : blocks_) {
            if (block.empty()) throw ParameterError("partition block must be nonempty");
            std::sort(block.begin(), block.end());
            for (const std::size_t i : block) {
                if (i >= universe_->size() || seen[i])
                    throw ParameterError("partition blocks must be disjoint and in range");
                seen[i] = true;
            }
        }
        for (const bool s : seen)
            if (!s) throw ParameterError("partition blocks must cover the universe");
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        block_of_.assign(universe_->size(), 0);
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (const std::size_t i : blocks_[b]) block_of_[i] = b;
    }

    static Partition identity(const UniversePtr& universe) {
        std::vector<std::vector<std::size_t>> blocks;
        for (std::size_t i = 0; i < universe->size(); ++i) blocks.push_back({i});
        return Partition(universe, std::move(blocks));
    }

    static Partition single_block(const UniversePtr& universe) {
        std::vector<std::size_t> all(universe->size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return Partition(universe, {all});
    }

    const UniversePtr& universe() const { return universe_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_of(std::size_t element) const { return block_of_[element]; }

    std::vector<std::string> block_labels(std::size_t b) const {
        std::vector<std::string> out;
        for (const std::size_t i : blocks_[b]) out.push_back(universe_->label(i));
        return out;
    }

    /// Lexicographically smallest member label of block b.
    std::string canonical_label(std::size_t b) const {
        std::string best = universe_->label(blocks_[b][0]);
        for (const std::size_t i : blocks_[b])
            best = std::min(best, universe_->label(i));
        return best;
    }

    bool is_identity() const { return blocks_.size() == universe_->size(); }

    /**
     * The natural projection onto the quotient universe. Quotient labels are
     * canonical labels wrapped in brackets; the wrapping repeats until no
     * quotient label collides with a source label.
     */
    UniverseMapping to_projection() const {
        std::vector<std::string> names(blocks_.size());
        for (std::size_t b = 0; b < blocks_.size(); ++b) names[b] = canonical_label(b);
        bool collision = true;
        while (collision) {
            collision = false;
            for (auto& name : names) name = "[" + name + "]";
            for (const auto& name : names)
                if (universe_->contains(name)) { collision = true; break; }
        }
        UniversePtr quotient = Universe::make(names);
        std::vector<std::size_t> assignment(universe_->size());
        for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = block_of_[i];
        return UniverseMapping(universe_, quotient, std::move(assignment));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return same_universe(a.universe_, b.universe_) && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    UniversePtr universe_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

namespace detail {

/// Neighborhood signature used for grouping: the column, the row, or both
/// concatenated.
inline std::vector<Grade> signature(const FuzzyRelation& r, std::size_t x,
                                    ConsistencyMode mode) {
    const std::size_t n = r.size();
    std::vector<Grade> sig;
    if (mode != ConsistencyMode::Succ)
        for (std::size_t z = 0; z < n; ++z) sig.push_back(r.at(z, x));
    if (mode != ConsistencyMode::Pred)
        for (std::size_t z = 0; z < n; ++z) sig.push_back(r.at(x, z));
    return sig;
}

struct GradeVectorLess {
    bool operator()(const std::vector<Grade>& a, const std::vector<Grade>& b) const {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return a.size() < b.size();
    }
};

} // namespace detail

/**
 * Groups elements with identical neighborhood signatures: equal columns in
 * pred mode, equal rows in succ mode, equal (column, row) pairs in both
 * mode. The natural projection of the result is consistent for the
 * requested mode, and no coarser partition has that property.
 */
inline Partition coarsest_consistent_partition(const FuzzyRelation& r, ConsistencyMode mode) {
    std::map<std::vector<Grade>, std::vector<std::size_t>, detail::GradeVectorLess> groups;
    for (std::size_t x = 0; x < r.size(); ++x)
        groups[detail::signature(r, x, mode)].push_back(x);
    std::vector<std::vector<std::size_t>> blocks;
    blocks.reserve(groups.size());
    for (auto& [sig, members] : groups) blocks.push_back(std::move(members));
    return Partition(r.universe(), std::move(blocks));
}

struct CompressionResult {
    Partition partition;
    UniverseMapping projection;
    FuzzyRelation quotient;
    ConsistencyMode mode;
};

/**
 * Compresses `r` through the coarsest mode-consistent partition. In both
 * mode the round trip preimage_relation(projection, quotient) reproduces
 * `r` exactly; pred and succ modes compress harder but may lose grades.
 */
inline CompressionResult compress(const FuzzyRelation& r, ConsistencyMode mode) {
    Partition partition = coarsest_consistent_partition(r, mode);
    UniverseMapping projection = partition.to_projection();
    FuzzyRelation quotient = image_relation(projection, r);
    return {std::move(partition), std::move(projection), std::move(quotient), mode};
}

struct RoundTripDiff {
    std::string from;
    std::string to;
    Grade original;
    Grade reconstructed;
};

struct RoundTripReport {
    bool equal = true;
    std::vector<RoundTripDiff> diffs; // row-major universe order
};

/// Compares the image/preimage round trip of `r` through `f` against `r`
/// entrywise. The diff list is empty exactly when f is both predecessor-
/// and successor-consistent with respect to `r`.
inline RoundTripReport verify_roundtrip(const UniverseMapping& f, const FuzzyRelation& r) {
    require_same_universe(f.domain(), r.universe(), "verify_roundtrip");
    const FuzzyRelation back = preimage_relation(f, image_relation(f, r));
    RoundTripReport report;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (back.at(i, j) == r.at(i, j)) continue;
            report.equal = false;
            report.diffs.push_back({r.universe()->label(i), r.universe()->label(j),
                                    r.at(i, j), back.at(i, j)});
        }
    }
    return report;
}

} // namespace fuzzrel

#endif // FUZZREL_CONSISTENCY_HPP
