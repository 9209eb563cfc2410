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
 * Exact membership grades.
 *
 * A Grade is a decimal fixed-point number in [0, 1]: an integer tick count
 * over a power-of-ten scale (default 10^6). Comparisons are exact rational
 * comparisons, so grades parsed at different scales interoperate. The only
 * arithmetic the library ever performs on grades is min and max, and both
 * return one of their operands unchanged, so no operation can introduce a
 * value that was not already present in its inputs.
 */

#ifndef FUZZREL_GRADE_HPP
#define FUZZREL_GRADE_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "fuzzrel/errors.hpp"

namespace fuzzrel {

class Grade {
public:
    static constexpr std::int64_t kDefaultScale = 1'000'000;
    static constexpr std::int64_t kMaxScale = 1'000'000'000;

    /// Zero at the default scale.
    constexpr Grade() = default;

    static Grade zero(std::int64_t scale = kDefaultScale) { return from_ticks(0, scale); }
    static Grade one(std::int64_t scale = kDefaultScale) { return from_ticks(scale, scale); }

    /// Builds ticks/scale directly. The scale must be a power of ten in
    /// [1, 10^9] and ticks must lie in [0, scale].
    static Grade from_ticks(std::int64_t ticks, std::int64_t scale) {
        check_scale(scale);
        if (ticks < 0 || ticks > scale) {
            throw ParameterError("grade ticks " + std::to_string(ticks) +
                                 " outside [0, " + std::to_string(scale) + "]");
        }
        return Grade(ticks, scale);
    }

    /**
     * Parses a decimal string such as "0", "1", "0.85" or ".85".
     *
     * Digits beyond the scale's resolution are accepted only when zero;
     * anything finer is rejected rather than rounded. Values outside [0, 1]
     * are rejected.
     */
    static Grade parse(std::string_view text, std::int64_t scale = kDefaultScale) {
        check_scale(scale);
        const std::string shown(text);
        if (text.empty()) throw ParseError("empty grade literal");

        std::size_t pos = 0;
        std::int64_t int_part = -1;
        if (text[pos] == '.') {
            int_part = 0;
        } else {
            if (text[pos] < '0' || text[pos] > '9')
                throw ParseError("grade '" + shown + "' is not a decimal number");
            int_part = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                int_part = int_part * 10 + (text[pos] - '0');
                if (int_part > 1) throw ParseError("grade '" + shown + "' is outside [0, 1]");
                ++pos;
            }
        }

        std::int64_t ticks = int_part * scale;
        if (pos < text.size()) {
            if (text[pos] != '.')
                throw ParseError("grade '" + shown + "' is not a decimal number");
            ++pos;
            if (pos == text.size())
                throw ParseError("grade '" + shown + "' has an empty fraction");
            std::int64_t unit = scale;
            for (; pos < text.size(); ++pos) {
                const char c = text[pos];
                if (c < '0' || c > '9')
                    throw ParseError("grade '" + shown + "' is not a decimal number");
                unit /= 10;
                if (unit == 0) {
                    if (c != '0')
                        throw ParseError("grade '" + shown + "' has more precision than scale " +
                                         std::to_string(scale));
                    continue;
                }
                ticks += static_cast<std::int64_t>(c - '0') * unit;
            }
        }
        if (ticks > scale) throw ParseError("grade '" + shown + "' is outside [0, 1]");
        return Grade(ticks, scale);
    }

    std::int64_t ticks() const { return ticks_; }
    std::int64_t scale() const { return scale_; }
    bool is_zero() const { return ticks_ == 0; }
    bool is_one() const { return ticks_ == scale_; }

    /// True when the grade is 0 or 1 (a crisp membership value).
    bool is_crisp() const { return is_zero() || is_one(); }

    /// Canonical decimal representation: "0", "1", or "0.d..d" with trailing
    /// zeros trimmed. parse(str()) reproduces the grade exactly.
    std::string str() const {
        if (ticks_ == 0) return "0";
        if (ticks_ == scale_) return "1";
        std::string frac;
        std::int64_t rem = ticks_;
        std::int64_t unit = scale_;
        while (unit > 1) {
            unit /= 10;
            frac.push_back(static_cast<char>('0' + rem / unit));
            rem %= unit;
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        return "0." + frac;
    }

    // Exact rational comparison across scales. ticks and scale are both
    // bounded by 10^9, so the cross products fit in 64 bits.
    friend bool operator==(const Grade& a, const Grade& b) {
        return a.ticks_ * b.scale_ == b.ticks_ * a.scale_;
    }
    friend bool operator!=(const Grade& a, const Grade& b) { return !(a == b); }
    friend bool operator<(const Grade& a, const Grade& b) {
        return a.ticks_ * b.scale_ < b.ticks_ * a.scale_;
    }
    friend bool operator>(const Grade& a, const Grade& b) { return b < a; }
    friend bool operator<=(const Grade& a, const Grade& b) { return !(b < a); }
    friend bool operator>=(const Grade& a, const Grade& b) { return !(a < b); }

private:
    constexpr Grade(std::int64_t ticks, std::int64_t scale) : ticks_(ticks), scale_(scale) {}

    static void check_scale(std::int64_t scale) {
        for (std::int64_t s = 1; s <= kMaxScale; s *= 10) {
            if (s == scale) return;
        }
        throw ParameterError("grade scale " + std::to_string(scale) +
                             " must be a power of ten between 1 and 10^9");
    }

    std::int64_t ticks_ = 0;
    std::int64_t scale_ = kDefaultScale;
};

/// Lattice meet. Returns one of the operands, never a rounded value.
inline Grade grade_min(const Grade& a, const Grade& b) { return b < a ? b : a; }

/// Lattice join. Returns one of the operands, never a rounded value.
inline Grade grade_max(const Grade& a, const Grade& b) { return a < b ? b : a; }

/// Exact test of |a - b| <= tol. Intermediate products can exceed 64 bits,
/// hence the 128-bit arithmetic.
inline bool grade_diff_within(const Grade& a, const Grade& b, const Grade& tol) {
    __int128 lhs = static_cast<__int128>(a.ticks()) * b.scale() -
                   static_cast<__int128>(b.ticks()) * a.scale();
    if (lhs < 0) lhs = -lhs;
    lhs *= tol.scale();
    const __int128 rhs =
        static_cast<__int128>(tol.ticks()) * a.scale() * b.scale();
    return lhs <= rhs;
}

} // namespace fuzzrel

#endif // FUZZREL_GRADE_HPP
