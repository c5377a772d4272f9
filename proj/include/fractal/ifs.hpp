// Copyright 2026 The fractal-interior Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file ifs.hpp
 * @brief The countable similarity family, its compositions, and the
 * triangle covers of the attractor K.
 *
 * The family consists of
 *   U(x, y)      = (x/2, (y+1)/2)
 *   D0(x, y)     = (x/2, y/2)
 *   D(k,n)(x, y) = ((x + t)/2, y/2),  t = 1/(2^k n),  k >= 0, n >= 1.
 *
 * The set of translations {1/(2^k n)} equals {1/q : q >= 1}, so geometry only
 * ever depends on the translation value. Descriptors keep (k, n) so that
 * D(1,1) and D(0,2) remain distinct maps; enumeration deduplicates by value.
 * D0 is the uniform limit of D(k,n) as t -> 0 but is kept as its own generator.
 */

#include "fractal/errors.hpp"
#include "fractal/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fractal {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b)
    {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

/// Exactly 1/(2^k n). Throws std::invalid_argument when n == 0.
Rational digit_value(unsigned long k, const BigInt& n);
inline Rational digit_value(unsigned long k, unsigned long n) { return digit_value(k, BigInt(n)); }

/// True for 0 and for 1/q with q a positive integer.
bool is_digit(const Rational& v);

class MapDescriptor {
public:
    enum class Kind { U, D0, D };

    static MapDescriptor up() { return MapDescriptor(Kind::U, 0, 0); }
    static MapDescriptor down() { return MapDescriptor(Kind::D0, 0, 0); }
    /// D(k,n); throws std::invalid_argument when n == 0.
    static MapDescriptor shifted(unsigned long k, BigInt n);
    /// D0 for 0, otherwise D(k, n) with n odd and 1/(2^k n) == value.
    static MapDescriptor for_digit(const Rational& value);

    Kind kind() const { return kind_; }
    unsigned long k() const { return k_; }
    const BigInt& n() const { return n_; }
    /// Translation added to x before halving; 0 for U and D0.
    Rational translation() const;

    Point apply(const Point& p) const;

    friend bool operator==(const MapDescriptor&, const MapDescriptor&) = default;

private:
    MapDescriptor(Kind kind, unsigned long k, BigInt n) : kind_(kind), k_(k), n_(std::move(n)) {}

    Kind kind_;
    unsigned long k_;
    BigInt n_;
};

/// A finite composition; maps[0] is the outermost map, so
/// apply(word, p) = maps[0](maps[1](...maps[m-1](p))).
struct Word {
    std::vector<MapDescriptor> maps;

    std::size_t size() const { return maps.size(); }
    bool empty() const { return maps.empty(); }
};

Point apply_word(const Word& word, const Point& p);

struct Triangle {
    Point v0; ///< image of (0,0): the right-angle corner
    Point v1; ///< image of (1,0)
    Point v2; ///< image of (0,1): the apex

    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend auto operator<=>(const Triangle& a, const Triangle& b)
    {
        if (auto c = a.v2 <=> b.v2; c != 0) return c;
        if (auto c = a.v0 <=> b.v0; c != 0) return c;
        return a.v1 <=> b.v1;
    }

    /// Closed point-in-triangle test for axis-aligned right triangles of
    /// this family (legs along +x from v0 and +y from v0).
    bool contains(const Point& p) const;
};

/// The base triangle with vertices (0,0), (1,0), (0,1).
Triangle base_triangle();

Triangle apply_word(const Word& word, const Triangle& t);

struct StripInterval {
    Rational lo;
    Rational hi;

    friend bool operator==(const StripInterval&, const StripInterval&) = default;
};

/// [sum over U positions of 2^-i, that + 2^-m]. Throws on an empty word.
StripInterval strip_of(const Word& word);

/// Number of value-distinct words of length m over {U, D0} and the
/// translations >= eps: (2 + floor(1/eps))^m, saturating at UINT64_MAX.
std::uint64_t cover_word_count(unsigned m, const Rational& eps);

/// Largest q with 1/q >= eps; eps must lie in (0, 1].
std::uint64_t max_denominator(const Rational& eps);

/// All depth-m triangles over words whose translations are >= eps, deduplicated
/// and sorted by apex (y, then x). Throws ResourceError when the word count
/// exceeds budget.max_words.
std::vector<Triangle> cover(unsigned m, const Rational& eps, const Budget& budget = Budget::from_environment());

/// Exact test whether p lies in the union of cover(m, eps) without
/// materializing the triangles.
bool cover_contains(const Point& p, unsigned m, const Rational& eps,
                    const Budget& budget = Budget::from_environment());

/**
 * Point of the depth-`depth` approximant with binary y-digits `a` and
 * x-digits `digits` (both indexed from position 1 at element 0). Positions
 * past the end of either span are zero. A nonzero digit at a position with
 * a_i = 1, or a value outside {0} U {1/q}, throws std::invalid_argument.
 *
 * With zero tails the result is itself a point of K, and it lies within
 * sample_proximity(depth) of every point of K sharing the first `depth`
 * choices.
 */
Point sample_point(std::span<const std::uint8_t> a, std::span<const Rational> digits, unsigned depth);

/// Rational upper bound (2^-depth * 3/2 >= 2^-depth * sqrt 2) on the distance
/// between a sampled point and the attractor points it approximates.
Rational sample_proximity(unsigned depth);

/**
 * Branch-and-bound search over digit sums sum_{p in positions} d_p / 2^p
 * with d_p in {0} U {1/q : q <= max_q}. `positions` must be strictly
 * increasing and >= 1. Each subtree is pruned unless its reachable range meets
 * the query interval; node visits are charged against `max_nodes`.
 */
class DigitSumSearch {
public:
    DigitSumSearch(std::vector<unsigned> positions, std::uint64_t max_q, std::uint64_t max_nodes);

    /// Sorted, deduplicated sums lying in the open interval (lo, hi).
    std::vector<Rational> enumerate_open(const Rational& lo, const Rational& hi);

    /// True when some sum lies in the closed interval [lo, hi].
    bool exists_closed(const Rational& lo, const Rational& hi);

    std::uint64_t nodes_visited() const { return nodes_; }

private:
    template <class Leaf>
    bool descend(std::size_t index, const Rational& partial, const Rational& lo, const Rational& hi, Leaf& leaf);

    void charge();

    std::vector<unsigned> positions_;
    std::vector<Rational> rest_max_; ///< rest_max_[j] = sum_{l > j} 2^-positions_[l]
    std::uint64_t max_q_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
};

std::string to_string(const MapDescriptor& m);

} // namespace fractal
