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
 * @file interior.hpp
 * @brief Explicit open rectangles disjoint from K.
 *
 * X_m is the set of depth-m digit sums sum_{i <= m} d_i / 2^i with
 * d_i in {0} U {1/q}. It is countable and compact, hence nowhere dense, but
 * it is infinite, so gaps are certified through a truncation: keep only digits
 * >= eps, enumerate exactly inside a window, and shrink every gap by the
 * padding delta = eps (1 - 2^-m). Dropping all digits below eps moves any
 * point of X_m left by less than delta, so a padded gap of the truncated set
 * is a gap of X_m itself.
 *
 * Every depth-m cover triangle in the strip J = (lo, lo + 2^-m) has its apex
 * at (q, lo + 2^-m) with q in X_m and, at depth t below the apex, spans
 * [q, q + t]. An x-gap (x - r, x + r) of X_m therefore leaves the rectangle
 * (x - r/3, x + r/3) x (top - r/3, top) outside every such triangle.
 */

#include "fractal/errors.hpp"
#include "fractal/rational.hpp"

#include <cstdint>
#include <vector>

namespace fractal {

struct OpenInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& v) const { return lo < v && v < hi; }
    bool empty() const { return !(lo < hi); }
    Rational width() const { return hi - lo; }
    /// True when this interval is a subset of `outer`.
    bool within(const OpenInterval& outer) const { return empty() || (outer.lo <= lo && hi <= outer.hi); }

    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

struct OpenRectangle {
    OpenInterval x;
    OpenInterval y;

    friend bool operator==(const OpenRectangle&, const OpenRectangle&) = default;
};

/// eps (1 - 2^-m)
Rational padding(unsigned m, const Rational& eps);

struct TruncatedXm {
    unsigned m = 0;
    Rational epsilon;
    OpenInterval window;
    std::vector<Rational> elements; ///< sorted, distinct, inside the window
    Rational delta() const { return padding(m, epsilon); }
};

/// Exact enumeration of the eps-truncated X_m inside the open window by
/// branch and bound. Throws ResourceError when the node budget is exhausted.
TruncatedXm enumerate_xm(const OpenInterval& window, unsigned m, const Rational& eps,
                         const Budget& budget = Budget::from_environment());

struct GapCertificate {
    unsigned m = 0;
    Rational epsilon;
    Rational delta;
    OpenInterval window; ///< search window the truncated set was enumerated in
    OpenInterval outer;  ///< free of truncated X_m
    OpenInterval inner;  ///< outer shrunk by delta on both sides; free of X_m
    Rational width;      ///< inner width
};

struct GapSearchOptions {
    Rational epsilon_floor = Rational::pow2(-20);
    Budget budget = Budget::from_environment();
};

/**
 * Finds an open interval inside `window` certified disjoint from X_m whose
 * width exceeds `min_width`. Starts at eps = 1 and halves eps until the
 * widest padded gap of the truncated set (window edges count as endpoints)
 * is wide enough. Throws InfeasibleError once eps drops below the floor.
 */
GapCertificate find_gap(const OpenInterval& window, unsigned m, const Rational& min_width,
                        const GapSearchOptions& options = {});

/// Re-derives delta and inner from outer, re-enumerates the truncated set
/// inside the window, and confirms the outer gap is empty.
VerificationReport verify_gap(const GapCertificate& gap, const Budget& budget = Budget::from_environment());

/// Number of random full-digit points of X_m landing in gap.inner (should
/// be zero). Digits range over {0} and 1/q with q up to 2^40.
std::uint64_t falsify_gap(const GapCertificate& gap, std::uint64_t samples, std::uint64_t seed);

struct InteriorWitness {
    OpenInterval I;
    OpenInterval J;
    std::vector<std::uint8_t> word; ///< a_1..a_m with J.lo = sum a_i 2^-i
    unsigned m = 0;
    Rational x;
    Rational r;
    OpenRectangle rectangle;
    GapCertificate gap;

    Rational top() const { return J.hi; }
};

/// The strip (sum a_i 2^-i, + 2^-m) of a binary word.
OpenInterval dyadic_strip(const std::vector<std::uint8_t>& word);

/// Recovers the word of a dyadic strip; throws std::invalid_argument when J
/// is not of the form (k 2^-m, (k+1) 2^-m) inside [0, 1].
std::vector<std::uint8_t> strip_word(const OpenInterval& J);

/**
 * Builds a rectangle inside I x J certified disjoint from K. I must be a
 * nondegenerate subinterval of (0, 1) and J a dyadic strip.
 */
InteriorWitness witness_empty_interior(const OpenInterval& I, const OpenInterval& J,
                                       const GapSearchOptions& options = {});

/// Apex abscissae q for which the triangle with apex (q, top) and legs `leg`
/// meets the rectangle (whose top edge is `top`).
OpenInterval apex_exclusion_interval(const OpenRectangle& rectangle, const Rational& top, const Rational& leg);

struct WitnessReport {
    VerificationReport checks;
    std::uint64_t samples = 0;
    std::uint64_t in_band = 0;      ///< samples whose y lies in the rectangle's y-range
    std::uint64_t in_rectangle = 0; ///< falsifying samples

    bool ok() const { return checks.ok && in_rectangle == 0; }
};

/// Exact re-check of every witness invariant plus `samples` random points of
/// K drawn with y-prefix equal to the witness word, about half of them
/// steered into the rectangle's y-range.
WitnessReport verify_witness(const InteriorWitness& w, std::uint64_t samples, std::uint64_t seed = 1,
                             const Budget& budget = Budget::from_environment());

} // namespace fractal
