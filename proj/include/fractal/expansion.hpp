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
 * @file expansion.hpp
 * @brief Greedy base-8 expansions with digits in {0} U {1/n}.
 *
 * Every x in [0, 1/56] can be written as sum_i d_i / 8^i with d_i in
 * {0} U {1/n : n >= 1}: take d_1 as the largest digit not exceeding 8x; the
 * remainder 8x - d_1 again lies in [0, 1/56] because consecutive reciprocals
 * 1/n and 1/(n+1) with n >= 7 differ by at most 1/56.
 *
 * Shifting the base-8 digits into base 2 places the nonzero digits on an
 * arithmetic progression with step 3, which is what the fibre certificates
 * consume.
 */

#include "fractal/errors.hpp"
#include "fractal/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fractal {

/// 1/56, the right end of the expandable interval.
Rational expansion_bound();

struct GreedyExpansion {
    Rational x;
    std::vector<Rational> digits;     ///< digits[j] is the digit at base-8 position j+1
    std::vector<Rational> remainders; ///< remainders[j] = 8 * remainders[j-1] - digits[j]
    /// When set, digits are drawn from {0} U {1/n : n <= cap} instead of all
    /// reciprocals.
    std::optional<std::uint64_t> digit_cap;

    std::size_t length() const { return digits.size(); }
    /// Final remainder x_M (x itself when M == 0).
    const Rational& remainder() const { return remainders.empty() ? x : remainders.back(); }
    bool terminated() const { return remainder().is_zero(); }
    /// sum_{i <= M} d_i / 8^i
    Rational partial_sum() const;
};

/**
 * First `length` greedy digits of x. Once a remainder reaches exactly zero
 * every later digit and remainder is zero. Throws std::invalid_argument for x
 * outside [0, 1/56], or for a digit cap below 56 (the remainder bound would
 * fail).
 */
GreedyExpansion greedy_base8(const Rational& x, std::size_t length,
                             std::optional<std::uint64_t> digit_cap = std::nullopt);

/// Re-checks the remainder range, the exact reconstruction identity, and the
/// greedy choice at every position. `first_index` is 1-based.
VerificationReport verify_expansion(const GreedyExpansion& e);

struct SparseEntry {
    unsigned long position;
    Rational value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// A base-2 digit sequence that is zero except at positions N + 3j.
struct SparseBase2 {
    unsigned offset = 0;
    std::vector<SparseEntry> entries;
    /// x minus the represented value; zero when the expansion terminated.
    Rational residual;
    /// Number of base-8 digits expanded.
    std::size_t expanded_length = 0;

    Rational value() const;
    /// Digit at a 1-based position, zero when absent.
    Rational at(unsigned long position) const;
};

/// Expands 2^N x greedily to `length` digits and places digit j at binary
/// position N + 3j. Throws std::invalid_argument when x lies outside
/// [0, 1/(56 * 2^N)]. `digit_cap` is passed through to greedy_base8.
SparseBase2 embed_base2(const Rational& x, unsigned N, std::size_t length,
                        std::optional<std::uint64_t> digit_cap = std::nullopt);

/// Same placement for an expansion already computed for the scaled value
/// 2^N x.
SparseBase2 embed_base2(const GreedyExpansion& scaled, unsigned N);

} // namespace fractal
