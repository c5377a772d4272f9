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
 * @file fibre.hpp
 * @brief Certificates that a point (x, y) lies in K, for x in the interval
 * I_N = [0, 1/(56 * 2^N)] and dyadic y whose binary digits keep a zero
 * density of at least 2/5 from position N onwards (the set A_N).
 *
 * The horizontal fibre K_y consists of the sums sum_{i : a_i = 0} d_i / 2^i.
 * The sparse base-2 expansion of x has its nonzero digits at positions
 * N + 3j. Those positions are matched, window by window, to earlier zero
 * positions of y; moving a digit d from position j to an earlier position i
 * turns it into d / 2^(j - i), which is again a translation 1/(2^k n).
 */

#include "fractal/errors.hpp"
#include "fractal/expansion.hpp"
#include "fractal/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fractal {

/// Terminating binary expansion of a dyadic y in [0, 1).
struct BinaryExpansion {
    Rational y;
    std::vector<std::uint8_t> digits; ///< a_1 .. a_L; every later digit is 0
    unsigned long last_one = 0;       ///< position of the last 1, 0 when y == 0

    /// a_i for a 1-based position; 0 beyond the stored prefix.
    std::uint8_t digit(unsigned long i) const { return i >= 1 && i <= digits.size() ? digits[i - 1] : 0; }
    /// Zero positions i <= upto.
    std::vector<unsigned long> zero_set(unsigned long upto) const;
    /// #{i <= n : a_i = 0}
    unsigned long zeros_through(unsigned long n) const;
};

/// Throws std::invalid_argument for y outside [0, 1) or a non-dyadic y.
/// The stored prefix covers at least `length` positions and the last 1.
BinaryExpansion binary_expand(const Rational& y, std::size_t length);

/// The literal A_N test at one prefix length: 5 * zeros >= 2 * n.
inline bool meets_zero_density(unsigned long zeros, unsigned long n) { return 5 * zeros >= 2 * n; }

struct ZeroCount {
    unsigned long n;
    unsigned long zeros;
};

struct ANMembership {
    unsigned N = 0;
    /// Beyond this length every digit is 0 and the density test holds.
    unsigned long horizon = 0;
    bool verdict = false;
    /// Smallest failing n, 0 when none.
    unsigned long first_failure = 0;
    std::vector<ZeroCount> trace;
};

/// Decides y in A_N exactly with a finite trace up to the horizon
/// max(N, i0, ceil(5 (i0 - z0) / 3)), where i0 is the last 1 and z0 the zero
/// count through i0.
ANMembership check_AN(const BinaryExpansion& y, unsigned N);

struct FibreWindow {
    unsigned long k;                        ///< window covers positions kN+1 .. (k+1)N
    std::vector<unsigned long> targets;     ///< W_k: nonzero sparse positions in the window
    std::vector<unsigned long> selection;   ///< S_k: zero positions of y matched to W_k
    unsigned long available = 0;            ///< unused zeros <= kN before selecting
    bool exceeds_third = false;             ///< available > ceil(N/3)
};

struct FibreAssignment {
    unsigned long source; ///< zero position i of y
    unsigned long target; ///< f(i), a nonzero position of the sparse expansion
    Rational digit;       ///< d*_{f(i)} / 2^(f(i) - i)

    friend bool operator==(const FibreAssignment&, const FibreAssignment&) = default;
};

struct FibreCertificate {
    BinaryExpansion y;
    unsigned N = 0;
    Rational x;
    SparseBase2 sparse;
    std::vector<FibreWindow> windows;
    std::vector<FibreAssignment> assignment;
    /// True when the greedy expansion of 2^N x terminated, so the sum is exact.
    bool finite_support = true;
    /// Declared truncation P: 0 <= x - sum <= 2^-P when support is infinite.
    unsigned long truncation_bits = 0;
    /// Denominator cap used for the greedy digits, empty when uncapped.
    std::optional<std::uint64_t> digit_cap;
    bool verified = false;

    /// sum over the assignment of digit / 2^source
    Rational assigned_sum() const;
};

/// Raised when some selection S_k cannot be filled.
class MatchingInfeasible : public InfeasibleError {
public:
    MatchingInfeasible(unsigned long k, unsigned long available, unsigned long needed);

    unsigned long window() const { return k_; }
    unsigned long available() const { return available_; }
    unsigned long needed() const { return needed_; }

private:
    unsigned long k_;
    unsigned long available_;
    unsigned long needed_;
};

/**
 * Builds and verifies the certificate that (x, y) lies in K.
 *
 * Preconditions (std::invalid_argument otherwise): N >= 1, y in A_N, and
 * 0 <= x <= 1/(56 * 2^N). The greedy expansion is run far enough to fill
 * `window_budget` windows; if it terminates first the certificate is exact,
 * otherwise it covers the first `window_budget` windows and declares the tail
 * bound. Selections take the earliest unused zeros and each window's
 * bijection is order preserving. Digits are drawn with denominators at most
 * `digit_cap`; pass std::nullopt for the uncapped greedy, whose denominators
 * can grow doubly exponentially.
 */
inline constexpr std::uint64_t kDefaultFibreDigitCap = 248;

FibreCertificate certify_fibre_point(const Rational& x, const Rational& y, unsigned N, unsigned long window_budget,
                                     std::optional<std::uint64_t> digit_cap = kDefaultFibreDigitCap);

VerificationReport verify_fibre_certificate(const FibreCertificate& c);

/// Upper end of I_N.
Rational fibre_interval_end(unsigned N);

} // namespace fractal
