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
 * @file measure.hpp
 * @brief Certified rational lower bound on the area of K.
 *
 * Every y in A_N has I_N = [0, 1/(56 * 2^N)] inside its fibre, so by Fubini
 * area(K) >= Leb(A_N) / (56 * 2^N). The complement of A_N is covered by the
 * events "fewer than 2n/5 zeros among the first n digits" for n >= N, whose
 * probabilities are binomial tails. Terms n = N..M are summed exactly; the
 * rest is dominated by the Chernoff bound
 *
 *   P(Bin(n, 1/2) <= 2n/5) <= ((3125/3456)^(1/5))^n,
 *
 * replaced by a rational rate rho with rho^5 >= 3125/3456.
 */

#include "fractal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fractal {

/// Exact P(#zeros < 2n/5) for n uniform binary digits. n must be >= 1.
Rational binom_fail_prob(unsigned long n);

/// Numerators F(n) = sum_{5j < 2n} C(n, j) for n = 1..max_n, computed with an
/// O(1)-per-step Pascal recurrence; index 0 is unused.
std::vector<BigInt> fail_count_table(unsigned long max_n);

/// Geometric domination failProb(n) <= c * rho^n.
struct TailDomination {
    Rational c{1};
    Rational rho{9801, 10000};
};

/// The analytic lemma: rho^5 >= 3125/3456 (the Chernoff rate for a 2/5
/// threshold) together with c >= 1 and rho < 1.
bool chernoff_dominates(const TailDomination& d);

struct MeasureCertificate {
    unsigned long N = 0;
    unsigned long M = 0;
    TailDomination domination;
    Rational exact_part;  ///< sum_{n=N}^{M} failProb(n)
    Rational tail_bound;  ///< c rho^(M+1) / (1 - rho)
    Rational an_lower;    ///< max(0, 1 - exact_part - tail_bound)
    Rational area_lower;  ///< an_lower / (56 * 2^N)
    unsigned long spot_check_from = 0; ///< failProb(n) <= c rho^n checked for from..to
    unsigned long spot_check_to = 0;
    bool spot_check_ok = false;
    bool lemma_ok = false;
    std::vector<std::string> transcript;

    bool positive() const { return an_lower.sign() > 0 && spot_check_ok && lemma_ok; }
};

/// Requires 1 <= N <= M; throws std::invalid_argument otherwise.
MeasureCertificate an_lower_bound(unsigned long N, unsigned long M, unsigned long spot_range = 500,
                                  const TailDomination& domination = {});

Rational area_lower_bound(unsigned long N, unsigned long M);

/// Smallest N <= M with an_lower > 0 for this cutoff, if any.
std::optional<unsigned long> minimal_positive_N(unsigned long M, const TailDomination& domination = {});

} // namespace fractal
