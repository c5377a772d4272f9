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

#include "fractal/measure.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fractal;

namespace {

Rational rho_power(unsigned long e)
{
    BigInt num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 9801, e);
    mpz_ui_pow_ui(den.get_mpz_t(), 10000, e);
    return Rational(num, den);
}

// 1 - sum_{n=N}^{M} failProb(n) - rho^(M+1)/(1 - rho), clamped at 0.
Rational an_lower_direct(unsigned long N, unsigned long M)
{
    Rational s;
    for (unsigned long n = N; n <= M; ++n) s += oracle::fail_prob_direct(n);
    const Rational v = Rational(1) - s - rho_power(M + 1) / Rational(199, 10000);
    return v.sign() > 0 ? v : Rational(0);
}

} // namespace

TEST(FailProb, SmallValues)
{
    EXPECT_EQ(binom_fail_prob(1), Rational(1, 2));
    EXPECT_EQ(binom_fail_prob(2), Rational(1, 4));
    EXPECT_EQ(binom_fail_prob(5), Rational(3, 16));
}

TEST(FailProb, RecurrenceMatchesBinomialSums)
{
    const auto table = fail_count_table(400);
    ASSERT_EQ(table.size(), 401u);
    for (unsigned long n = 1; n <= 400; ++n) {
        const Rational direct = oracle::fail_prob_direct(n);
        EXPECT_EQ(Rational(table[n], BigInt(1) << n), direct) << n;
        if (n % 37 == 0) EXPECT_EQ(binom_fail_prob(n), direct) << n;
    }
}

TEST(Domination, BoundAndSpotCheck)
{
    EXPECT_TRUE(chernoff_dominates({}));
    EXPECT_FALSE(chernoff_dominates({Rational(1), Rational(9, 10)}));
    for (unsigned long n = 1; n <= 700; n += 7) EXPECT_LE(oracle::fail_prob_direct(n), rho_power(n)) << n;
}

TEST(Bound, SmallNHasNoClaim)
{
    const auto c = an_lower_bound(10, 200);
    EXPECT_EQ(c.an_lower, Rational(0));
    EXPECT_EQ(c.area_lower, Rational(0));
    EXPECT_FALSE(c.positive());
    EXPECT_GT(c.exact_part + c.tail_bound, Rational(1));
}

TEST(Bound, ExactPartsAgreeWithDirectSums)
{
    const auto c = an_lower_bound(166, 200, 100);
    Rational s;
    for (unsigned long n = 166; n <= 200; ++n) s += oracle::fail_prob_direct(n);
    EXPECT_EQ(c.exact_part, s);
    EXPECT_EQ(c.tail_bound, rho_power(201) / Rational(199, 10000));
    EXPECT_EQ(c.an_lower, an_lower_direct(166, 200));
    EXPECT_TRUE(c.positive());
    EXPECT_EQ(c.area_lower, c.an_lower / (Rational(56) * Rational::pow2(166)));
    EXPECT_EQ(c.spot_check_from, 201u);
    EXPECT_EQ(c.spot_check_to, 300u);
}

TEST(Bound, MinimalNAtTwoHundred)
{
    const auto n = minimal_positive_N(200);
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(*n, 166u);
    EXPECT_GT(an_lower_direct(166, 200), Rational(0));
    EXPECT_EQ(an_lower_direct(165, 200), Rational(0));
}

TEST(Bound, MinimalNAtOneThousand)
{
    // Regression value from an independent exact summation.
    const auto n = minimal_positive_N(1000);
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(*n, 98u);
    const auto c = an_lower_bound(98, 1000);
    EXPECT_TRUE(c.positive());
    EXPECT_NEAR(c.an_lower.to_double(), 0.0040988508, 1e-9);
    EXPECT_FALSE(an_lower_bound(97, 1000).positive());
}

TEST(Bound, AreaBoundedByStripArea)
{
    for (unsigned long N : {98ul, 120ul, 300ul}) {
        const Rational a = area_lower_bound(N, 1000);
        EXPECT_GT(a, Rational(0));
        EXPECT_LE(a, Rational::pow2(-static_cast<long>(N)) / Rational(56));
    }
    EXPECT_EQ(area_lower_bound(10, 200), Rational(0));
}

TEST(Bound, Preconditions)
{
    EXPECT_THROW(an_lower_bound(0, 10), std::invalid_argument);
    EXPECT_THROW(an_lower_bound(11, 10), std::invalid_argument);
}

TEST(Bound, TranscriptMentionsEachStep)
{
    const auto c = an_lower_bound(166, 200, 50);
    EXPECT_GE(c.transcript.size(), 3u);
}
