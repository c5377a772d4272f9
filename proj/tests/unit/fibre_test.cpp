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

#include "fractal/fibre.hpp"
#include "fractal/ifs.hpp"
#include "fractal/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fractal;

namespace {

// Literal density test over every prefix up to `upto`.
bool in_AN_brute_force(const std::vector<int>& bits, unsigned N, unsigned long upto)
{
    unsigned long zeros = 0;
    for (unsigned long n = 1; n <= upto; ++n) {
        if (n > bits.size() || bits[n - 1] == 0) ++zeros;
        if (n >= N && 5 * zeros < 2 * n) return false;
    }
    return true;
}

std::vector<int> random_bits(Rng& rng, std::size_t len, unsigned one_in)
{
    std::vector<int> bits(len);
    for (auto& b : bits) b = rng.below(one_in) == 0 ? 1 : 0;
    return bits;
}

} // namespace

TEST(Binary, Examples)
{
    const auto half = binary_expand(Rational(1, 2), 6);
    EXPECT_EQ(half.digit(1), 1);
    EXPECT_EQ(half.zero_set(5), (std::vector<unsigned long>{2, 3, 4, 5}));
    EXPECT_EQ(binary_expand(Rational(3, 4), 5).zero_set(5), (std::vector<unsigned long>{3, 4, 5}));
    EXPECT_EQ(binary_expand(Rational(5, 8), 6).zero_set(6), (std::vector<unsigned long>{2, 4, 5, 6}));
    EXPECT_EQ(binary_expand(Rational(5, 8), 0).last_one, 3u);
    EXPECT_EQ(binary_expand(Rational(5, 8), 0).zeros_through(10), 8u);
    EXPECT_EQ(binary_expand(Rational(0), 0).last_one, 0u);
}

TEST(Binary, RejectsUnrepresentable)
{
    EXPECT_THROW(binary_expand(Rational(1), 4), std::invalid_argument);
    EXPECT_THROW(binary_expand(Rational(1, 3), 4), std::invalid_argument);
    EXPECT_THROW(binary_expand(Rational(-1, 4), 4), std::invalid_argument);
}

TEST(AN, Examples)
{
    const auto half = binary_expand(Rational(1, 2), 0);
    const auto one = check_AN(half, 1);
    EXPECT_FALSE(one.verdict);
    EXPECT_EQ(one.first_failure, 1u);
    EXPECT_TRUE(check_AN(half, 2).verdict);
    for (unsigned N = 1; N <= 6; ++N) EXPECT_TRUE(check_AN(binary_expand(Rational(0), 0), N).verdict);
}

TEST(AN, AgreesWithLongPrefixScan)
{
    Rng rng(211);
    for (int t = 0; t < 400; ++t) {
        const auto bits = random_bits(rng, 1 + rng.below(14), 2 + static_cast<unsigned>(rng.below(2)));
        const Rational y = oracle::binary_value(bits);
        const unsigned N = 1 + static_cast<unsigned>(rng.below(10));
        const auto got = check_AN(binary_expand(y, 0), N);
        EXPECT_EQ(got.verdict, in_AN_brute_force(bits, N, 400)) << y << " N=" << N;
        EXPECT_GE(got.horizon, N);
    }
}

TEST(Certify, ZeroHasEmptyAssignment)
{
    const auto c = certify_fibre_point(Rational(0), Rational(1, 2), 2, 4);
    EXPECT_TRUE(c.assignment.empty());
    EXPECT_TRUE(c.verified);
    EXPECT_TRUE(c.finite_support);
}

TEST(Certify, WorkedExample)
{
    const auto c = certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4);
    ASSERT_TRUE(c.verified);
    EXPECT_EQ(c.sparse.at(5), Rational(1, 14));
    ASSERT_EQ(c.windows.size(), 2u);
    EXPECT_EQ(c.windows[1].k, 2u);
    EXPECT_EQ(c.windows[1].targets, (std::vector<unsigned long>{5}));
    EXPECT_EQ(c.windows[1].selection, (std::vector<unsigned long>{2}));
    EXPECT_EQ(c.assignment, (std::vector<FibreAssignment>{{2, 5, Rational(1, 112)}}));
    EXPECT_EQ(ldexp(Rational(1, 112), -2), Rational(1, 448));
    EXPECT_EQ(MapDescriptor::for_digit(Rational(1, 112)), MapDescriptor::shifted(4, 7));
}

TEST(Certify, IntervalEndpoint)
{
    const auto c = certify_fibre_point(Rational(1, 224), Rational(1, 2), 2, 4);
    ASSERT_TRUE(c.verified);
    EXPECT_EQ(c.sparse.at(5), Rational(1, 7));
    EXPECT_EQ(c.assignment, (std::vector<FibreAssignment>{{2, 5, Rational(1, 56)}}));
}

TEST(Certify, Preconditions)
{
    EXPECT_THROW(certify_fibre_point(Rational(1, 448), Rational(1, 2), 1, 4), std::invalid_argument);
    EXPECT_THROW(certify_fibre_point(Rational(1, 223), Rational(1, 2), 2, 4), std::invalid_argument);
    EXPECT_THROW(certify_fibre_point(Rational(1, 448), Rational(1, 2), 0, 4), std::invalid_argument);
    EXPECT_THROW(certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 0), std::invalid_argument);
    EXPECT_THROW(certify_fibre_point(Rational(1, 448), Rational(1, 3), 2, 4), std::invalid_argument);
}

TEST(Certify, InfiniteSupportDeclaresTail)
{
    const auto c = certify_fibre_point(Rational(1, 2000), Rational(1, 2), 2, 12);
    ASSERT_TRUE(c.verified);
    EXPECT_FALSE(c.finite_support);
    EXPECT_GT(c.sparse.residual, Rational(0));
    EXPECT_LE(c.sparse.residual, Rational::pow2(-static_cast<long>(c.truncation_bits)));
    EXPECT_EQ(c.assigned_sum() + c.sparse.residual, c.x);
}

TEST(Verify, SelfLoopRejected)
{
    auto c = certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4);
    c.assignment[0].source = 5;
    const auto r = verify_fibre_certificate(c);
    EXPECT_FALSE(r.ok);
    bool named = false;
    for (const auto& f : r.failures) named = named || f.find("f(i) > i") != std::string::npos;
    EXPECT_TRUE(named);
}

TEST(Verify, MissingScaleFactorRejected)
{
    auto c = certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4);
    c.assignment[0].digit = c.sparse.at(5);
    const auto r = verify_fibre_certificate(c);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(c.assigned_sum(), c.x);
}

TEST(Verify, SourceOnAOneRejected)
{
    auto c = certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4);
    c.assignment[0].source = 1;
    c.assignment[0].digit = ldexp(c.sparse.at(5), -4);
    EXPECT_FALSE(verify_fibre_certificate(c).ok);
}

TEST(Infeasible, CarriesCounts)
{
    const MatchingInfeasible e(3, 1, 2);
    EXPECT_EQ(e.window(), 3u);
    EXPECT_EQ(e.available(), 1u);
    EXPECT_EQ(e.needed(), 2u);
    EXPECT_NE(std::string(e.what()).find("k = 3"), std::string::npos);
}

TEST(Certify, RandomInstancesVerifyAndStayWithinThird)
{
    Rng rng(223);
    int certified = 0;
    for (int t = 0; t < 300 && certified < 120; ++t) {
        const unsigned N = 1 + static_cast<unsigned>(rng.below(16));
        const auto bits = random_bits(rng, 1 + rng.below(24), 3);
        const Rational y = oracle::binary_value(bits);
        if (!check_AN(binary_expand(y, 0), N).verdict) continue;
        const Rational x = fibre_interval_end(N) * Rational(static_cast<long>(rng.below(1001)), 1000);
        const auto c = certify_fibre_point(x, y, N, 12);
        ++certified;
        EXPECT_TRUE(c.verified);
        EXPECT_TRUE(verify_fibre_certificate(c).ok);
        for (const auto& w : c.windows) EXPECT_LE(w.targets.size(), (N + 2) / 3);
    }
    EXPECT_GE(certified, 60);
}

TEST(Certify, SamplePointReproducesTheFibrePoint)
{
    Rng rng(227);
    for (int t = 0; t < 50; ++t) {
        const unsigned N = 2 + static_cast<unsigned>(rng.below(6));
        std::vector<int> bits = random_bits(rng, N, 3);
        bits[0] = 1;
        const Rational y = oracle::binary_value(bits);
        if (!check_AN(binary_expand(y, 0), N).verdict) continue;
        const Rational x = fibre_interval_end(N) * Rational(static_cast<long>(rng.below(97)), 96);
        const auto c = certify_fibre_point(x, y, N, 9);
        ASSERT_TRUE(c.verified);

        unsigned depth = static_cast<unsigned>(bits.size());
        for (const auto& a : c.assignment) depth = std::max<unsigned>(depth, static_cast<unsigned>(a.source));
        std::vector<std::uint8_t> a(depth, 0);
        std::vector<Rational> d(depth);
        for (std::size_t i = 0; i < bits.size(); ++i) a[i] = static_cast<std::uint8_t>(bits[i]);
        for (const auto& entry : c.assignment) d[entry.source - 1] = entry.digit;
        EXPECT_EQ(sample_point(a, d, depth), (Point{x - c.sparse.residual, y}));
    }
}

TEST(Certify, UncappedMatchesCappedOnSmallDigits)
{
    const auto capped = certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4);
    const auto uncapped = certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4, std::nullopt);
    ASSERT_TRUE(uncapped.verified);
    EXPECT_EQ(capped.assignment, uncapped.assignment);
    EXPECT_EQ(capped.digit_cap, std::optional<std::uint64_t>(kDefaultFibreDigitCap));
    EXPECT_FALSE(uncapped.digit_cap.has_value());
}

TEST(Certify, CappedDigitsStayBounded)
{
    const auto c = certify_fibre_point(Rational(1, 2000), Rational(1, 2), 2, 40);
    ASSERT_TRUE(c.verified);
    ASSERT_FALSE(c.sparse.entries.empty());
    for (const auto& e : c.sparse.entries) EXPECT_LE(e.value.denominator(), 248);
}
