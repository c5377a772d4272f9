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

#include "fractal/ifs.hpp"
#include "fractal/interior.hpp"
#include "fractal/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fractal;

namespace {

const OpenInterval kFixtureI{Rational(3, 10), Rational(9, 20)};
const OpenInterval kFixtureJ{Rational(1, 2), Rational(3, 4)};

std::vector<Rational> halves(std::initializer_list<long> qs)
{
    std::vector<Rational> out;
    for (long q : qs) out.emplace_back(1, 2 * q);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Xm, DepthOneEighth)
{
    const auto xm = enumerate_xm({0, 1}, 1, Rational(1, 8));
    EXPECT_EQ(xm.elements, halves({1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(Xm, FixtureWindowIsEmptyAtDepthOne)
{
    for (const Rational eps : {Rational(1), Rational(1, 8), Rational(1, 64), Rational(1, 1000)})
        EXPECT_TRUE(enumerate_xm(kFixtureI, 1, eps).elements.empty());
}

TEST(Xm, DepthTwoHalf)
{
    const std::vector<Rational> expected{Rational(1, 8), Rational(1, 4), Rational(3, 8),
                                         Rational(1, 2), Rational(5, 8), Rational(3, 4)};
    EXPECT_EQ(enumerate_xm({0, 1}, 2, Rational(1, 2)).elements, expected);
}

TEST(Xm, MatchesCrossProduct)
{
    for (unsigned m = 1; m <= 3; ++m)
        for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 9)}) {
            if (m == 3 && eps < Rational(1, 5)) continue;
            const auto q = max_denominator(eps);
            for (const OpenInterval w : {OpenInterval{0, 1}, kFixtureI, OpenInterval{Rational(1, 7), Rational(2, 3)}})
                EXPECT_EQ(enumerate_xm(w, m, eps).elements, oracle::xm_brute_force(m, q, w.lo, w.hi))
                    << "m=" << m << " eps=" << eps << " window (" << w.lo << "," << w.hi << ")";
        }
}

TEST(Xm, NodeBudget)
{
    GapSearchOptions o;
    Budget tiny;
    tiny.max_nodes = 10;
    EXPECT_THROW(enumerate_xm({0, 1}, 4, Rational(1, 50), tiny), ResourceError);
    EXPECT_THROW(enumerate_xm({0, 1}, 0, Rational(1)), std::invalid_argument);
}

TEST(Padding, Formula)
{
    EXPECT_EQ(padding(1, Rational(1, 8)), Rational(1, 16));
    EXPECT_EQ(padding(2, Rational(1, 64)), Rational(3, 256));
}

TEST(Padding, BoundsTheTruncationShift)
{
    Rng rng(307);
    for (int t = 0; t < 2000; ++t) {
        const unsigned m = 1 + static_cast<unsigned>(rng.below(6));
        const Rational eps(1, 1 + static_cast<long>(rng.below(40)));
        Rational full, kept;
        for (unsigned i = 1; i <= m; ++i) {
            const Rational d = rng.digit(10);
            full += ldexp(d, -static_cast<long>(i));
            if (d >= eps) kept += ldexp(d, -static_cast<long>(i));
        }
        EXPECT_GE(full - kept, Rational(0));
        EXPECT_LE(full - kept, padding(m, eps));
    }
}

TEST(Gap, FixtureAtDepthOne)
{
    const auto g = find_gap(kFixtureI, 1, Rational(1, 1000));
    EXPECT_EQ(g.epsilon, Rational(1, 8));
    EXPECT_EQ(g.delta, Rational(1, 16));
    EXPECT_EQ(g.outer, kFixtureI);
    EXPECT_EQ(g.inner, (OpenInterval{Rational(29, 80), Rational(31, 80)}));
    EXPECT_TRUE(verify_gap(g).ok);
    EXPECT_EQ(falsify_gap(g, 20000, 5), 0u);
}

TEST(Gap, BeyondTheRange)
{
    for (unsigned m = 1; m <= 3; ++m) {
        const auto g = find_gap({2, 3}, m, Rational(1, 10));
        EXPECT_EQ(g.outer, (OpenInterval{2, 3}));
        EXPECT_TRUE(verify_gap(g).ok);
    }
}

TEST(Gap, NearTheAccumulationPointStaysSound)
{
    // 0 is a limit of 1/(2q); any certified inner gap must be free of them.
    const OpenInterval w{0, Rational(1, 1000)};
    try {
        const auto g = find_gap(w, 1, Rational(1, 1'000'000));
        const Rational a = Rational(1, 2) / g.inner.hi;
        const Rational b = Rational(1, 2) / g.inner.lo;
        EXPECT_GE(Rational(a.floor() + 1), b) << "some 1/(2q) lies in the certified gap";
        EXPECT_TRUE(verify_gap(g).ok);
    } catch (const InfeasibleError&) {
        SUCCEED();
    }
}

TEST(Gap, FloorReachedIsInfeasible)
{
    GapSearchOptions o;
    o.epsilon_floor = Rational(1, 4);
    EXPECT_THROW(find_gap({0, Rational(1, 1000)}, 1, Rational(1, 2000), o), InfeasibleError);
    EXPECT_THROW(find_gap({0, 1}, 1, Rational(0)), std::invalid_argument);
}

TEST(Gap, TamperedCertificatesFail)
{
    const auto g = find_gap(kFixtureI, 1, Rational(1, 1000));
    auto wide = g;
    wide.outer = {Rational(1, 5), Rational(9, 20)};
    wide.inner = {wide.outer.lo + g.delta, wide.outer.hi - g.delta};
    wide.width = wide.inner.width();
    wide.window = {Rational(1, 5), Rational(9, 20)};
    EXPECT_FALSE(verify_gap(wide).ok); // 1/4 is in X_1

    auto thin = g;
    thin.delta = Rational(1, 32);
    EXPECT_FALSE(verify_gap(thin).ok);
}

TEST(Strip, WordRoundTrip)
{
    EXPECT_EQ(strip_word(kFixtureJ), (std::vector<std::uint8_t>{1, 0}));
    EXPECT_EQ(dyadic_strip({1, 0}), kFixtureJ);
    EXPECT_EQ(dyadic_strip({0, 1, 1}), (OpenInterval{Rational(3, 8), Rational(1, 2)}));
    EXPECT_THROW(strip_word({Rational(1, 3), Rational(1, 2)}), std::invalid_argument);
    EXPECT_THROW(strip_word({Rational(1, 4), Rational(3, 4)}), std::invalid_argument);
    EXPECT_THROW(strip_word({1, 2}), std::invalid_argument);
}

TEST(Witness, Fixture)
{
    const auto w = witness_empty_interior(kFixtureI, kFixtureJ);
    EXPECT_EQ(w.m, 2u);
    EXPECT_EQ(w.gap.outer, (OpenInterval{Rational(3, 8), Rational(5, 12)}));
    EXPECT_EQ(w.x, Rational(19, 48));
    EXPECT_TRUE(w.rectangle.x.within(kFixtureI));
    EXPECT_TRUE(w.rectangle.y.within(kFixtureJ));
    EXPECT_LT(w.r, Rational(1, 4));
    const auto report = verify_witness(w, 20000, 9);
    EXPECT_TRUE(report.ok());
    EXPECT_GT(report.in_band, 0u);
    EXPECT_EQ(report.in_rectangle, 0u);
}

TEST(Witness, OutOfRangeIntervalRejected)
{
    EXPECT_THROW(witness_empty_interior({2, 3}, {0, Rational(1, 2)}), std::invalid_argument);
}

TEST(Witness, TamperedRadius)
{
    auto w = witness_empty_interior(kFixtureI, kFixtureJ);
    w.r = Rational(1, 4);
    EXPECT_FALSE(verify_witness(w, 0).ok());
}

TEST(Witness, RectangleAboveTheStripTop)
{
    auto w = witness_empty_interior(kFixtureI, kFixtureJ);
    w.rectangle.y = {w.rectangle.y.lo + Rational(1, 100), w.rectangle.y.hi + Rational(1, 100)};
    EXPECT_FALSE(verify_witness(w, 0).ok());
}

TEST(Witness, GapNotContainingTheBall)
{
    auto w = witness_empty_interior(kFixtureI, kFixtureJ);
    w.gap.inner.hi = w.x;
    w.gap.width = w.gap.inner.width();
    EXPECT_FALSE(verify_witness(w, 0).ok());
}

TEST(Witness, ApexExclusionMatchesGeometry)
{
    const auto w = witness_empty_interior(kFixtureI, kFixtureJ);
    const Rational leg(1, 4);
    const auto ex = apex_exclusion_interval(w.rectangle, w.top(), leg);
    // Probe a grid of rectangle points against triangles with apex q.
    auto meets = [&](const Rational& q) {
        for (long i = 1; i < 40; ++i)
            for (long j = 1; j < 40; ++j) {
                const Rational x = w.rectangle.x.lo + w.rectangle.x.width() * Rational(i, 40);
                const Rational y = w.rectangle.y.lo + w.rectangle.y.width() * Rational(j, 40);
                if (oracle::in_apex_triangle(x, y, q, w.top(), leg)) return true;
            }
        return false;
    };
    const Rational span = ex.width();
    for (long k = -10; k <= 50; ++k) {
        const Rational q = ex.lo + span * Rational(2 * k + 1, 80);
        if (ex.contains(q) && (q - ex.lo) > span / Rational(20) && (ex.hi - q) > span / Rational(20))
            EXPECT_TRUE(meets(q)) << q;
        if (!ex.contains(q)) EXPECT_FALSE(meets(q)) << q;
    }
}
