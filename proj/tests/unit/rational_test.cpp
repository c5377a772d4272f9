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

#include "fractal/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

using fractal::BigInt;
using fractal::Rational;

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(2, 4).str(), "1/2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(0).str(), "0/1");
    EXPECT_EQ(Rational(7).str(), "7/1");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseFractionsIntegersAndDecimals)
{
    EXPECT_EQ(Rational::parse("1/448"), Rational(1, 448));
    EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_EQ(Rational::parse("0.0125"), Rational(1, 80));
    EXPECT_EQ(Rational::parse("-0.5"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("3."), Rational(3));
    EXPECT_EQ(Rational::parse(".25"), Rational(1, 4));
}

TEST(Rational, ParseRejectsMalformedInput)
{
    for (const char* bad : {"", "1/0", "abc", "1e-3", "1.2.3", "0x10", "1/2/3", "1/-2", "--1", "."})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, Arithmetic)
{
    const Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(-a, Rational(-1, 3));
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).reciprocal(), std::domain_error);
    EXPECT_EQ(Rational(-2, 7).reciprocal(), Rational(-7, 2));
}

TEST(Rational, OrderingAndRounding)
{
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(4).floor(), 4);
    EXPECT_EQ(Rational(4).ceil(), 4);
    EXPECT_EQ(fractal::min(Rational(1, 2), Rational(1, 3)), Rational(1, 3));
    EXPECT_EQ(fractal::max(Rational(1, 2), Rational(1, 3)), Rational(1, 2));
}

TEST(Rational, PowersOfTwo)
{
    EXPECT_EQ(Rational::pow2(0), Rational(1));
    EXPECT_EQ(Rational::pow2(5), Rational(32));
    EXPECT_EQ(Rational::pow2(-3), Rational(1, 8));
    EXPECT_EQ(fractal::ldexp(Rational(3, 5), -2), Rational(3, 20));
    EXPECT_EQ(fractal::ldexp(Rational(3, 8), 3), Rational(3));
    EXPECT_TRUE(Rational(5, 64).is_dyadic());
    EXPECT_TRUE(Rational(3).is_dyadic());
    EXPECT_FALSE(Rational(1, 6).is_dyadic());
    EXPECT_EQ(fractal::two_adic_valuation(BigInt(112)), 4u);
    EXPECT_EQ(fractal::two_adic_valuation(BigInt(1)), 0u);
}

TEST(Rational, StreamAndConversion)
{
    std::ostringstream s;
    s << Rational(-5, 10);
    EXPECT_EQ(s.str(), "-1/2");
    EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
    EXPECT_EQ(Rational(1, 4).to_long_double(), 0.25L);
    EXPECT_TRUE(Rational(6, 3).is_integer());
    EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
}
