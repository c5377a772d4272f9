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

#include "fractal/serialize.hpp"

#include <gtest/gtest.h>

using namespace fractal;

TEST(Json, RationalsAreCanonicalStrings)
{
    EXPECT_EQ(to_json(Rational(2, 4)), Json("1/2"));
    EXPECT_EQ(to_json(Rational(0)), Json("0/1"));
    EXPECT_EQ(rational_from_json(Json("3/9")), Rational(1, 3));
    EXPECT_THROW(rational_from_json(Json(0.5)), std::invalid_argument);
}

TEST(Json, WordRoundTrip)
{
    const Word w{{MapDescriptor::up(), MapDescriptor::down(), MapDescriptor::shifted(3, 14),
                  MapDescriptor::shifted(0, BigInt("123456789012345678901234567890"))}};
    const Json j = to_json(w);
    EXPECT_EQ(j[0], (Json{{"op", "U"}}));
    EXPECT_EQ(j[2], (Json{{"op", "D"}, {"k", 3}, {"n", 14}}));
    EXPECT_TRUE(j[3]["n"].is_string());
    EXPECT_EQ(word_from_json(j).maps, w.maps);
    EXPECT_EQ(word_from_json(Json::parse(dump(j))).maps, w.maps);
    EXPECT_THROW(map_from_json(Json{{"op", "X"}}), std::invalid_argument);
    EXPECT_THROW(word_from_json(Json{{"op", "U"}}), std::invalid_argument);
}

TEST(Json, FibreCertificateSchema)
{
    const Json j = to_json(certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4));
    for (const char* key : {"y", "N", "x", "windows", "assignment", "verified"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["y"], "1/2");
    EXPECT_EQ(j["x"], "1/448");
    EXPECT_EQ(j["assignment"], Json::parse(R"([{"src":2,"dst":5,"digit":"1/112"}])"));
    EXPECT_EQ(j["windows"][1]["k"], 2);
    EXPECT_TRUE(j["verified"].get<bool>());
}

TEST(Json, GapAndWitnessUseExactStrings)
{
    const auto g = find_gap({Rational(3, 10), Rational(9, 20)}, 1, Rational(1, 1000));
    const Json j = to_json(g);
    EXPECT_EQ(j["inner"], Json::parse(R"(["29/80","31/80"])"));
    EXPECT_EQ(j["delta"], "1/16");
    const Json w = to_json(witness_empty_interior({Rational(3, 10), Rational(9, 20)}, {Rational(1, 2), Rational(3, 4)}));
    EXPECT_EQ(w["x"], "19/48");
    EXPECT_EQ(w["word"], Json::parse("[1,0]"));
}

TEST(Json, MeasureCertificate)
{
    const Json j = to_json(an_lower_bound(10, 200, 20));
    EXPECT_EQ(j["anLower"], "0/1");
    EXPECT_EQ(j["rho"], "9801/10000");
    EXPECT_TRUE(j["chernoffLemma"].get<bool>());
}

TEST(Json, DumpIsStable)
{
    const Json j = to_json(greedy_base8(Rational(1, 100), 3));
    EXPECT_EQ(dump(j), dump(Json::parse(dump(j))));
    EXPECT_EQ(dump(j).back(), '\n');
    EXPECT_EQ(j.begin().key(), "x");
}
