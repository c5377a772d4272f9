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
#include "fractal/selftest.hpp"

#include <gtest/gtest.h>

using namespace fractal;

TEST(Selftest, AllChecksPass)
{
    const auto checks = run_selftest();
    ASSERT_GE(checks.size(), 8u);
    for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Selftest, BrokenDigitIdentityIsNamed)
{
    SelftestOptions broken;
    // Off by one in the power of two.
    broken.translation = [](unsigned long k, const BigInt& n) { return digit_value(k + 1, n); };
    const auto checks = run_selftest(broken);
    const auto first = std::find_if(checks.begin(), checks.end(), [](const SelftestCheck& c) { return !c.passed; });
    ASSERT_NE(first, checks.end());
    EXPECT_EQ(first->name, "digit-set identity");
    EXPECT_FALSE(first->detail.empty());
}
