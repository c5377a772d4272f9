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

#include "fractal/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fractal {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestOptions {
    /// Translation function under test; defaults to digit_value. Tests swap
    /// in a broken one to see the identity check fail.
    std::function<Rational(unsigned long, const BigInt&)> translation;
};

/// Desk-scale oracle comparisons and invariant checks. Every check runs; the
/// first failing one is the first entry with passed == false.
std::vector<SelftestCheck> run_selftest(const SelftestOptions& options = {});

} // namespace fractal
