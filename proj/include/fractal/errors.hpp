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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fractal {

/// A configured word or node budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction that is well-posed but has no solution for this instance
/// (e.g. a window selection that cannot be filled, or no certified gap).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Limits on enumeration size. Defaults may be overridden through the
/// FRACTAL_INTERIOR_WORD_BUDGET and FRACTAL_INTERIOR_NODE_BUDGET variables.
struct Budget {
    std::uint64_t max_words = 100'000'000;
    std::uint64_t max_nodes = 20'000'000;

    static Budget from_environment();
};

/// Outcome of re-checking a certificate. `failures` names each violated
/// condition; `first_index` is the first offending position when one applies.
struct VerificationReport {
    bool ok = true;
    long first_index = -1;
    std::vector<std::string> failures;

    void fail(std::string what, long index = -1)
    {
        if (ok) first_index = index;
        ok = false;
        failures.push_back(std::move(what));
    }
};

} // namespace fractal
