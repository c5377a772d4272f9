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

#include <cstdint>
#include <random>

namespace fractal {

// std::mt19937_64 output is fully specified; the std distributions are not,
// so values are derived from raw draws to keep outputs identical across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do v = next(); while (v >= limit);
        return v % bound;
    }

    bool bit() { return (next() >> 63) != 0; }

    /// A digit of K: 0 with probability 1/4, otherwise 1/q with log2(q)
    /// spread uniformly over [0, max_bits].
    Rational digit(unsigned max_bits = 40)
    {
        if (below(4) == 0) return Rational(0);
        const unsigned bits = static_cast<unsigned>(below(max_bits + 1));
        const std::uint64_t q = bits == 0 ? 1 : (std::uint64_t{1} << (bits - 1)) + below(std::uint64_t{1} << (bits - 1));
        return Rational(BigInt(1), BigInt(static_cast<unsigned long>(q)));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace fractal
