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

#include "fractal/expansion.hpp"

#include <stdexcept>
#include <string>

namespace fractal {

namespace {

// Largest element of {0} U {1/n : n <= cap} not exceeding v >= 0.
Rational greedy_digit(const Rational& v, const std::optional<std::uint64_t>& cap)
{
    if (v.is_zero()) return Rational(0);
    BigInt n = v.reciprocal().ceil();
    if (cap && n > BigInt(static_cast<unsigned long>(*cap))) return Rational(0);
    return Rational(BigInt(1), n);
}

} // namespace

Rational expansion_bound() { return Rational(1, 56); }

Rational GreedyExpansion::partial_sum() const
{
    Rational sum;
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (!digits[i].is_zero()) sum += ldexp(digits[i], -3 * static_cast<long>(i + 1));
    return sum;
}

GreedyExpansion greedy_base8(const Rational& x, std::size_t length, std::optional<std::uint64_t> digit_cap)
{
    if (x.sign() < 0 || x > expansion_bound())
        throw std::invalid_argument("greedy_base8: x = " + x.str() + " lies outside [0, 1/56]");
    if (digit_cap && *digit_cap < 56)
        throw std::invalid_argument("greedy_base8: digit cap must be at least 56");

    GreedyExpansion e{x, {}, {}, digit_cap};
    e.digits.reserve(length);
    e.remainders.reserve(length);
    Rational r = x;
    for (std::size_t i = 0; i < length; ++i) {
        const Rational scaled = ldexp(r, 3);
        Rational d = greedy_digit(scaled, digit_cap);
        r = scaled - d;
        e.digits.push_back(std::move(d));
        e.remainders.push_back(r);
    }
    return e;
}

VerificationReport verify_expansion(const GreedyExpansion& e)
{
    VerificationReport report;
    const Rational bound = expansion_bound();
    if (e.x.sign() < 0 || e.x > bound) report.fail("x outside [0, 1/56]", 0);
    if (e.remainders.size() != e.digits.size()) {
        report.fail("digit and remainder counts differ");
        return report;
    }

    Rational previous = e.x;
    for (std::size_t j = 0; j < e.digits.size(); ++j) {
        const long index = static_cast<long>(j + 1);
        const Rational scaled = ldexp(previous, 3);
        const Rational& d = e.digits[j];
        const Rational& r = e.remainders[j];

        if (!(d.is_zero() || (d.sign() > 0 && d.numerator() == 1)))
            report.fail("digit " + d.str() + " is not 0 or 1/n", index);
        else if (d > scaled)
            report.fail("digit " + d.str() + " exceeds 8 * previous remainder " + scaled.str(), index);
        else if (d != greedy_digit(scaled, e.digit_cap))
            report.fail("digit " + d.str() + " is not the largest admissible digit", index);

        if (r.sign() < 0 || r > bound) report.fail("remainder " + r.str() + " outside [0, 1/56]", index);
        if (r != scaled - d) report.fail("remainder " + r.str() + " != 8 * previous - digit", index);
        previous = r;
    }

    const Rational reconstructed =
        e.partial_sum() + ldexp(e.remainder(), -3 * static_cast<long>(e.digits.size()));
    if (reconstructed != e.x) report.fail("x != sum d_i/8^i + x_M/8^M");
    return report;
}

Rational SparseBase2::value() const
{
    Rational sum;
    for (const auto& entry : entries) sum += ldexp(entry.value, -static_cast<long>(entry.position));
    return sum;
}

Rational SparseBase2::at(unsigned long position) const
{
    for (const auto& entry : entries)
        if (entry.position == position) return entry.value;
    return Rational(0);
}

SparseBase2 embed_base2(const Rational& x, unsigned N, std::size_t length, std::optional<std::uint64_t> digit_cap)
{
    const Rational limit = ldexp(expansion_bound(), -static_cast<long>(N));
    if (x.sign() < 0 || x > limit)
        throw std::invalid_argument("embed_base2: x = " + x.str() + " lies outside [0, " + limit.str() + "]");
    return embed_base2(greedy_base8(ldexp(x, static_cast<long>(N)), length, digit_cap), N);
}

SparseBase2 embed_base2(const GreedyExpansion& scaled, unsigned N)
{
    SparseBase2 out;
    out.offset = N;
    out.expanded_length = scaled.length();
    for (std::size_t j = 0; j < scaled.digits.size(); ++j)
        if (!scaled.digits[j].is_zero()) out.entries.push_back({N + 3 * (j + 1), scaled.digits[j]});
    out.residual = ldexp(scaled.remainder(), -static_cast<long>(N + 3 * scaled.length()));
    return out;
}

} // namespace fractal
