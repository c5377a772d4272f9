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

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fractal {

std::vector<unsigned long> BinaryExpansion::zero_set(unsigned long upto) const
{
    std::vector<unsigned long> out;
    for (unsigned long i = 1; i <= upto; ++i)
        if (digit(i) == 0) out.push_back(i);
    return out;
}

unsigned long BinaryExpansion::zeros_through(unsigned long n) const
{
    unsigned long count = 0;
    for (unsigned long i = 1; i <= n; ++i) count += digit(i) == 0 ? 1 : 0;
    return count;
}

BinaryExpansion binary_expand(const Rational& y, std::size_t length)
{
    if (y.sign() < 0 || y >= Rational(1))
        throw std::invalid_argument("binary_expand: y = " + y.str() + " lies outside [0, 1)");
    if (!y.is_dyadic()) throw std::invalid_argument("binary_expand: y = " + y.str() + " is not dyadic");

    BinaryExpansion e;
    e.y = y;
    const unsigned long bits = two_adic_valuation(y.denominator());
    const BigInt num = y.numerator();
    e.digits.assign(std::max<std::size_t>(length, bits), 0);
    for (unsigned long i = 1; i <= bits; ++i) e.digits[i - 1] = mpz_tstbit(num.get_mpz_t(), bits - i) ? 1 : 0;
    e.last_one = y.is_zero() ? 0 : bits;
    return e;
}

ANMembership check_AN(const BinaryExpansion& y, unsigned N)
{
    ANMembership out;
    out.N = N;
    const unsigned long i0 = y.last_one;
    const unsigned long ones = i0 - y.zeros_through(i0);
    // For n >= i0 the count is z0 + (n - i0); it meets 2n/5 once 3n >= 5 * ones.
    const unsigned long tail_start = (5 * ones + 2) / 3;
    out.horizon = std::max<unsigned long>({N, i0, tail_start});
    out.verdict = true;

    unsigned long zeros = 0;
    for (unsigned long n = 1; n <= out.horizon; ++n) {
        zeros += y.digit(n) == 0 ? 1 : 0;
        if (n < N) continue;
        out.trace.push_back({n, zeros});
        if (!meets_zero_density(zeros, n) && out.verdict) {
            out.verdict = false;
            out.first_failure = n;
        }
    }
    return out;
}

MatchingInfeasible::MatchingInfeasible(unsigned long k, unsigned long available, unsigned long needed)
    : InfeasibleError("fibre matching infeasible at window k = " + std::to_string(k) + ": " +
                      std::to_string(available) + " unused zeros for " + std::to_string(needed) + " targets"),
      k_(k), available_(available), needed_(needed)
{
}

Rational FibreCertificate::assigned_sum() const
{
    Rational sum;
    for (const auto& a : assignment) sum += ldexp(a.digit, -static_cast<long>(a.source));
    return sum;
}

Rational fibre_interval_end(unsigned N) { return ldexp(expansion_bound(), -static_cast<long>(N)); }

FibreCertificate certify_fibre_point(const Rational& x, const Rational& y, unsigned N, unsigned long window_budget,
                                     std::optional<std::uint64_t> digit_cap)
{
    if (N == 0) throw std::invalid_argument("certify_fibre_point: N must be >= 1");
    if (window_budget == 0) throw std::invalid_argument("certify_fibre_point: window budget must be >= 1");
    if (x.sign() < 0 || x > fibre_interval_end(N))
        throw std::invalid_argument("certify_fibre_point: x = " + x.str() + " lies outside I_N");

    FibreCertificate c;
    c.N = N;
    c.x = x;
    c.y = binary_expand(y, 0);
    const ANMembership membership = check_AN(c.y, N);
    if (!membership.verdict)
        throw std::invalid_argument("certify_fibre_point: y = " + y.str() + " is not in A_" + std::to_string(N) +
                                    " (density fails at n = " + std::to_string(membership.first_failure) + ")");

    // Positions N + 3j must stay inside windows 1..window_budget.
    const std::size_t length = static_cast<std::size_t>(window_budget * N / 3);
    c.digit_cap = digit_cap;
    c.sparse = embed_base2(x, N, length, digit_cap);
    c.finite_support = c.sparse.residual.is_zero();
    c.truncation_bits = c.finite_support ? 0 : N + 3 * length + 5;

    unsigned long windows = 0;
    if (c.finite_support) {
        for (const auto& entry : c.sparse.entries) windows = std::max(windows, (entry.position - 1) / N);
    } else {
        windows = window_budget;
    }

    const std::vector<unsigned long> zeros = c.y.zero_set((windows + 1) * N);
    std::size_t used = 0;
    auto entry = c.sparse.entries.begin();
    const unsigned long third = (N + 2) / 3;

    for (unsigned long k = 1; k <= windows; ++k) {
        FibreWindow w;
        w.k = k;
        const unsigned long first = k * N + 1;
        const unsigned long last = (k + 1) * N;
        for (; entry != c.sparse.entries.end() && entry->position <= last; ++entry)
            if (entry->position >= first) w.targets.push_back(entry->position);

        const auto eligible = static_cast<std::size_t>(
            std::upper_bound(zeros.begin(), zeros.end(), k * N) - zeros.begin());
        w.available = eligible - used;
        w.exceeds_third = w.available > third;
        if (w.available < w.targets.size()) throw MatchingInfeasible(k, w.available, w.targets.size());

        w.selection.assign(zeros.begin() + static_cast<long>(used),
                           zeros.begin() + static_cast<long>(used + w.targets.size()));
        used += w.targets.size();

        for (std::size_t j = 0; j < w.targets.size(); ++j) {
            const unsigned long src = w.selection[j];
            const unsigned long dst = w.targets[j];
            c.assignment.push_back({src, dst, ldexp(c.sparse.at(dst), -static_cast<long>(dst - src))});
        }
        c.windows.push_back(std::move(w));
    }

    c.verified = verify_fibre_certificate(c).ok;
    return c;
}

VerificationReport verify_fibre_certificate(const FibreCertificate& c)
{
    VerificationReport report;

    Rational y_sum;
    for (unsigned long i = 1; i <= c.y.digits.size(); ++i)
        if (c.y.digit(i) == 1) y_sum += Rational::pow2(-static_cast<long>(i));
    if (y_sum != c.y.y) report.fail("binary digits do not sum to y");

    std::set<unsigned long> nonzero;
    for (const auto& e : c.sparse.entries) {
        if (e.position <= c.N || (e.position - c.N) % 3 != 0)
            report.fail("sparse digit at position " + std::to_string(e.position) + " off the N + 3j progression",
                        static_cast<long>(e.position));
        if (e.value.is_zero()) report.fail("sparse entry with zero value", static_cast<long>(e.position));
        nonzero.insert(e.position);
    }

    std::set<unsigned long> sources;
    std::set<unsigned long> targets;
    for (const auto& a : c.assignment) {
        const auto at = static_cast<long>(a.source);
        if (!sources.insert(a.source).second) report.fail("source " + std::to_string(a.source) + " used twice", at);
        if (!targets.insert(a.target).second) report.fail("target " + std::to_string(a.target) + " hit twice", at);
        if (c.y.digit(a.source) != 0) report.fail("source " + std::to_string(a.source) + " is not a zero of y", at);
        if (a.target <= a.source) {
            report.fail("f(i) > i violated at " + std::to_string(a.source) + " -> " + std::to_string(a.target), at);
            continue;
        }
        if (nonzero.count(a.target) == 0) {
            report.fail("target " + std::to_string(a.target) + " is not a nonzero sparse position", at);
            continue;
        }
        const Rational expected = ldexp(c.sparse.at(a.target), -static_cast<long>(a.target - a.source));
        if (a.digit != expected)
            report.fail("digit at " + std::to_string(a.source) + " is " + a.digit.str() + ", expected " +
                            expected.str(),
                        at);
        if (a.digit.is_zero() || !is_digit(a.digit))
            report.fail("digit " + a.digit.str() + " is not a translation 1/(2^k n)", at);
    }
    if (targets != nonzero) report.fail("assignment is not onto the nonzero sparse positions");

    if (c.sparse.value() + c.sparse.residual != c.x) report.fail("sparse expansion plus residual != x");
    if (c.finite_support) {
        if (!c.sparse.residual.is_zero()) report.fail("finite support declared with nonzero residual");
        if (c.assigned_sum() != c.x) report.fail("sum of d_i/2^i over Z != x");
    } else {
        if (c.assigned_sum() + c.sparse.residual != c.x) report.fail("sum of d_i/2^i over Z plus residual != x");
        if (c.sparse.residual.sign() < 0 ||
            c.sparse.residual > Rational::pow2(-static_cast<long>(c.truncation_bits)))
            report.fail("residual exceeds the declared 2^-P tail bound");
    }
    return report;
}

} // namespace fractal
