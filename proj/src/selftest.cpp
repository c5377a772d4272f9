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

#include "fractal/selftest.hpp"

#include "fractal/expansion.hpp"
#include "fractal/fibre.hpp"
#include "fractal/ifs.hpp"
#include "fractal/interior.hpp"
#include "fractal/measure.hpp"
#include "fractal/random.hpp"

#include <algorithm>
#include <set>

namespace fractal {

namespace {

using CheckFn = std::function<std::string()>; // empty string on success

std::string digit_set_identity(const SelftestOptions& options)
{
    const auto t = options.translation ? options.translation
                                       : [](unsigned long k, const BigInt& n) { return digit_value(k, n); };
    constexpr unsigned long kBound = 512;
    for (unsigned long q = 1; q <= kBound; ++q) {
        const unsigned long k = two_adic_valuation(BigInt(q));
        if (t(k, BigInt(q >> k)) != Rational(1, static_cast<long>(q)))
            return "1/" + std::to_string(q) + " is not t(" + std::to_string(k) + "," + std::to_string(q >> k) + ")";
    }
    for (unsigned long k = 0; (1ul << k) <= kBound; ++k)
        for (unsigned long n = 1; (n << k) <= kBound; ++n) {
            const Rational v = t(k, BigInt(n));
            if (v != Rational(1, static_cast<long>(n << k)))
                return "t(" + std::to_string(k) + "," + std::to_string(n) + ") = " + v.str();
        }
    return {};
}

std::string cover_nesting()
{
    const Rational eps(1, 2);
    for (unsigned m = 1; m <= 3; ++m) {
        const auto fine = cover(m, eps);
        const auto coarse = m == 1 ? std::vector<Triangle>{base_triangle()} : cover(m - 1, eps);
        for (const auto& t : fine) {
            const bool nested = std::any_of(coarse.begin(), coarse.end(), [&](const Triangle& c) {
                return c.contains(t.v0) && c.contains(t.v1) && c.contains(t.v2);
            });
            if (!nested) return "depth " + std::to_string(m) + " triangle with apex (" + t.v2.x.str() + ", " +
                                t.v2.y.str() + ") escapes depth " + std::to_string(m - 1);
        }
    }
    return {};
}

std::string strip_consistency()
{
    const std::vector<MapDescriptor> gens{MapDescriptor::up(), MapDescriptor::down(), MapDescriptor::shifted(0, 1),
                                          MapDescriptor::shifted(1, 3)};
    std::vector<Word> words{Word{}};
    for (unsigned m = 1; m <= 3; ++m) {
        std::vector<Word> next;
        for (const auto& w : words)
            for (const auto& g : gens) {
                Word e = w;
                e.maps.push_back(g);
                next.push_back(e);
            }
        words = next;
        for (const auto& w : words) {
            const Triangle t = apply_word(w, base_triangle());
            const Rational lo = std::min({t.v0.y, t.v1.y, t.v2.y});
            const Rational hi = std::max({t.v0.y, t.v1.y, t.v2.y});
            if (StripInterval{lo, hi} != strip_of(w)) return "strip mismatch for a word of length " + std::to_string(m);
        }
    }
    return {};
}

std::string similarity_ratio()
{
    Rng rng(7);
    const std::vector<MapDescriptor> maps{MapDescriptor::up(), MapDescriptor::down(), MapDescriptor::shifted(3, 14)};
    for (int trial = 0; trial < 50; ++trial) {
        const Point p{Rational(static_cast<long>(rng.below(1000)), 997), Rational(static_cast<long>(rng.below(1000)), 991)};
        const Point q{Rational(static_cast<long>(rng.below(1000)), 983), Rational(static_cast<long>(rng.below(1000)), 977)};
        for (const auto& m : maps) {
            const Point a = m.apply(p), b = m.apply(q);
            const Rational before = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
            const Rational after = (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
            if (after * Rational(4) != before) return to_string(m) + " is not a similarity of ratio 1/2";
        }
    }
    return {};
}

std::string greedy_expansion()
{
    Rng rng(11);
    const Rational bound = expansion_bound();
    for (int trial = 0; trial < 100; ++trial) {
        const long q = 1 + static_cast<long>(rng.below(100000));
        const Rational x(static_cast<long>(rng.below(static_cast<std::uint64_t>(q / 56 + 1))), q);
        if (x > bound) continue;
        const auto e = greedy_base8(x, 12);
        if (!verify_expansion(e).ok) return "expansion of " + x.str() + " fails verification";
        if ((x - e.partial_sum()).abs() > ldexp(bound, -36)) return "partial-sum error too large for " + x.str();
    }
    return {};
}

std::string xm_oracle()
{
    for (const Rational& eps : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        const auto max_q = max_denominator(eps);
        std::vector<Rational> digits{Rational(0)};
        for (std::uint64_t q = 1; q <= max_q; ++q) digits.emplace_back(1, static_cast<long>(q));
        std::set<Rational> level{Rational(0)};
        for (unsigned m = 1; m <= 2; ++m) {
            std::set<Rational> next;
            for (const auto& s : level)
                for (const auto& d : digits) next.insert(s + ldexp(d, -static_cast<long>(m)));
            level = next;
            std::vector<Rational> expected;
            for (const auto& s : level)
                if (s.sign() > 0 && s < Rational(1)) expected.push_back(s);
            if (enumerate_xm({0, 1}, m, eps).elements != expected)
                return "m = " + std::to_string(m) + ", eps = " + eps.str() + " differs from brute force";
        }
    }
    return {};
}

std::string padding_lemma()
{
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned m = 1 + static_cast<unsigned>(rng.below(4));
        const Rational eps(1, 1 + static_cast<long>(rng.below(20)));
        Rational full, truncated;
        for (unsigned i = 1; i <= m; ++i) {
            const Rational d = rng.digit(12);
            full += ldexp(d, -static_cast<long>(i));
            if (d >= eps) truncated += ldexp(d, -static_cast<long>(i));
        }
        const Rational shift = full - truncated;
        if (shift.sign() < 0 || shift > padding(m, eps)) return "padding bound violated for eps = " + eps.str();
    }
    return {};
}

std::string binomial_exactness()
{
    for (unsigned long n = 1; n <= 64; ++n) {
        BigInt fail = 0, pass = 0;
        for (unsigned long j = 0; j <= n; ++j) {
            BigInt c;
            mpz_bin_uiui(c.get_mpz_t(), n, j);
            (5 * j < 2 * n ? fail : pass) += c;
        }
        const Rational total = Rational::pow2(static_cast<long>(n));
        if (binom_fail_prob(n) != Rational(fail) / total) return "failProb(" + std::to_string(n) + ") mismatch";
        if (binom_fail_prob(n) + Rational(pass) / total != Rational(1)) return "complement does not sum to 1";
    }
    return {};
}

std::string fibre_example()
{
    const auto c = certify_fibre_point(Rational(1, 448), Rational(1, 2), 2, 4);
    if (!c.verified) return "certificate for x = 1/448 does not verify";
    if (c.assignment != std::vector<FibreAssignment>{{2, 5, Rational(1, 112)}}) return "assignment is not {2 -> 5, 1/112}";
    return {};
}

std::string gap_example()
{
    const auto g = find_gap({Rational(3, 10), Rational(9, 20)}, 1, Rational(1, 1000));
    if (g.inner != OpenInterval{Rational(29, 80), Rational(31, 80)}) return "inner gap is not (29/80, 31/80)";
    if (!verify_gap(g).ok) return "gap certificate does not verify";
    return {};
}

} // namespace

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options)
{
    const std::vector<std::pair<std::string, CheckFn>> checks{
        {"digit-set identity", [&] { return digit_set_identity(options); }},
        {"cover nesting", cover_nesting},
        {"strip consistency", strip_consistency},
        {"similarity ratio", similarity_ratio},
        {"greedy expansion", greedy_expansion},
        {"X_m oracle equivalence", xm_oracle},
        {"padding lemma", padding_lemma},
        {"binomial exactness", binomial_exactness},
        {"fibre worked example", fibre_example},
        {"gap worked example", gap_example},
    };
    std::vector<SelftestCheck> out;
    for (const auto& [name, fn] : checks) {
        SelftestCheck c{name, false, {}};
        try {
            c.detail = fn();
            c.passed = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace fractal
