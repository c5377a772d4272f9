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

#include "fractal/interior.hpp"

#include "fractal/ifs.hpp"
#include "fractal/random.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fractal {

Rational padding(unsigned m, const Rational& eps)
{
    return eps * (Rational(1) - Rational::pow2(-static_cast<long>(m)));
}

TruncatedXm enumerate_xm(const OpenInterval& window, unsigned m, const Rational& eps, const Budget& budget)
{
    if (m == 0) throw std::invalid_argument("enumerate_xm: m must be >= 1");
    if (window.empty()) throw std::invalid_argument("enumerate_xm: empty window");
    std::vector<unsigned> positions(m);
    std::iota(positions.begin(), positions.end(), 1u);
    DigitSumSearch search(std::move(positions), max_denominator(eps), budget.max_nodes);
    return {m, eps, window, search.enumerate_open(window.lo, window.hi)};
}

namespace {

// Widest padded gap between consecutive points of {lo} U elements U {hi};
// ties go to the leftmost.
bool widest_gap(const TruncatedXm& xm, OpenInterval& outer)
{
    const Rational delta = xm.delta();
    Rational left = xm.window.lo;
    bool found = false;
    Rational best;
    auto consider = [&](const Rational& right) {
        const Rational w = right - left;
        if (!found || w > best) {
            found = true;
            best = w;
            outer = {left, right};
        }
        left = right;
    };
    for (const auto& e : xm.elements) consider(e);
    consider(xm.window.hi);
    return found && best > delta + delta;
}

} // namespace

GapCertificate find_gap(const OpenInterval& window, unsigned m, const Rational& min_width,
                        const GapSearchOptions& options)
{
    if (window.empty()) throw std::invalid_argument("find_gap: empty window");
    if (min_width.sign() <= 0) throw std::invalid_argument("find_gap: minimum width must be positive");

    for (Rational eps(1); eps >= options.epsilon_floor; eps = ldexp(eps, -1)) {
        const TruncatedXm xm = enumerate_xm(window, m, eps, options.budget);
        OpenInterval outer;
        if (!widest_gap(xm, outer)) continue;
        const Rational delta = xm.delta();
        if (outer.width() - delta - delta <= min_width) continue;
        OpenInterval inner{outer.lo + delta, outer.hi - delta};
        return {m, eps, delta, window, outer, inner, inner.width()};
    }
    throw InfeasibleError("find_gap: no certified gap of width > " + min_width.str() + " in (" + window.lo.str() +
                          ", " + window.hi.str() + ") for m = " + std::to_string(m) + " down to eps = " +
                          options.epsilon_floor.str());
}

VerificationReport verify_gap(const GapCertificate& gap, const Budget& budget)
{
    VerificationReport report;
    if (gap.m == 0) report.fail("m must be >= 1");
    if (gap.epsilon.sign() <= 0 || gap.epsilon > Rational(1)) report.fail("epsilon outside (0, 1]");
    if (!report.ok) return report;

    if (gap.delta != padding(gap.m, gap.epsilon)) report.fail("delta != eps (1 - 2^-m)");
    if (!gap.outer.within(gap.window) || gap.outer.empty()) report.fail("outer gap not inside the window");
    if (gap.inner != OpenInterval{gap.outer.lo + gap.delta, gap.outer.hi - gap.delta})
        report.fail("inner gap is not outer shrunk by delta");
    if (gap.inner.empty()) report.fail("inner gap is empty");
    if (gap.width != gap.inner.width()) report.fail("recorded width differs from inner width");
    if (!report.ok) return report;

    const TruncatedXm xm = enumerate_xm(gap.window, gap.m, gap.epsilon, budget);
    for (const auto& e : xm.elements)
        if (gap.outer.contains(e)) {
            report.fail("truncated X_m element " + e.str() + " lies in the outer gap");
            break;
        }
    return report;
}

std::uint64_t falsify_gap(const GapCertificate& gap, std::uint64_t samples, std::uint64_t seed)
{
    Rng rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Rational sum;
        for (unsigned i = 1; i <= gap.m; ++i) sum += ldexp(rng.digit(), -static_cast<long>(i));
        if (gap.inner.contains(sum)) ++hits;
    }
    return hits;
}

OpenInterval dyadic_strip(const std::vector<std::uint8_t>& word)
{
    Rational lo;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 0) lo += Rational::pow2(-static_cast<long>(i + 1));
    return {lo, lo + Rational::pow2(-static_cast<long>(word.size()))};
}

std::vector<std::uint8_t> strip_word(const OpenInterval& J)
{
    const Rational h = J.width();
    if (h.sign() <= 0 || h.numerator() != 1 || !h.is_dyadic())
        throw std::invalid_argument("J must have width 2^-m");
    const unsigned long m = two_adic_valuation(h.denominator());
    if (m == 0) throw std::invalid_argument("J must have width 2^-m with m >= 1");
    const Rational index = J.lo / h;
    if (!index.is_integer() || index.sign() < 0 || J.hi > Rational(1))
        throw std::invalid_argument("J is not a dyadic strip inside [0, 1]");
    std::vector<std::uint8_t> word(m);
    const BigInt k = index.numerator();
    for (unsigned long i = 1; i <= m; ++i) word[i - 1] = mpz_tstbit(k.get_mpz_t(), m - i) ? 1 : 0;
    return word;
}

InteriorWitness witness_empty_interior(const OpenInterval& I, const OpenInterval& J, const GapSearchOptions& options)
{
    if (I.empty()) throw std::invalid_argument("witness: I is empty");
    if (I.lo.sign() < 0 || I.hi > Rational(1)) throw std::invalid_argument("witness: I must lie inside (0, 1)");

    InteriorWitness w;
    w.I = I;
    w.J = J;
    w.word = strip_word(J);
    w.m = static_cast<unsigned>(w.word.size());

    w.gap = find_gap(I, w.m, ldexp(I.width(), -6), options);
    w.x = ldexp(w.gap.inner.lo + w.gap.inner.hi, -1);
    w.r = min(ldexp(w.gap.inner.width(), -1), Rational::pow2(-static_cast<long>(w.m) - 1));
    const Rational third = w.r / Rational(3);
    w.rectangle = {{w.x - third, w.x + third}, {w.top() - third, w.top()}};
    return w;
}

OpenInterval apex_exclusion_interval(const OpenRectangle& rectangle, const Rational& top, const Rational& leg)
{
    // At depth t below the apex the triangle spans [q, q + t]; the rectangle
    // reaches depth at most top - rectangle.y.lo.
    const Rational reach = min(top - rectangle.y.lo, leg);
    return {rectangle.x.lo - reach, rectangle.x.hi};
}

WitnessReport verify_witness(const InteriorWitness& w, std::uint64_t samples, std::uint64_t seed, const Budget& budget)
{
    WitnessReport out;
    auto& report = out.checks;
    const Rational leg = Rational::pow2(-static_cast<long>(w.m));
    const Rational top = w.top();

    if (w.m == 0 || w.word.size() != w.m) report.fail("word length differs from m");
    if (dyadic_strip(w.word) != w.J) report.fail("J is not the strip of the word");
    if (w.r.sign() <= 0) report.fail("r must be positive");
    if (!(w.r < leg)) report.fail("r must be < 2^-m");
    const OpenInterval ball{w.x - w.r, w.x + w.r};
    if (!ball.within(w.I)) report.fail("(x - r, x + r) not inside I");
    if (!ball.within(w.gap.inner)) report.fail("gap inner does not contain (x - r, x + r)");
    if (w.gap.m != w.m) report.fail("gap certificate depth differs from m");

    const Rational third = w.r / Rational(3);
    const OpenRectangle expected{{w.x - third, w.x + third}, {top - third, top}};
    if (w.rectangle != expected) report.fail("rectangle is not (x -+ r/3) x (top - r/3, top)");
    if (!w.rectangle.x.within(w.I)) report.fail("rectangle x-range not inside I");
    if (w.rectangle.y.hi > top || w.rectangle.y.lo < w.J.lo) report.fail("rectangle y-range not below the strip top");

    // Triangles in other strips lie entirely above top or below J.lo. In
    // this strip every apex is in X_m, which avoids gap.inner.
    if (!apex_exclusion_interval(w.rectangle, top, leg).within(w.gap.inner))
        report.fail("apex exclusion interval escapes the certified gap");

    if (report.ok) {
        const VerificationReport gap = verify_gap(w.gap, budget);
        for (const auto& f : gap.failures) report.fail("gap: " + f);
    }

    // Falsification: exact points of K in this strip.
    Rng rng(seed);
    unsigned steer = 1;
    while (!(ldexp(Rational(1), -static_cast<long>(w.m + steer)) < third)) ++steer;
    const unsigned depth = w.m + steer + 40;
    std::vector<std::uint8_t> a(depth);
    std::vector<Rational> d(depth);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const bool steered = rng.bit();
        for (unsigned i = 0; i < depth; ++i) {
            if (i < w.m)
                a[i] = w.word[i];
            else if (steered && i < w.m + steer)
                a[i] = 1;
            else
                a[i] = rng.bit() ? 1 : 0;
            d[i] = a[i] == 0 ? rng.digit() : Rational(0);
        }
        const Point p = sample_point(a, d, depth);
        ++out.samples;
        if (w.rectangle.y.contains(p.y)) {
            ++out.in_band;
            if (w.rectangle.x.contains(p.x)) ++out.in_rectangle;
        }
    }
    if (out.in_rectangle > 0) report.fail(std::to_string(out.in_rectangle) + " sampled points of K fall in R");
    return out;
}

} // namespace fractal
