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

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace fractal {

Budget Budget::from_environment()
{
    Budget b;
    auto read = [](const char* name, std::uint64_t fallback) {
        const char* v = std::getenv(name);
        if (v == nullptr || *v == '\0') return fallback;
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(v, &end, 10);
        return (end != nullptr && *end == '\0' && parsed > 0) ? static_cast<std::uint64_t>(parsed) : fallback;
    };
    b.max_words = read("FRACTAL_INTERIOR_WORD_BUDGET", b.max_words);
    b.max_nodes = read("FRACTAL_INTERIOR_NODE_BUDGET", b.max_nodes);
    return b;
}

Rational digit_value(unsigned long k, const BigInt& n)
{
    if (n <= 0) throw std::invalid_argument("digit_value: n must be >= 1");
    return ldexp(Rational(BigInt(1), n), -static_cast<long>(k));
}

bool is_digit(const Rational& v)
{
    return v.is_zero() || (v.sign() > 0 && v.numerator() == 1);
}

MapDescriptor MapDescriptor::shifted(unsigned long k, BigInt n)
{
    if (n <= 0) throw std::invalid_argument("D(k,n) requires n >= 1");
    return MapDescriptor(Kind::D, k, std::move(n));
}

MapDescriptor MapDescriptor::for_digit(const Rational& value)
{
    if (!is_digit(value)) throw std::invalid_argument("not a digit value: " + value.str());
    if (value.is_zero()) return down();
    BigInt q = value.denominator();
    unsigned long k = two_adic_valuation(q);
    BigInt n;
    mpz_fdiv_q_2exp(n.get_mpz_t(), q.get_mpz_t(), k);
    return shifted(k, std::move(n));
}

Rational MapDescriptor::translation() const
{
    return kind_ == Kind::D ? digit_value(k_, n_) : Rational(0);
}

Point MapDescriptor::apply(const Point& p) const
{
    switch (kind_) {
    case Kind::U:
        return {ldexp(p.x, -1), ldexp(p.y + Rational(1), -1)};
    case Kind::D0:
        return {ldexp(p.x, -1), ldexp(p.y, -1)};
    case Kind::D:
        return {ldexp(p.x + translation(), -1), ldexp(p.y, -1)};
    }
    return p;
}

Point apply_word(const Word& word, const Point& p)
{
    Point out = p;
    for (auto it = word.maps.rbegin(); it != word.maps.rend(); ++it) out = it->apply(out);
    return out;
}

bool Triangle::contains(const Point& p) const
{
    // v0 is the right-angle corner; legs run to v1 (along x) and v2 (along y)
    // with equal length in the similarity family.
    const Rational leg = v1.x - v0.x;
    if (p.x < v0.x || p.y < v0.y) return false;
    return (p.x - v0.x) + (p.y - v0.y) <= leg;
}

Triangle base_triangle() { return {{0, 0}, {1, 0}, {0, 1}}; }

Triangle apply_word(const Word& word, const Triangle& t)
{
    return {apply_word(word, t.v0), apply_word(word, t.v1), apply_word(word, t.v2)};
}

StripInterval strip_of(const Word& word)
{
    if (word.empty()) throw std::invalid_argument("strip_of: empty word");
    Rational lo;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word.maps[i].kind() == MapDescriptor::Kind::U) lo += Rational::pow2(-static_cast<long>(i + 1));
    return {lo, lo + Rational::pow2(-static_cast<long>(word.size()))};
}

std::uint64_t max_denominator(const Rational& eps)
{
    if (eps.sign() <= 0 || eps > Rational(1)) throw std::invalid_argument("epsilon must lie in (0, 1]");
    BigInt q = eps.reciprocal().floor();
    if (!q.fits_ulong_p()) throw ResourceError("epsilon too small: digit count overflows");
    return q.get_ui();
}

std::uint64_t cover_word_count(unsigned m, const Rational& eps)
{
    const std::uint64_t base = 2 + max_denominator(eps);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        count *= base;
    }
    return count;
}

namespace {

Triangle apply_map(const MapDescriptor& map, const Triangle& t)
{
    return {map.apply(t.v0), map.apply(t.v1), map.apply(t.v2)};
}

std::vector<MapDescriptor> truncated_generators(std::uint64_t max_q)
{
    std::vector<MapDescriptor> gens{MapDescriptor::up(), MapDescriptor::down()};
    for (std::uint64_t q = 1; q <= max_q; ++q) gens.push_back(MapDescriptor::for_digit(Rational(BigInt(1), BigInt(q))));
    return gens;
}

} // namespace

std::vector<Triangle> cover(unsigned m, const Rational& eps, const Budget& budget)
{
    const std::uint64_t words = cover_word_count(m, eps);
    if (words > budget.max_words)
        throw ResourceError("cover: " + std::to_string(words) + " words exceed the budget of " +
                            std::to_string(budget.max_words));

    const auto gens = truncated_generators(max_denominator(eps));
    // cover_j = union over outermost maps phi of phi(cover_{j-1}).
    std::vector<Triangle> level{base_triangle()};
    for (unsigned depth = 0; depth < m; ++depth) {
        std::vector<Triangle> next;
        next.reserve(level.size() * gens.size());
        for (const auto& g : gens)
            for (const auto& t : level) next.push_back(apply_map(g, t));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    return level;
}

bool cover_contains(const Point& p, unsigned m, const Rational& eps, const Budget& budget)
{
    if (p.y.sign() < 0 || p.y > Rational(1) || p.x.sign() < 0) return false;
    const std::uint64_t max_q = max_denominator(eps);
    const Rational h = Rational::pow2(-static_cast<long>(m));

    // The strips [lo, lo + h] containing p.y: one, or two on a boundary.
    std::vector<BigInt> strip_indices;
    BigInt idx = ldexp(p.y, static_cast<long>(m)).floor();
    BigInt strips;
    mpz_ui_pow_ui(strips.get_mpz_t(), 2, m);
    if (idx < strips) strip_indices.push_back(idx);
    if (Rational(idx) == ldexp(p.y, static_cast<long>(m)) && idx > 0) strip_indices.push_back(idx - 1);

    for (const BigInt& s : strip_indices) {
        const Rational lo = ldexp(Rational(s), -static_cast<long>(m));
        const Rational depth_below_top = lo + h - p.y;
        std::vector<unsigned> zeros;
        for (unsigned i = 1; i <= m; ++i)
            if (mpz_tstbit(s.get_mpz_t(), m - i) == 0) zeros.push_back(i);
        // Triangle with apex (q, top) covers p iff q <= x <= q + depth_below_top.
        DigitSumSearch search(std::move(zeros), max_q, budget.max_nodes);
        if (search.exists_closed(p.x - depth_below_top, p.x)) return true;
    }
    return false;
}

Point sample_point(std::span<const std::uint8_t> a, std::span<const Rational> digits, unsigned depth)
{
    Point out;
    for (unsigned i = 1; i <= depth; ++i) {
        const std::uint8_t bit = i <= a.size() ? a[i - 1] : 0;
        if (bit > 1) throw std::invalid_argument("sample_point: binary digits must be 0 or 1");
        const Rational d = i <= digits.size() ? digits[i - 1] : Rational(0);
        if (!is_digit(d)) throw std::invalid_argument("sample_point: " + d.str() + " is not a digit");
        if (bit == 1) {
            if (!d.is_zero())
                throw std::invalid_argument("sample_point: digit supplied at position " + std::to_string(i) +
                                            " where a_i = 1");
            out.y += Rational::pow2(-static_cast<long>(i));
        } else if (!d.is_zero()) {
            out.x += ldexp(d, -static_cast<long>(i));
        }
    }
    return out;
}

Rational sample_proximity(unsigned depth) { return ldexp(Rational(3, 2), -static_cast<long>(depth)); }

DigitSumSearch::DigitSumSearch(std::vector<unsigned> positions, std::uint64_t max_q, std::uint64_t max_nodes)
    : positions_(std::move(positions)), max_q_(max_q), max_nodes_(max_nodes)
{
    for (std::size_t i = 0; i < positions_.size(); ++i)
        if (positions_[i] == 0 || (i > 0 && positions_[i] <= positions_[i - 1]))
            throw std::invalid_argument("DigitSumSearch: positions must be strictly increasing and >= 1");
    rest_max_.assign(positions_.size(), Rational(0));
    for (std::size_t j = positions_.size(); j-- > 1;)
        rest_max_[j - 1] = rest_max_[j] + Rational::pow2(-static_cast<long>(positions_[j]));
}

void DigitSumSearch::charge()
{
    if (++nodes_ > max_nodes_)
        throw ResourceError("digit-sum search exceeded the node budget of " + std::to_string(max_nodes_));
}

template <class Leaf>
bool DigitSumSearch::descend(std::size_t index, const Rational& partial, const Rational& lo, const Rational& hi,
                             Leaf& leaf)
{
    charge();
    if (index == positions_.size()) return leaf(partial);

    const long p = positions_[index];
    // Choose d at position p so that partial + d/2^p + [0, rest] can meet [lo, hi].
    const Rational d_lo = ldexp(lo - rest_max_[index] - partial, p);
    const Rational d_hi = ldexp(hi - partial, p);
    if (d_hi.sign() < 0) return false;

    if (d_lo.sign() <= 0 && descend(index + 1, partial, lo, hi, leaf)) return true;
    if (d_hi.sign() <= 0) return false;

    BigInt q_min = d_hi.reciprocal().ceil();
    if (q_min < 1) q_min = 1;
    BigInt q_max(static_cast<unsigned long>(max_q_));
    if (d_lo.sign() > 0) {
        BigInt bound = d_lo.reciprocal().floor();
        if (bound < q_max) q_max = bound;
    }
    if (q_min > q_max) return false;

    const std::uint64_t first = q_min.get_ui();
    const std::uint64_t last = q_max.get_ui();
    for (std::uint64_t q = first; q <= last; ++q) {
        const Rational next = partial + Rational(BigInt(1), BigInt(q) << static_cast<mp_bitcnt_t>(p));
        if (descend(index + 1, next, lo, hi, leaf)) return true;
    }
    return false;
}

std::vector<Rational> DigitSumSearch::enumerate_open(const Rational& lo, const Rational& hi)
{
    std::vector<Rational> out;
    if (!(lo < hi)) return out;
    auto collect = [&](const Rational& s) {
        if (lo < s && s < hi) out.push_back(s);
        return false;
    };
    descend(0, Rational(0), lo, hi, collect);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool DigitSumSearch::exists_closed(const Rational& lo, const Rational& hi)
{
    if (hi < lo) return false;
    auto hit = [&](const Rational& s) { return lo <= s && s <= hi; };
    return descend(0, Rational(0), lo, hi, hit);
}

std::string to_string(const MapDescriptor& m)
{
    switch (m.kind()) {
    case MapDescriptor::Kind::U: return "U";
    case MapDescriptor::Kind::D0: return "D0";
    case MapDescriptor::Kind::D: return "D(" + std::to_string(m.k()) + "," + m.n().get_str() + ")";
    }
    return "?";
}

} // namespace fractal
