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

#include "fractal/render.hpp"

#include "fractal/ifs.hpp"
#include "fractal/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fractal {

std::size_t Graymap::lit_count() const
{
    return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), kForeground));
}

std::string Graymap::to_plain_pgm() const
{
    std::string out = "P2\n" + std::to_string(width_) + " " + std::to_string(height_) + "\n255\n";
    for (unsigned row = 0; row < height_; ++row) {
        std::size_t line = 0;
        for (unsigned col = 0; col < width_; ++col) {
            const std::string v = std::to_string(at(col, row));
            if (line > 0 && line + 1 + v.size() > 70) {
                out += '\n';
                line = 0;
            }
            if (line > 0) {
                out += ' ';
                ++line;
            }
            out += v;
            line += v.size();
        }
        out += '\n';
    }
    return out;
}

Graymap Graymap::from_plain_pgm(const std::string& text)
{
    std::istringstream in(text);
    std::string magic;
    unsigned width = 0, height = 0, maxval = 0;
    if (!(in >> magic) || magic != "P2" || !(in >> width >> height >> maxval) || maxval != 255)
        throw std::invalid_argument("not a plain 8-bit graymap");
    Graymap g(width, height);
    for (unsigned row = 0; row < height; ++row)
        for (unsigned col = 0; col < width; ++col) {
            unsigned v = 0;
            if (!(in >> v) || v > 255) throw std::invalid_argument("truncated graymap");
            g.set(col, row, static_cast<std::uint8_t>(v));
        }
    return g;
}

Rational pixel_center_x(const RenderConfig& config, unsigned col)
{
    const auto& v = config.viewport;
    return v.x0 + (v.x1 - v.x0) * Rational(2 * static_cast<long>(col) + 1, 2 * static_cast<long>(config.width));
}

Rational pixel_center_y(const RenderConfig& config, unsigned row)
{
    const auto& v = config.viewport;
    return v.y1 - (v.y1 - v.y0) * Rational(2 * static_cast<long>(row) + 1, 2 * static_cast<long>(config.height));
}

namespace {

void plot(Graymap& g, const RenderConfig& config, const Point& p)
{
    const auto& v = config.viewport;
    const BigInt col = ((p.x - v.x0) / (v.x1 - v.x0) * Rational(static_cast<long>(config.width))).floor();
    const BigInt row = ((v.y1 - p.y) / (v.y1 - v.y0) * Rational(static_cast<long>(config.height))).floor();
    if (col < 0 || row < 0 || col >= config.width || row >= config.height) return;
    g.set(static_cast<unsigned>(col.get_ui()), static_cast<unsigned>(row.get_ui()), Graymap::kForeground);
}

void render_cover_exact(Graymap& g, const RenderConfig& config, const Budget& budget)
{
    for (unsigned row = 0; row < config.height; ++row) {
        const Rational y = pixel_center_y(config, row);
        for (unsigned col = 0; col < config.width; ++col)
            if (cover_contains({pixel_center_x(config, col), y}, config.m, config.epsilon, budget))
                g.set(col, row, Graymap::kForeground);
    }
}

void render_cloud_exact(Graymap& g, const RenderConfig& config)
{
    Rng rng(config.seed);
    std::vector<std::uint8_t> a(config.depth);
    std::vector<Rational> d(config.depth);
    for (std::uint64_t s = 0; s < config.samples; ++s) {
        for (unsigned i = 0; i < config.depth; ++i) {
            a[i] = rng.bit() ? 1 : 0;
            d[i] = a[i] == 0 ? rng.digit(8) : Rational(0);
        }
        plot(g, config, sample_point(a, d, config.depth));
    }
}

// Self-affine family: x contracted by 1/sqrt 2, translations 1/(2^(k/2) n).
using Approx = long double;

const Approx kSqrtHalf = std::sqrt(Approx{0.5L});

// Distinct translations >= eps, descending: 1/q and 1/(sqrt2 q).
std::vector<Approx> affine_translations(const Rational& eps)
{
    const std::uint64_t max_q = max_denominator(eps);
    const Approx floor_value = eps.to_long_double();
    std::vector<Approx> out;
    for (std::uint64_t q = 1; q <= max_q; ++q) {
        out.push_back(Approx{1} / static_cast<Approx>(q));
        const Approx odd = kSqrtHalf / static_cast<Approx>(q);
        if (odd >= floor_value) out.push_back(odd);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

struct AffineSearch {
    std::vector<Approx> scales;   ///< (1/sqrt 2)^p for each free position
    std::vector<Approx> rest_max; ///< sum of later scales
    const std::vector<Approx>* values;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;

    bool exists(std::size_t j, Approx partial, Approx lo, Approx hi)
    {
        if (++nodes > max_nodes) throw ResourceError("self-affine cover search exceeded the node budget");
        if (j == scales.size()) return lo <= partial && partial <= hi;
        if (partial + rest_max[j] + scales[j] < lo || partial > hi) return false;
        if (exists(j + 1, partial, lo, hi)) return true;
        for (Approx v : *values) {
            const Approx next = partial + v * scales[j];
            if (next > hi) continue;
            if (next + rest_max[j] < lo) break; // values descend
            if (exists(j + 1, next, lo, hi)) return true;
        }
        return false;
    }
};

void render_cover_affine(Graymap& g, const RenderConfig& config, const Budget& budget)
{
    const auto values = affine_translations(config.epsilon);
    const unsigned m = config.m;
    const Rational h = Rational::pow2(-static_cast<long>(m));
    const Approx leg_x = std::pow(kSqrtHalf, static_cast<Approx>(m));
    const Approx leg_y = std::ldexp(Approx{1}, -static_cast<int>(m));

    for (unsigned row = 0; row < config.height; ++row) {
        const Rational y = pixel_center_y(config, row);
        if (y.sign() < 0 || y > Rational(1)) continue;
        std::vector<BigInt> strips;
        const BigInt idx = ldexp(y, static_cast<long>(m)).floor();
        BigInt count;
        mpz_ui_pow_ui(count.get_mpz_t(), 2, m);
        if (idx < count) strips.push_back(idx);
        if (Rational(idx) == ldexp(y, static_cast<long>(m)) && idx > 0) strips.push_back(idx - 1);

        for (const BigInt& s : strips) {
            AffineSearch search{{}, {}, &values, 0, budget.max_nodes};
            for (unsigned i = 1; i <= m; ++i)
                if (mpz_tstbit(s.get_mpz_t(), m - i) == 0) search.scales.push_back(std::pow(kSqrtHalf, static_cast<Approx>(i)));
            search.rest_max.assign(search.scales.size(), 0);
            for (std::size_t j = search.scales.size(); j-- > 1;) search.rest_max[j - 1] = search.rest_max[j] + search.scales[j];

            const Approx top = (ldexp(Rational(s), -static_cast<long>(m)) + h).to_long_double();
            const Approx reach = leg_x * (top - y.to_long_double()) / leg_y;
            for (unsigned col = 0; col < config.width; ++col) {
                if (g.at(col, row) == Graymap::kForeground) continue;
                const Approx x = pixel_center_x(config, col).to_long_double();
                search.nodes = 0;
                if (search.exists(0, 0, x - reach, x)) g.set(col, row, Graymap::kForeground);
            }
        }
    }
}

void render_cloud_affine(Graymap& g, const RenderConfig& config)
{
    Rng rng(config.seed);
    const Approx x0 = config.viewport.x0.to_long_double();
    const Approx x1 = config.viewport.x1.to_long_double();
    const Approx y0 = config.viewport.y0.to_long_double();
    const Approx y1 = config.viewport.y1.to_long_double();
    for (std::uint64_t s = 0; s < config.samples; ++s) {
        Approx x = 0, y = 0, xs = 1, ys = 1;
        for (unsigned i = 0; i < config.depth; ++i) {
            xs *= kSqrtHalf;
            ys *= 0.5L;
            if (rng.bit()) {
                y += ys;
                continue;
            }
            const Rational d = rng.digit(20);
            if (d.is_zero()) continue;
            const unsigned k = static_cast<unsigned>(rng.below(21));
            x += xs * d.to_long_double() * std::pow(kSqrtHalf, static_cast<Approx>(k));
        }
        const Approx col = std::floor((x - x0) / (x1 - x0) * config.width);
        const Approx row = std::floor((y1 - y) / (y1 - y0) * config.height);
        if (col < 0 || row < 0 || col >= config.width || row >= config.height) continue;
        g.set(static_cast<unsigned>(col), static_cast<unsigned>(row), Graymap::kForeground);
    }
}

} // namespace

Graymap render(const RenderConfig& config, const Budget& budget)
{
    if (config.width == 0 || config.height == 0) throw std::invalid_argument("render: empty image");
    const auto& v = config.viewport;
    if (!(v.x0 < v.x1) || !(v.y0 < v.y1)) throw std::invalid_argument("render: empty viewport");

    Graymap g(config.width, config.height);
    if (config.mode == RenderMode::Cover) {
        if (config.m == 0) throw std::invalid_argument("render: cover depth must be >= 1");
        const std::uint64_t words = cover_word_count(config.m, config.epsilon);
        if (words > budget.max_words)
            throw ResourceError("render: " + std::to_string(words) + " cover words exceed the budget of " +
                                std::to_string(budget.max_words));
        if (config.variant == Variant::Standard)
            render_cover_exact(g, config, budget);
        else
            render_cover_affine(g, config, budget);
    } else {
        if (config.variant == Variant::Standard)
            render_cloud_exact(g, config);
        else
            render_cloud_affine(g, config);
    }
    return g;
}

} // namespace fractal
