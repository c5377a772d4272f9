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

/**
 * @file render.hpp
 * @brief Plain (P2) graymap pictures of the triangle covers and of sampled
 * point clouds.
 *
 * The standard variant is exact: a cover pixel is lit iff its center lies in
 * some depth-m triangle, decided with rational arithmetic. The self-affine
 * variant (x contracted by 1/sqrt 2, translations 1/(2^(k/2) n)) has
 * irrational data and is computed in long double; it only produces pictures.
 */

#include "fractal/errors.hpp"
#include "fractal/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fractal {

enum class RenderMode { Cover, Cloud };
enum class Variant { Standard, SelfAffine };

struct Viewport {
    Rational x0{0};
    Rational x1{1};
    Rational y0{0};
    Rational y1{1};
};

struct RenderConfig {
    unsigned width = 512;
    unsigned height = 512;
    Viewport viewport;
    RenderMode mode = RenderMode::Cover;
    Variant variant = Variant::Standard;
    // cover
    unsigned m = 1;
    Rational epsilon{1};
    // cloud
    std::uint64_t samples = 0;
    unsigned depth = 24;
    std::uint64_t seed = 1;
};

/// 8-bit graymap, row 0 at the top. Foreground 0, background 255.
class Graymap {
public:
    static constexpr std::uint8_t kBackground = 255;
    static constexpr std::uint8_t kForeground = 0;

    Graymap(unsigned width, unsigned height) : width_(width), height_(height), pixels_(std::size_t{width} * height, kBackground) {}

    unsigned width() const { return width_; }
    unsigned height() const { return height_; }
    std::uint8_t at(unsigned col, unsigned row) const { return pixels_[std::size_t{row} * width_ + col]; }
    void set(unsigned col, unsigned row, std::uint8_t v) { pixels_[std::size_t{row} * width_ + col] = v; }
    std::size_t lit_count() const;

    /// Plain PGM: "P2", dimensions, maxval 255, rows wrapped at 70 columns.
    std::string to_plain_pgm() const;
    static Graymap from_plain_pgm(const std::string& text);

    friend bool operator==(const Graymap&, const Graymap&) = default;

private:
    unsigned width_;
    unsigned height_;
    std::vector<std::uint8_t> pixels_;
};

/// Pixel-center coordinates in the viewport (exact).
Rational pixel_center_x(const RenderConfig& config, unsigned col);
Rational pixel_center_y(const RenderConfig& config, unsigned row);

/// Throws std::invalid_argument for an empty image or viewport and
/// ResourceError when a cover exceeds the word budget.
Graymap render(const RenderConfig& config, const Budget& budget = Budget::from_environment());

} // namespace fractal
