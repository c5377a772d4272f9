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
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Every certified quantity in the library is a Rational. Values are kept in
 * lowest terms with a positive denominator, so equality is value equality and
 * the textual form "p/q" is canonical ("0/1" for zero).
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fractal {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(const BigInt& v) : v_(v) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    /// Parses "p/q", "p", or a finite decimal such as "-0.0125". Decimals are
    /// converted exactly; malformed input throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// 2^e for any integer e.
    static Rational pow2(long e);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// True when the denominator is a power of two.
    bool is_dyadic() const;

    /// Largest integer not exceeding the value.
    BigInt floor() const;
    /// Smallest integer not below the value.
    BigInt ceil() const;

    Rational reciprocal() const;
    Rational abs() const;

    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// Multiplies by 2^e without materializing 2^e as a rational.
Rational ldexp(const Rational& r, long e);

/// p-adic valuation of a positive integer at 2.
unsigned long two_adic_valuation(const BigInt& v);

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace fractal
