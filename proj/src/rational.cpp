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

#include "fractal/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace fractal {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    BigInt v(std::string(s), 10);
    return neg ? BigInt(-v) : v;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
        BigInt den(std::string(den_text), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = false;
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            neg = whole.front() == '-';
            whole.remove_prefix(1);
        }
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        BigInt num(digits.empty() ? std::string("0") : digits, 10);
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        if (neg) num = -num;
        return Rational(num, den);
    }

    return Rational(parse_integer(text));
}

Rational Rational::pow2(long e) { return ldexp(Rational(1), e); }

bool Rational::is_dyadic() const
{
    const BigInt& d = v_.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1;
}

BigInt Rational::floor() const
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

BigInt Rational::ceil() const
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::reciprocal() const
{
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

long double Rational::to_long_double() const
{
    // Split into integer and fractional parts scaled by 2^64 so the result
    // keeps the full extended mantissa for moderately sized operands.
    Rational scaled = ldexp(*this, 64);
    BigInt f = scaled.floor();
    long double hi = static_cast<long double>(mpz_get_d(f.get_mpz_t()));
    Rational rest = scaled - Rational(f);
    return std::ldexp(hi + static_cast<long double>(rest.to_double()), -64);
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational operator-(const Rational& a)
{
    Rational r;
    r.v_ = -a.v_;
    return r;
}

Rational ldexp(const Rational& r, long e)
{
    mpq_class out;
    if (e >= 0)
        mpq_mul_2exp(out.get_mpq_t(), r.raw().get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(out.get_mpq_t(), r.raw().get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(out.get_num(), out.get_den());
}

unsigned long two_adic_valuation(const BigInt& v)
{
    if (v == 0) throw std::domain_error("valuation of zero");
    return mpz_scan1(v.get_mpz_t(), 0);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace fractal
