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

#include "fractal/measure.hpp"

#include <stdexcept>

namespace fractal {

namespace {

// Largest j with 5j < 2n.
unsigned long fail_threshold(unsigned long n) { return (2 * n - 1) / 5; }

Rational power(const Rational& base, unsigned long e)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return Rational(num, den);
}

Rational tail_bound(const TailDomination& d, unsigned long M)
{
    return d.c * power(d.rho, M + 1) / (Rational(1) - d.rho);
}

} // namespace

std::vector<BigInt> fail_count_table(unsigned long max_n)
{
    std::vector<BigInt> table(max_n + 1);
    if (max_n == 0) return table;

    // sum = sum_{j <= t} C(n, j), edge = C(n, t).
    unsigned long t = 0;
    BigInt sum = 1;
    BigInt edge = 1;
    table[1] = sum;
    for (unsigned long n = 1; n < max_n; ++n) {
        // Pascal: sum_{j<=t} C(n+1, j) = 2 sum_{j<=t} C(n, j) - C(n, t).
        sum = 2 * sum - edge;
        edge *= n + 1;
        mpz_divexact_ui(edge.get_mpz_t(), edge.get_mpz_t(), n + 1 - t);
        if (fail_threshold(n + 1) == t + 1) {
            edge *= n + 1 - t;
            mpz_divexact_ui(edge.get_mpz_t(), edge.get_mpz_t(), t + 1);
            sum += edge;
            ++t;
        }
        table[n + 1] = sum;
    }
    return table;
}

Rational binom_fail_prob(unsigned long n)
{
    if (n == 0) throw std::invalid_argument("binom_fail_prob: n must be >= 1");
    return ldexp(Rational(fail_count_table(n)[n]), -static_cast<long>(n));
}

bool chernoff_dominates(const TailDomination& d)
{
    return d.c >= Rational(1) && d.rho < Rational(1) && d.rho.sign() > 0 &&
           power(d.rho, 5) * Rational(3456) >= Rational(3125);
}

MeasureCertificate an_lower_bound(unsigned long N, unsigned long M, unsigned long spot_range,
                                  const TailDomination& domination)
{
    if (N == 0 || M < N) throw std::invalid_argument("an_lower_bound: need 1 <= N <= M");

    MeasureCertificate cert;
    cert.N = N;
    cert.M = M;
    cert.domination = domination;

    const auto table = fail_count_table(M + spot_range);

    BigInt numerator = 0;
    for (unsigned long n = N; n <= M; ++n) numerator += table[n] << static_cast<mp_bitcnt_t>(M - n);
    cert.exact_part = ldexp(Rational(numerator), -static_cast<long>(M));
    cert.tail_bound = tail_bound(domination, M);

    const Rational rest = Rational(1) - cert.exact_part - cert.tail_bound;
    cert.an_lower = rest.sign() > 0 ? rest : Rational(0);
    cert.area_lower = ldexp(cert.an_lower / Rational(56), -static_cast<long>(N));

    cert.lemma_ok = chernoff_dominates(domination);
    cert.spot_check_from = M + 1;
    cert.spot_check_to = M + spot_range;
    cert.spot_check_ok = true;
    Rational bound = domination.c * power(domination.rho, M);
    for (unsigned long n = M + 1; n <= M + spot_range; ++n) {
        bound *= domination.rho;
        if (ldexp(Rational(table[n]), -static_cast<long>(n)) > bound) {
            cert.spot_check_ok = false;
            break;
        }
    }

    auto& t = cert.transcript;
    t.push_back("A_N^c is contained in the union over n >= N of {#zeros among a_1..a_n < 2n/5}.");
    t.push_back("Leb(A_N) >= 1 - sum_{n=N}^{M} failProb(n) - sum_{n>M} failProb(n) (union bound).");
    t.push_back("failProb(n) = 2^-n * sum_{5j<2n} C(n,j), summed exactly for n = " + std::to_string(N) + ".." +
                std::to_string(M) + ".");
    t.push_back("Chernoff: failProb(n) <= ((3125/3456)^(1/5))^n; rho = " + domination.rho.str() +
                " satisfies rho^5 >= 3125/3456: " + (cert.lemma_ok ? "yes" : "NO") + ".");
    t.push_back("Tail: sum_{n>M} c rho^n = c rho^(M+1)/(1-rho), c = " + domination.c.str() + ".");
    t.push_back("Spot check failProb(n) <= c rho^n exactly for n = " + std::to_string(cert.spot_check_from) + ".." +
                std::to_string(cert.spot_check_to) + ": " + (cert.spot_check_ok ? "passed" : "FAILED") + ".");
    t.push_back("Every y in A_N has [0, 1/(56*2^N)] in its fibre; Fubini gives area(K) >= Leb(A_N)/(56*2^N).");
    t.push_back(cert.an_lower.sign() > 0 ? "Lower bound is positive: area(K) >= areaLower > 0."
                                         : "Union bound is not below 1 at this N; no positive bound claimed.");
    return cert;
}

Rational area_lower_bound(unsigned long N, unsigned long M) { return an_lower_bound(N, M, 0).area_lower; }

std::optional<unsigned long> minimal_positive_N(unsigned long M, const TailDomination& domination)
{
    if (M == 0) return std::nullopt;
    const auto table = fail_count_table(M);
    const Rational tail = tail_bound(domination, M);
    const Rational one(1);

    std::optional<unsigned long> best;
    BigInt numerator = 0;
    // The failure sum grows as N decreases, so the feasible N form a suffix.
    for (unsigned long N = M; N >= 1; --N) {
        numerator += table[N] << static_cast<mp_bitcnt_t>(M - N);
        if (ldexp(Rational(numerator), -static_cast<long>(M)) + tail < one)
            best = N;
        else
            break;
    }
    return best;
}

} // namespace fractal
