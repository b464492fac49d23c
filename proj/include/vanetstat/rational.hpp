// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace vanetstat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Exact value of a decimal ("0.5576", "1e-3"), fraction ("1/10") or integer literal.
Rational parse_rational(std::string_view text);

/// Exact binary value of a finite double.
Rational to_rational(double value);

double to_double(Rational const& value);
inline double to_double(double value) { return value; }

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// Non-negative integer power that works for both double and Rational.
template <class T>
    requires(std::is_arithmetic_v<T> || is_exact_v<T>)
T ipow(T const& base, unsigned long exponent)
{
    if constexpr (is_exact_v<T>) {
        Rational result;
        mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
        mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
        return result;
    } else {
        T result = 1;
        T factor = base;
        while (exponent != 0) {
            if (exponent & 1UL)
                result *= factor;
            factor *= factor;
            exponent >>= 1;
        }
        return result;
    }
}

/// Binomial coefficient converted to T.
//! Accepts GMP expression templates such as ipow(1 - p, k).
inline Rational ipow(Rational const& base, unsigned long exponent)
{
    return ipow<Rational>(base, exponent);
}

template <class T>
T binomial_as(long n, long k)
{
    if constexpr (is_exact_v<T>)
        return Rational(binomial(n, k));
    else
        return binomial(n, k).get_d();
}

}  // namespace vanetstat
