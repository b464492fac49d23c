// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/rational.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vanetstat {

Integer binomial(long n, long k)
{
    Integer result = 0;
    if (n < 0 || k < 0 || k > n)
        return result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

[[noreturn]] void bad_literal(std::string_view text)
{
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        bad_literal(text);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num / den);
    }

    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = body.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6)
            bad_literal(text);
        exponent = std::stol(std::string(exp_text));
        if (exp_negative)
            exponent = -exponent;
        body = body.substr(0, e);
    }

    std::string digits;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty())
            || (!int_part.empty() && !all_digits(int_part))
            || (!frac_part.empty() && !all_digits(frac_part)))
            bad_literal(text);
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(body))
            bad_literal(text);
        digits = std::string(body);
    }

    Rational result(Integer(digits, 10));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0)
        result *= scale;
    else
        result /= scale;
    result.canonicalize();
    if (negative)
        result = -result;
    return result;
}

Rational to_rational(double value)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("cannot convert a non-finite double to a rational");
    Rational result;
    mpq_set_d(result.get_mpq_t(), value);
    return result;
}

double to_double(Rational const& value)
{
    // get_d truncates toward zero; step away from zero when the neighbour is closer.
    double const d = value.get_d();
    if (value == 0 || !std::isfinite(d))
        return d;
    double const away = std::nextafter(d, sgn(value) > 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away))
        return d;
    Rational const err_d = abs(value - Rational(d));
    Rational const err_away = abs(Rational(away) - value);
    if (err_away < err_d)
        return away;
    if (err_away == err_d) {
        // Ties go to the even mantissa.
        auto const bits = std::bit_cast<std::uint64_t>(d);
        return (bits & 1U) != 0 ? away : d;
    }
    return d;
}

}  // namespace vanetstat
