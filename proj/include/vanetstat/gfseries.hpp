// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vanetstat/rational.hpp"

namespace vanetstat {

//---------------------------------------------------------------------------//
/*!
 * Power series truncated at a fixed order.
 *
 * Coefficient i multiplies x^i. Every arithmetic operation keeps the
 * truncation order of its operands, and binary operations require the orders
 * to match. The coefficient type is Rational for exact work; double is used by
 * the floating-point fast paths.
 */
template <class T>
class Series
{
  public:
    using value_type = T;

    explicit Series(std::size_t order) : coeffs_(order + 1, T(0)) {}

    /// Coefficients beyond the order are dropped, missing ones are zero.
    Series(std::size_t order, std::initializer_list<T> coeffs) : Series(order)
    {
        std::size_t i = 0;
        for (auto const& c : coeffs) {
            if (i > order)
                break;
            coeffs_[i++] = c;
        }
    }

    static Series monomial(std::size_t order, std::size_t power, T const& scale = T(1))
    {
        Series s(order);
        if (power <= order)
            s.coeffs_[power] = scale;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    T const& coeff(std::size_t power) const
    {
        if (power > order())
            throw std::out_of_range("coefficient x^" + std::to_string(power)
                                    + " is beyond truncation order "
                                    + std::to_string(order()));
        return coeffs_[power];
    }

    T& operator[](std::size_t power) { return coeffs_.at(power); }
    T const& operator[](std::size_t power) const { return coeffs_.at(power); }

    std::vector<T> const& coeffs() const { return coeffs_; }

    Series& operator+=(Series const& other)
    {
        check_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        return *this;
    }

    Series& operator-=(Series const& other)
    {
        check_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= other.coeffs_[i];
        return *this;
    }

    Series& operator*=(T const& scale)
    {
        for (auto& c : coeffs_)
            c *= scale;
        return *this;
    }

    friend Series operator+(Series a, Series const& b) { return a += b; }
    friend Series operator-(Series a, Series const& b) { return a -= b; }
    friend Series operator*(Series a, T const& s) { return a *= s; }

    /// Cauchy product truncated at the common order.
    friend Series operator*(Series const& a, Series const& b)
    {
        a.check_order(b);
        std::size_t const n = a.coeffs_.size();
        Series out(a.order());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.coeffs_[j] != 0)
                    out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// Multiply by x^shift, dropping what falls beyond the order.
    Series shifted(std::size_t shift) const
    {
        Series out(order());
        for (std::size_t i = 0; i + shift <= order(); ++i)
            out.coeffs_[i + shift] = coeffs_[i];
        return out;
    }

    /// Same series re-truncated at a smaller (or larger, zero-padded) order.
    Series truncated(std::size_t new_order) const
    {
        Series out(new_order);
        for (std::size_t i = 0; i <= std::min(new_order, order()); ++i)
            out.coeffs_[i] = coeffs_[i];
        return out;
    }

    bool operator==(Series const& other) const = default;

  private:
    void check_order(Series const& other) const
    {
        if (other.order() != order())
            throw std::invalid_argument("series truncation orders differ: "
                                        + std::to_string(order()) + " vs "
                                        + std::to_string(other.order()));
    }

    std::vector<T> coeffs_;
};

using ExactSeries = Series<Rational>;

/// a^k by repeated squaring; a^0 is the unit series.
template <class T>
Series<T> pow(Series<T> base, unsigned long k)
{
    Series<T> result = Series<T>::monomial(base.order(), 0);
    while (k != 0) {
        if (k & 1UL)
            result = result * base;
        k >>= 1;
        if (k != 0)
            base = base * base;
    }
    return result;
}

/// b with a*b = 1 + O(x^{order+1}); requires a nonzero constant term.
template <class T>
Series<T> reciprocal(Series<T> const& a)
{
    if (a.coeff(0) == 0)
        throw std::domain_error("series reciprocal needs a nonzero constant term");
    std::size_t const n = a.order();
    Series<T> b(n);
    T const inv0 = T(1) / a.coeff(0);
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        T acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (a.coeff(i) != 0)
                acc += a.coeff(i) * b.coeff(k - i);
        }
        b[k] = -acc * inv0;
    }
    return b;
}

/// x + x^2 + x^3 + ... truncated at the order.
template <class T>
Series<T> positive_integers_series(std::size_t order)
{
    Series<T> s(order);
    for (std::size_t i = 1; i <= order; ++i)
        s[i] = T(1);
    return s;
}

/// Number of ordered compositions of n into k positive parts with exactly s
/// parts equal to r, read off as the x^n coefficient of
/// C(k,s) x^{rs} (x + x^2 + ... - x^r)^{k-s}.
Integer num_compositions(long n, long k, long r, long s);

}  // namespace vanetstat
