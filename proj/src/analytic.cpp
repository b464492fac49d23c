// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "vanetstat/format.hpp"
#include "vanetstat/gfseries.hpp"

namespace vanetstat {

namespace {

template <class T>
void check_args(int n, T const& p)
{
    if (n < 2 || n > kMaxVehicles)
        throw std::invalid_argument("vehicle count must be in [2, "
                                    + std::to_string(kMaxVehicles) + "], got "
                                    + std::to_string(n));
    if (!(p >= 0 && p <= 1))
        throw std::invalid_argument("link probability must be in [0, 1]");
}

template <class T>
std::string describe(int n, T const& p)
{
    if constexpr (is_exact_v<T>)
        return "n=" + std::to_string(n) + ";p=" + p.get_str();
    else
        return "n=" + std::to_string(n) + ";p=" + format_double(p);
}

template <class T>
BasicPmf<T> make_pmf(Statistic stat, int n, T const& p)
{
    BasicPmf<T> pmf;
    pmf.support_min = support_min(stat);
    pmf.probs.assign(static_cast<std::size_t>(n - pmf.support_min + 1), T(0));
    pmf.source = PmfSource::analytic;
    pmf.meta = describe(n, p);
    return pmf;
}

template <class T>
T& slot(BasicPmf<T>& pmf, int r)
{
    return pmf.probs[static_cast<std::size_t>(r - pmf.support_min)];
}

// Powers base^0 .. base^count.
template <class T>
std::vector<T> power_table(T const& base, int count)
{
    std::vector<T> out(static_cast<std::size_t>(count) + 1);
    out[0] = 1;
    for (std::size_t i = 1; i < out.size(); ++i)
        out[i] = out[i - 1] * base;
    return out;
}

// Binomial term C(n-1, r-1) p^{n-r} q^{r-1} without overflowing doubles.
double binomial_term(int n, int r, double p, double q)
{
    int const trials = n - 1;
    int const failures = r - 1;
    if (trials <= 1000) {
        return binomial(trials, failures).get_d() * std::pow(p, trials - failures)
               * std::pow(q, failures);
    }
    double const log_c = std::lgamma(trials + 1.0) - std::lgamma(failures + 1.0)
                         - std::lgamma(trials - failures + 1.0);
    return std::exp(log_c + (trials - failures) * std::log(p) + failures * std::log(q));
}

}  // namespace

template <class T>
BasicPmf<T> clust_num_pmf(int n, T const& p)
{
    check_args(n, p);
    auto pmf = make_pmf(Statistic::clust_num, n, p);
    T const q = 1 - p;
    if (p == 1) {
        slot(pmf, 1) = 1;
        return pmf;
    }
    if (p == 0) {
        slot(pmf, n) = 1;
        return pmf;
    }
    if constexpr (is_exact_v<T>) {
        auto const pp = power_table(p, n - 1);
        auto const qp = power_table(q, n - 1);
        for (int r = 1; r <= n; ++r)
            slot(pmf, r) = binomial_as<T>(n - 1, r - 1) * pp[n - r] * qp[r - 1];
    } else {
        for (int r = 1; r <= n; ++r)
            slot(pmf, r) = binomial_term(n, r, p, q);
    }
    return pmf;
}

template <class T>
BasicMoments<T> clust_num_moments(int n, T const& p)
{
    check_args(n, p);
    T const q = 1 - p;
    return {T(1 + (n - 1) * q), T((n - 1) * p * q)};
}

template <class T>
T connected_clust_num_mean(int n, T const& p)
{
    check_args(n, p);
    T const q = 1 - p;
    return T(1 + (n - 1) * q - 2 * q - (n - 2) * q * q);
}

template <class T>
BasicPmf<T> clust_size_pmf(int n, T const& p)
{
    check_args(n, p);
    auto pmf = make_pmf(Statistic::clust_size, n, p);
    T const q = 1 - p;
    T pk = 1;  // p^{r-1}
    for (int r = 1; r < n; ++r) {
        slot(pmf, r) = pk * q;
        pk *= p;
    }
    slot(pmf, n) = pk;
    return pmf;
}

template <class T>
BasicMoments<T> clust_size_moments(int n, T const& p)
{
    check_args(n, p);
    if (p == 1)
        return {T(n), T(0)};
    T const q = 1 - p;
    T const pn = ipow(p, static_cast<unsigned long>(n));
    T const pn1 = pn * p;
    T const mean = (1 - pn) / q;
    T const var = (2 * pn1 * n - 2 * pn * n - pn * pn - pn1 + pn + p) / (q * q);
    return {mean, var};
}

ExactPmf clust_size_pmf_via_compositions(int n, Rational const& p)
{
    check_args(n, p);
    auto pmf = make_pmf(Statistic::clust_size, n, p);
    Rational const q = 1 - p;
    auto const pp = power_table(p, n);
    auto const qp = power_table(q, n);
    for (int r = 1; r <= n; ++r) {
        Rational total = 0;
        for (int k = 1; k <= n; ++k) {
            // Expected fraction of parts equal to r, summed over compositions.
            Rational share = 0;
            for (int s = 1; s <= k; ++s) {
                Integer const count = num_compositions(n, k, r, s);
                if (count != 0)
                    share += Rational(Integer(count * s)) / k;
            }
            total += qp[k - 1] * pp[n - k] * share;
        }
        slot(pmf, r) = total;
    }
    return pmf;
}

template <class T>
T longest_run_cdf_g(int n, T const& p, int k)
{
    check_args(n, p);
    if (k < 1 || k > n - 1)
        throw std::out_of_range("g(k) needs 1 <= k <= n-1, got k=" + std::to_string(k));
    T const q = 1 - p;
    T const pk = ipow(p, static_cast<unsigned long>(k));
    T sum = 0;
    T term_base = 1;  // (p^k q)^m
    for (int m = 0; m <= (n - 1) / (k + 1); ++m) {
        T t = term_base * binomial_as<T>(n - 1 - m * k, m);
        sum += (m % 2 == 0) ? t : T(-t);
        term_base *= pk * q;
    }
    term_base = pk;  // p^{mk} q^{m-1}
    for (int m = 1; m <= n / (k + 1); ++m) {
        T t = term_base * binomial_as<T>(n - 1 - m * k, m - 1);
        sum += (m % 2 == 0) ? t : T(-t);
        term_base *= pk * q;
    }
    return sum;
}

namespace {

// P(no run of k successes among `links` Bernoulli(p) trials), by
// u_j = u_{j-1} - (1-p) p^k u_{j-k-1}. The sequence only decreases, so once
// it underflows the answer is zero and the loop can stop.
double run_free_prob(int links, double p, int k, std::vector<double>& u)
{
    if (k > links)
        return 1.0;
    double const pk = std::pow(p, k);
    double const step = (1 - p) * pk;
    u.assign(static_cast<std::size_t>(links) + 1, 1.0);
    u[static_cast<std::size_t>(k)] = 1 - pk;
    for (int j = k + 1; j <= links; ++j) {
        auto const i = static_cast<std::size_t>(j);
        u[i] = u[i - 1] - step * u[i - static_cast<std::size_t>(k) - 1];
        if (u[i] < 1e-300)
            return 0.0;
    }
    return u[static_cast<std::size_t>(links)];
}

}  // namespace

double longest_run_cdf_g_recursive(int n, double p, int k)
{
    check_args(n, p);
    if (k < 1 || k > n - 1)
        throw std::out_of_range("g(k) needs 1 <= k <= n-1, got k=" + std::to_string(k));
    std::vector<double> scratch;
    return run_free_prob(n - 1, p, k, scratch);
}

ExactPmf biggest_clust_pmf(int n, Rational const& p)
{
    check_args(n, p);
    auto pmf = make_pmf(Statistic::biggest_clust, n, p);
    Rational const q = 1 - p;
    slot(pmf, 1) = ipow(q, static_cast<unsigned long>(n - 1));
    slot(pmf, n) = ipow(p, static_cast<unsigned long>(n - 1));
    if (n > 2) {
        Rational prev = longest_run_cdf_g(n, p, 1);
        for (int r = 2; r < n; ++r) {
            Rational cur = longest_run_cdf_g(n, p, r);
            slot(pmf, r) = cur - prev;
            prev = std::move(cur);
        }
    }
    return pmf;
}

Pmf biggest_clust_pmf(int n, double p)
{
    check_args(n, p);
    auto pmf = make_pmf(Statistic::biggest_clust, n, p);
    double const q = 1 - p;
    slot(pmf, 1) = std::pow(q, n - 1);
    slot(pmf, n) = std::pow(p, n - 1);
    if (n > 2 && p > 0 && p < 1) {
        std::vector<double> scratch;
        double prev = run_free_prob(n - 1, p, 1, scratch);
        for (int r = 2; r < n; ++r) {
            double const cur = run_free_prob(n - 1, p, r, scratch);
            slot(pmf, r) = std::max(0.0, cur - prev);
            // Whatever is left above r is below double resolution.
            if (1 - cur < 1e-17)
                break;
            prev = cur;
        }
    }
    return pmf;
}

ExactMoments biggest_clust_moments_exact(int n, Rational const& p)
{
    return moments_of(biggest_clust_pmf(n, p));
}

Moments biggest_clust_moments_exact(int n, double p)
{
    return moments_of(biggest_clust_pmf(n, p));
}

Moments biggest_clust_moments_asymptotic(int n, double p)
{
    if (n < 3 || n > kMaxVehicles)
        throw std::invalid_argument("asymptotic biggest-cluster moments need n >= 3");
    if (!(p > 0 && p < 1))
        throw std::invalid_argument("asymptotic biggest-cluster moments need 0 < p < 1");
    double const log_inv_p = std::log(1 / p);
    double const mean = std::log((n - 1) * (1 - p)) / log_inv_p
                        + std::numbers::egamma / log_inv_p + 0.5;
    double const variance = std::numbers::pi * std::numbers::pi / (log_inv_p * log_inv_p)
                            + 1.0 / 12.0;
    return {mean, variance};
}

namespace {

// P(r) = p^{n+1}/(1-p)^2 [x^{n-r}] ((1-x) / ((1-x) c - x^2))^{r+1}, c = p/(1-p).
void fill_idle_exact(ExactPmf& pmf, int n, Rational const& p)
{
    Rational const q = 1 - p;
    Rational const c = p / q;
    auto const order = static_cast<std::size_t>(n);

    ExactSeries denom(order, {c, Rational(-c), Rational(-1)});
    ExactSeries const one_minus_x(order, {Rational(1), Rational(-1)});
    ExactSeries const base = one_minus_x * reciprocal(denom);
    Rational const prefactor = ipow(p, static_cast<unsigned long>(n + 1)) / (q * q);

    ExactSeries power = base;  // base^{r+1}, truncated at x^{n-r}
    for (int r = 0; r <= n; ++r) {
        auto const m = static_cast<std::size_t>(n - r);
        slot(pmf, r) = prefactor * power.coeff(m);
        if (r < n)
            power = power.truncated(m - 1) * base.truncated(m - 1);
    }
}

// Rescaled form (x = p y): P(r) = q^{r-1} [y^{n-r}] G(y)^{r+1} with
// G(y) = 1 + p q y^2 / (1 - p y - p q y^2), whose coefficients are all in [0, 1].
void fill_idle_double(Pmf& pmf, int n, double p)
{
    // Walk the chain link by link. down[c] / up[c]: probability that the
    // latest link is down / up with c vehicles idle so far. Only nonnegative
    // terms are added, so relative accuracy holds even far in the tails.
    double const q = 1 - p;
    std::vector<double> down(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> up(down.size(), 0.0);
    down[0] = 1;  // no link to the left of the first vehicle
    std::size_t lo = 0, hi = 0;
    // Mass this small cannot matter; dropping it keeps the band narrow.
    constexpr double negligible = 1e-300;
    for (int link = 1; link < n; ++link) {
        ++hi;
        for (std::size_t c = hi + 1; c-- > lo;) {
            double const was_down = down[c];
            double const was_up = up[c];
            double const below = c > lo ? down[c - 1] : 0.0;
            up[c] = p * (was_down + was_up);
            down[c] = q * (below + was_up);
        }
        while (hi > lo && down[hi] + up[hi] < negligible) {
            down[hi] = up[hi] = 0;
            --hi;
        }
        while (lo < hi && down[lo] + up[lo] < negligible) {
            down[lo] = up[lo] = 0;
            ++lo;
        }
    }
    for (std::size_t c = lo; c <= hi; ++c) {
        slot(pmf, static_cast<int>(c) + 1) += down[c];
        slot(pmf, static_cast<int>(c)) += up[c];
    }
}

}  // namespace

template <class T>
BasicPmf<T> idle_cars_pmf(int n, T const& p)
{
    check_args(n, p);
    auto pmf = make_pmf(Statistic::idle_cars, n, p);
    if (p == 1) {
        slot(pmf, 0) = 1;
        return pmf;
    }
    if (p == 0) {
        slot(pmf, n) = 1;
        return pmf;
    }
    if constexpr (is_exact_v<T>)
        fill_idle_exact(pmf, n, p);
    else
        fill_idle_double(pmf, n, p);
    return pmf;
}

template <class T>
BasicMoments<T> idle_cars_moments(int n, T const& p)
{
    check_args(n, p);
    T const q = 1 - p;
    T const mean = 2 * q + (n - 2) * q * q;
    if (n == 2)
        return {mean, T(4 * p * q)};
    T const p2 = p * p;
    T const p3 = p2 * p;
    T const p4 = p3 * p;
    T const var = -3 * n * p4 + 10 * n * p3 - 11 * n * p2 + 4 * n * p
                  + 8 * p4 - 22 * p3 + 18 * p2 - 4 * p;
    return {mean, var};
}

#define VANETSTAT_INSTANTIATE(T)                                          \
    template BasicPmf<T> clust_num_pmf<T>(int, T const&);                 \
    template BasicMoments<T> clust_num_moments<T>(int, T const&);         \
    template T connected_clust_num_mean<T>(int, T const&);                \
    template BasicPmf<T> clust_size_pmf<T>(int, T const&);                \
    template BasicMoments<T> clust_size_moments<T>(int, T const&);        \
    template T longest_run_cdf_g<T>(int, T const&, int);                  \
    template BasicPmf<T> idle_cars_pmf<T>(int, T const&);                 \
    template BasicMoments<T> idle_cars_moments<T>(int, T const&);

VANETSTAT_INSTANTIATE(double)
VANETSTAT_INSTANTIATE(Rational)

#undef VANETSTAT_INSTANTIATE

}  // namespace vanetstat
