// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/quadrature.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace vanetstat {

namespace {

std::string describe_failure(double estimate, double error_bound)
{
    std::ostringstream os;
    os.precision(10);
    os << "quadrature did not converge: estimate " << estimate
       << ", error bound " << error_bound;
    return os.str();
}

struct Panel
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(Panel const& other) const { return error < other.error; }
};

// Kronrod nodes at even indices coincide with the 7-point Gauss nodes.
Panel gk15(std::function<double(double)> const& f, double a, double b)
{
    using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using gauss = boost::math::quadrature::gauss<double, 7>;
    auto const& xk = kronrod::abscissa();
    auto const& wk = kronrod::weights();
    auto const& wg = gauss::weights();

    double const half = 0.5 * (b - a);
    double const mid = 0.5 * (a + b);

    double const fc = f(mid);
    double k_sum = wk[0] * fc;
    double g_sum = wg[0] * fc;
    for (std::size_t i = 1; i < xk.size(); ++i) {
        double const dx = half * xk[i];
        double const pair = f(mid - dx) + f(mid + dx);
        k_sum += wk[i] * pair;
        if (i % 2 == 0)
            g_sum += wg[i / 2] * pair;
    }
    double const k_val = half * k_sum;
    double const g_val = half * g_sum;
    return {a, b, k_val, std::abs(k_val - g_val)};
}

}  // namespace

QuadratureError::QuadratureError(double estimate, double error_bound)
    : std::runtime_error(describe_failure(estimate, error_bound))
    , estimate_(estimate)
    , error_bound_(error_bound)
{
}

QuadratureResult integrate(std::function<double(double)> const& f, double a,
                           double b, QuadratureOptions const& options)
{
    if (!(a < b))
        throw std::invalid_argument("integration interval must satisfy a < b");
    if (!(options.abs_tol > 0) || options.max_intervals == 0)
        throw std::invalid_argument("quadrature needs abs_tol > 0 and a nonzero budget");

    std::priority_queue<Panel> panels;
    panels.push(gk15(f, a, b));
    double total = panels.top().value;
    double error = panels.top().error;

    while (error > options.abs_tol) {
        if (panels.size() >= options.max_intervals)
            throw QuadratureError(total, error);
        Panel worst = panels.top();
        panels.pop();
        double const mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b))
            throw QuadratureError(total, error);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the drift of the running updates.
    QuadratureResult result;
    result.intervals = panels.size();
    result.value = 0;
    result.error = 0;
    while (!panels.empty()) {
        result.value += panels.top().value;
        result.error += panels.top().error;
        panels.pop();
    }
    return result;
}

QuadratureResult integrate_half_line(std::function<double(double)> const& f,
                                     double scale,
                                     QuadratureOptions const& options)
{
    if (!(scale > 0) || !std::isfinite(scale))
        throw std::invalid_argument("half-line scale must be positive and finite");
    auto mapped = [&](double t) {
        double const one_minus = 1.0 - t;
        if (one_minus <= 0)
            return 0.0;
        double const x = scale * t / one_minus;
        double const jac = scale / (one_minus * one_minus);
        double const v = f(x) * jac;
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate(mapped, 0.0, 1.0, options);
}

}  // namespace vanetstat
