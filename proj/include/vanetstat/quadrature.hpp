// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace vanetstat {

struct QuadratureOptions
{
    double abs_tol = 1e-7;
    //! Maximum number of subintervals kept by the adaptive refinement.
    std::size_t max_intervals = 2000;
};

struct QuadratureResult
{
    double value = 0;
    double error = 0;
    std::size_t intervals = 0;
};

//! Raised when the refinement budget runs out before the tolerance is met.
class QuadratureError : public std::runtime_error
{
  public:
    QuadratureError(double estimate, double error_bound);

    double estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

  private:
    double estimate_;
    double error_bound_;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
QuadratureResult integrate(std::function<double(double)> const& f, double a,
                           double b, QuadratureOptions const& options = {});

/// Integral over (0, inf) via x = scale * t / (1 - t), t in (0, 1).
/// `scale` should be comparable to where the integrand's mass sits.
QuadratureResult integrate_half_line(std::function<double(double)> const& f,
                                     double scale,
                                     QuadratureOptions const& options = {});

}  // namespace vanetstat
