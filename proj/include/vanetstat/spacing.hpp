// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "vanetstat/rng.hpp"

namespace vanetstat {

namespace spacing {

//! Density rate * exp(-rate * x); `rate` is vehicles per meter.
struct Exponential
{
    double rate;
};

//! Shape/scale parameterization: mean = shape * scale.
struct Gamma
{
    double shape;
    double scale;
};

//! log(d) ~ Normal(mu, sigma^2).
struct LogNormal
{
    double mu;
    double sigma;
};

//! Normal(mean, stddev^2) conditioned on d > 0.
struct TruncatedNormal
{
    double mean;
    double stddev;
};

//! Every gap equals d0.
struct PointMass
{
    double d0;
};

}  // namespace spacing

//---------------------------------------------------------------------------//
/*!
 * Distribution of the distance between consecutive vehicles, in meters.
 */
class SpacingModel
{
  public:
    using Family = std::variant<spacing::Exponential, spacing::Gamma,
                                spacing::LogNormal, spacing::TruncatedNormal,
                                spacing::PointMass>;

    //! Validates the parameters; throws std::invalid_argument.
    explicit SpacingModel(Family family);

    static SpacingModel exponential(double rate) { return SpacingModel{spacing::Exponential{rate}}; }
    static SpacingModel gamma(double shape, double scale) { return SpacingModel{spacing::Gamma{shape, scale}}; }
    static SpacingModel lognormal(double mu, double sigma) { return SpacingModel{spacing::LogNormal{mu, sigma}}; }
    static SpacingModel truncated_normal(double mean, double sd) { return SpacingModel{spacing::TruncatedNormal{mean, sd}}; }
    static SpacingModel point_mass(double d0) { return SpacingModel{spacing::PointMass{d0}}; }

    /*!
     * Parse the compact form used on the command line:
     * `exp:RATE`, `gamma:SHAPE,SCALE`, `lognormal:MU,SIGMA`,
     * `normal:MEAN,SD` (truncated at zero) or `point:D0`.
     */
    static SpacingModel parse(std::string_view text);

    /*!
     * Build from config keys (`spacing.family`, `spacing.rho`,
     * `spacing.shape`/`spacing.scale`, `spacing.mu`/`spacing.sigma`,
     * `spacing.mean`/`spacing.sd`, `spacing.d0`).
     */
    static SpacingModel from_config(std::map<std::string, std::string> const& kv);

    Family const& family() const { return family_; }
    bool is_point_mass() const { return std::holds_alternative<spacing::PointMass>(family_); }

    //! Density at x > 0. Throws for x <= 0 and for the point mass (no density).
    double pdf(double x) const;
    //! P(d <= x); zero for x <= 0.
    double cdf(double x) const;
    double mean() const;

    //! Positive draw; exponential by inverse CDF, truncated normal by rejection.
    double sample(CounterStream& stream) const;

    //! Canonical compact form accepted by parse().
    std::string to_string() const;
    //! Config keys accepted by from_config().
    std::map<std::string, std::string> to_config() const;

  private:
    Family family_;
};

}  // namespace vanetstat
