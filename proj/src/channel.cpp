// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vanetstat/format.hpp"

namespace vanetstat {

double dbm_to_watts(double dbm)
{
    return 1e-3 * std::pow(10.0, dbm / 10.0);
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

ChannelParams ChannelParams::highway_preset()
{
    ChannelParams p;
    p.tx_power = dbm_to_watts(4.0);
    p.gain_tx = 1.0;
    p.gain_rx = 1.0;
    p.carrier_freq = 5.9e9;
    p.path_loss_exp = 2.5;
    p.snr_threshold = db_to_linear(10.0);
    p.temperature = 300.0;
    p.bandwidth = 10e6;
    return p;
}

namespace {

double config_number(std::string const& key, std::string const& text)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw std::invalid_argument("bad number for " + key + ": '" + text + "'");
    return v;
}

}  // namespace

ChannelParams ChannelParams::from_config(std::map<std::string, std::string> const& kv)
{
    ChannelParams params;
    auto preset = kv.find("channel.preset");
    std::string const name = preset == kv.end() ? "paper-sec4" : preset->second;
    if (name == "paper-sec4" || name == "default" || name == "highway")
        params = highway_preset();
    else
        throw std::invalid_argument("unknown channel preset '" + name + "'");

    for (auto const& [key, value] : kv) {
        if (key.rfind("channel.", 0) != 0 || key == "channel.preset")
            continue;
        double const v = config_number(key, value);
        if (key == "channel.tx_power_dbm")
            params.tx_power = dbm_to_watts(v);
        else if (key == "channel.tx_power_w")
            params.tx_power = v;
        else if (key == "channel.gain_tx")
            params.gain_tx = v;
        else if (key == "channel.gain_rx")
            params.gain_rx = v;
        else if (key == "channel.carrier_freq")
            params.carrier_freq = v;
        else if (key == "channel.path_loss_exp")
            params.path_loss_exp = v;
        else if (key == "channel.snr_threshold_db")
            params.snr_threshold = db_to_linear(v);
        else if (key == "channel.snr_threshold")
            params.snr_threshold = v;
        else if (key == "channel.temperature")
            params.temperature = v;
        else if (key == "channel.bandwidth")
            params.bandwidth = v;
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
    params.validate();
    return params;
}

std::map<std::string, std::string> ChannelParams::to_config() const
{
    return {
        {"channel.tx_power_w", format_double(tx_power)},
        {"channel.gain_tx", format_double(gain_tx)},
        {"channel.gain_rx", format_double(gain_rx)},
        {"channel.carrier_freq", format_double(carrier_freq)},
        {"channel.path_loss_exp", format_double(path_loss_exp)},
        {"channel.snr_threshold", format_double(snr_threshold)},
        {"channel.temperature", format_double(temperature)},
        {"channel.bandwidth", format_double(bandwidth)},
    };
}

void ChannelParams::validate() const
{
    auto positive = [](double v, char const* name) {
        if (!(v > 0) || !std::isfinite(v))
            throw std::invalid_argument(std::string("channel ") + name + " must be positive");
    };
    positive(tx_power, "tx_power");
    positive(gain_tx, "gain_tx");
    positive(gain_rx, "gain_rx");
    positive(carrier_freq, "carrier_freq");
    positive(temperature, "temperature");
    positive(bandwidth, "bandwidth");
    if (!(path_loss_exp >= 1) || !std::isfinite(path_loss_exp))
        throw std::invalid_argument("channel path_loss_exp must be >= 1");
    if (!(snr_threshold >= 0) || !std::isfinite(snr_threshold))
        throw std::invalid_argument("channel snr_threshold must be >= 0");
}

DerivedChannel derive_channel(ChannelParams const& params)
{
    params.validate();
    double const wave = kSpeedOfLight / (4 * std::numbers::pi * params.carrier_freq);
    return {params.gain_tx * params.gain_rx * wave * wave,
            kBoltzmann * params.temperature * params.bandwidth};
}

namespace {

void check_distance(double distance)
{
    if (!(distance > 0))
        throw std::domain_error("distance must be positive");
}

// Psi W / (P_tx K): the coefficient of d^alpha in the outage exponent.
double outage_coefficient(DerivedChannel const& derived, ChannelParams const& params)
{
    return params.snr_threshold * derived.noise_power / (params.tx_power * derived.k_const);
}

}  // namespace

double mean_snr(DerivedChannel const& derived, ChannelParams const& params, double distance)
{
    check_distance(distance);
    return params.tx_power * derived.k_const
           / (std::pow(distance, params.path_loss_exp) * derived.noise_power);
}

double link_connect_prob(DerivedChannel const& derived, ChannelParams const& params,
                         double distance)
{
    check_distance(distance);
    return std::exp(-outage_coefficient(derived, params)
                    * std::pow(distance, params.path_loss_exp));
}

double connection_prob(DerivedChannel const& derived, ChannelParams const& params,
                       SpacingModel const& spacing, QuadratureOptions const& options)
{
    if (auto const* pm = std::get_if<spacing::PointMass>(&spacing.family()))
        return link_connect_prob(derived, params, pm->d0);
    if (params.snr_threshold == 0)
        return 1.0;

    double const coeff = outage_coefficient(derived, params);
    double const alpha = params.path_loss_exp;
    auto integrand = [&](double x) {
        return std::exp(-coeff * std::pow(x, alpha)) * spacing.pdf(x);
    };
    // Map around the smaller of the spacing mean and the e^-1 link distance.
    double const link_scale = std::pow(coeff, -1.0 / alpha);
    double const scale = std::min(spacing.mean(), link_scale);
    QuadratureResult const r = integrate_half_line(integrand, scale, options);

    double p = r.value;
    if (p < 0) {
        if (p < -options.abs_tol)
            throw QuadratureError(r.value, r.error);
        p = 0;
    } else if (p > 1) {
        if (p > 1 + options.abs_tol)
            throw QuadratureError(r.value, r.error);
        p = 1;
    }
    return p;
}

}  // namespace vanetstat
