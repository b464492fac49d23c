// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <map>
#include <string>

#include "vanetstat/quadrature.hpp"
#include "vanetstat/spacing.hpp"

namespace vanetstat {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s
// Rounded value; the published link probabilities were computed with it.
inline constexpr double kBoltzmann = 1.38e-23;  // J/K

double dbm_to_watts(double dbm);
double db_to_linear(double db);

//---------------------------------------------------------------------------//
/*!
 * Physical-layer constants of a vehicle-to-vehicle link, linear SI units.
 */
struct ChannelParams
{
    double tx_power = 0;       //!< W
    double gain_tx = 1;
    double gain_rx = 1;
    double carrier_freq = 0;   //!< Hz
    double path_loss_exp = 0;  //!< alpha >= 1
    double snr_threshold = 0;  //!< linear; zero means every link succeeds
    double temperature = 0;    //!< K
    double bandwidth = 0;      //!< Hz

    //! 5.9 GHz, unit gains, alpha 2.5, 300 K, 10 MHz, 10 dB threshold, 4 dBm.
    static ChannelParams highway_preset();

    //! Start from a named preset ("paper-sec4"/"default"/"highway") and apply
    //! `channel.*` keys; power and threshold keys are in dBm and dB.
    static ChannelParams from_config(std::map<std::string, std::string> const& kv);
    std::map<std::string, std::string> to_config() const;

    //! Throws std::invalid_argument on a non-positive field or alpha < 1.
    void validate() const;
};

struct DerivedChannel
{
    double k_const = 0;      //!< path-loss constant K
    double noise_power = 0;  //!< W
};

DerivedChannel derive_channel(ChannelParams const& params);

//! Average SNR P_tx K / (d^alpha W) at distance d > 0.
double mean_snr(DerivedChannel const& derived, ChannelParams const& params,
                double distance);

//! P(SNR > threshold) under Rayleigh fading at distance d > 0.
double link_connect_prob(DerivedChannel const& derived,
                         ChannelParams const& params, double distance);

//! Link probability averaged over the spacing distribution.
double connection_prob(DerivedChannel const& derived, ChannelParams const& params,
                       SpacingModel const& spacing,
                       QuadratureOptions const& options = {});

}  // namespace vanetstat
