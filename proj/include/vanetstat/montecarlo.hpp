// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "vanetstat/channel.hpp"
#include "vanetstat/pmf.hpp"
#include "vanetstat/spacing.hpp"

namespace vanetstat {

//! Every link is up independently with probability p.
struct FixedLink
{
    double p = 0;
};

//! How a physical link outcome is drawn.
enum class LinkDraw {
    outage_prob,  //!< uniform < exp(-Psi d^alpha W / (P_tx K))
    snr_sample,   //!< SNR ~ Exponential(mean SNR at d), compared to Psi
};

std::string_view to_string(LinkDraw draw);
LinkDraw parse_link_draw(std::string_view text);

//! Gaps drawn from the spacing model, links from Rayleigh fading.
struct PhysicalLink
{
    ChannelParams channel;
    SpacingModel spacing;
    LinkDraw draw = LinkDraw::outage_prob;
};

using LinkModel = std::variant<FixedLink, PhysicalLink>;

struct Scenario
{
    int n = 2;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    LinkModel link = FixedLink{};

    //! Throws std::invalid_argument before any trial runs.
    void validate() const;
};

struct EmpiricalStatistic
{
    //! counts[i] is the number of trials with value support_min + i.
    std::vector<std::uint64_t> counts;
    Pmf pmf;
    double mean = 0;
    //! Unbiased (trials - 1 denominator); zero for a single trial.
    double variance = 0;
};

struct EmpiricalResult
{
    EmpiricalStatistic clust_num;
    EmpiricalStatistic clust_size;
    EmpiricalStatistic biggest_clust;
    EmpiricalStatistic idle_cars;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    EmpiricalStatistic const& get(Statistic stat) const;
};

struct RunOptions
{
    //! Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/*!
 * Simulate `trials` independent chains.
 *
 * Trial t draws from CounterStream(seed, t), so the result depends only on
 * the scenario and not on the thread count. Per trial: n-1 gaps/links, then
 * cluster count, the size of one uniformly chosen cluster, the biggest
 * cluster and the idle count.
 */
EmpiricalResult run(Scenario const& scenario, RunOptions const& options = {});

}  // namespace vanetstat
