// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vanetstat/channel.hpp"
#include "vanetstat/montecarlo.hpp"
#include "vanetstat/rational.hpp"
#include "vanetstat/spacing.hpp"

namespace vanetstat {

using KeyValues = std::map<std::string, std::string>;

/*!
 * Parse flat `key = value` text. Blank lines and lines starting with '#' are
 * skipped; later keys override earlier ones.
 */
KeyValues parse_config_text(std::string_view text);
KeyValues load_config_file(std::filesystem::path const& path);

enum class OutputFormat { csv, json };

//! One fully resolved experiment.
struct RunConfig
{
    int n = 0;
    //! Exactly one of these describes the links.
    std::optional<Rational> fixed_p;
    std::optional<SpacingModel> spacing;
    ChannelParams channel = ChannelParams::highway_preset();

    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    LinkDraw link_draw = LinkDraw::outage_prob;

    OutputFormat format = OutputFormat::csv;
    std::optional<std::filesystem::path> output_path;
    bool compare = false;

    //! The settings above in canonical key/value form.
    KeyValues resolved() const;
    //! Monte Carlo scenario; physical links when a spacing model is set.
    Scenario scenario() const;
};

/*!
 * Build a RunConfig from keys: n, p, trials, seed, threads, link_draw,
 * format, out, compare, spacing (compact form) or spacing.*, channel.preset
 * and channel.*. Throws std::invalid_argument on unknown keys, bad values,
 * or when both p and a spacing model are given.
 */
RunConfig resolve_config(KeyValues const& kv);

}  // namespace vanetstat
