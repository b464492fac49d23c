// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <cstdint>

#include "vanetstat/pmf.hpp"

namespace vanetstat {

inline constexpr int kMaxOracleVehicles = 16;

struct OraclePmfs
{
    ExactPmf clust_num;
    ExactPmf clust_size;
    ExactPmf biggest_clust;
    ExactPmf idle_cars;

    ExactPmf const& get(Statistic stat) const;
};

/*!
 * Exact PMFs by enumerating all 2^{n-1} link patterns, weighting each by
 * p^{#up} (1-p)^{#down}.
 *
 * The cluster-size PMF is that of a cluster drawn uniformly from the
 * pattern's clusters: each pattern contributes weight * count(r) / clusters.
 * Patterns are split into `shards` contiguous blocks that are enumerated
 * concurrently and merged; the result does not depend on `shards`.
 * Requires 2 <= n <= 16 and 0 <= p <= 1 (std::invalid_argument).
 */
OraclePmfs enumerate_pmfs(int n, Rational const& p, unsigned shards = 1);

}  // namespace vanetstat
