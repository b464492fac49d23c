// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <span>

namespace vanetstat {

//! Connectivity statistics of one realization of the n-1 links.
struct ChainStats
{
    int clusters = 0;
    int biggest = 0;
    int idle = 0;
};

//! links[i] is true when vehicles i and i+1 are connected.
ChainStats chain_stats(std::span<bool const> links);

//! counts[r] = number of clusters of size r, for r in 1..n; counts needs n+1 slots.
void cluster_size_counts(std::span<bool const> links, std::span<int> counts);

}  // namespace vanetstat
