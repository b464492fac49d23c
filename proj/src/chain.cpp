// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/chain.hpp"

#include <algorithm>

namespace vanetstat {

ChainStats chain_stats(std::span<bool const> links)
{
    int const n = static_cast<int>(links.size()) + 1;
    ChainStats s;
    s.clusters = 1;
    int run = 1;
    s.biggest = 1;
    for (int i = 0; i < n; ++i) {
        bool const left = i > 0 && links[i - 1];
        bool const right = i < n - 1 && links[i];
        if (!left && !right)
            ++s.idle;
    }
    for (bool up : links) {
        if (up) {
            ++run;
        } else {
            ++s.clusters;
            run = 1;
        }
        s.biggest = std::max(s.biggest, run);
    }
    return s;
}

void cluster_size_counts(std::span<bool const> links, std::span<int> counts)
{
    std::fill(counts.begin(), counts.end(), 0);
    int run = 1;
    for (bool up : links) {
        if (up) {
            ++run;
        } else {
            ++counts[run];
            run = 1;
        }
    }
    ++counts[run];
}

}  // namespace vanetstat
