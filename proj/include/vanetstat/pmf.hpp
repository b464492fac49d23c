// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vanetstat/rational.hpp"

namespace vanetstat {

/// The four connectivity statistics of a vehicle chain.
enum class Statistic { clust_num, clust_size, biggest_clust, idle_cars };

inline constexpr Statistic all_statistics[] = {
    Statistic::clust_num, Statistic::clust_size, Statistic::biggest_clust,
    Statistic::idle_cars};

std::string_view to_string(Statistic stat);

/// Smallest value the statistic can take (the support is always {min..n}).
int support_min(Statistic stat);

enum class PmfSource { analytic, oracle, empirical };

std::string_view to_string(PmfSource source);

/// Probability mass function over the integer support {support_min..support_max}.
/// Impossible values inside the support are stored as explicit zeros.
template <class T>
struct BasicPmf
{
    int support_min = 0;
    std::vector<T> probs;
    PmfSource source = PmfSource::analytic;
    std::string meta;

    int support_max() const { return support_min + static_cast<int>(probs.size()) - 1; }

    /// Probability of r; zero outside the support.
    T at(int r) const
    {
        if (r < support_min || r > support_max())
            return T(0);
        return probs[static_cast<std::size_t>(r - support_min)];
    }

    T total() const
    {
        T sum = 0;
        for (T const& v : probs)
            sum += v;
        return sum;
    }
};

using Pmf = BasicPmf<double>;
using ExactPmf = BasicPmf<Rational>;

template <class T>
struct BasicMoments
{
    T mean = 0;
    T variance = 0;
};

using Moments = BasicMoments<double>;
using ExactMoments = BasicMoments<Rational>;

Pmf to_double(ExactPmf const& pmf);
Moments to_double(ExactMoments const& m);

/// Mean and variance by direct summation over the support.
ExactMoments moments_of(ExactPmf const& pmf);
/// Same, with compensated summation; a variance within -1e-12 of zero is clamped.
Moments moments_of(Pmf const& pmf);

/// Half the L1 distance; supports may differ.
double total_variation(Pmf const& a, Pmf const& b);

}  // namespace vanetstat
