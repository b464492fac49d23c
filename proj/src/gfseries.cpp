// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/gfseries.hpp"

namespace vanetstat {

Integer num_compositions(long n, long k, long r, long s)
{
    if (n < 1 || k < 1 || r < 1 || s < 0 || s > k)
        throw std::invalid_argument("num_compositions needs n, k, r >= 1 and 0 <= s <= k");
    if (k > n || r * s > n)
        return 0;

    auto const order = static_cast<std::size_t>(n);
    // Parts that avoid the value r.
    Series<Integer> avoid_r = positive_integers_series<Integer>(order);
    if (static_cast<std::size_t>(r) <= order)
        avoid_r[static_cast<std::size_t>(r)] = 0;

    Series<Integer> gf = pow(avoid_r, static_cast<unsigned long>(k - s))
                             .shifted(static_cast<std::size_t>(r * s));
    return binomial(k, s) * gf.coeff(order);
}

}  // namespace vanetstat
