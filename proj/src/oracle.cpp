// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/oracle.hpp"

#include "vanetstat/chain.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vanetstat {

ExactPmf const& OraclePmfs::get(Statistic stat) const
{
    switch (stat) {
    case Statistic::clust_num: return clust_num;
    case Statistic::clust_size: return clust_size;
    case Statistic::biggest_clust: return biggest_clust;
    case Statistic::idle_cars: return idle_cars;
    }
    throw std::logic_error("unknown statistic");
}

namespace {

struct Accumulator
{
    std::vector<Rational> clust_num, clust_size, biggest, idle;

    explicit Accumulator(int n)
        : clust_num(n + 1), clust_size(n + 1), biggest(n + 1), idle(n + 1)
    {
    }

    void merge(Accumulator const& other)
    {
        for (std::size_t i = 0; i < clust_num.size(); ++i) {
            clust_num[i] += other.clust_num[i];
            clust_size[i] += other.clust_size[i];
            biggest[i] += other.biggest[i];
            idle[i] += other.idle[i];
        }
    }
};

Accumulator enumerate_block(int n, std::vector<Rational> const& up_pow,
                            std::vector<Rational> const& down_pow,
                            std::uint64_t first, std::uint64_t last)
{
    int const links_count = n - 1;
    Accumulator acc(n);
    std::array<bool, kMaxOracleVehicles> bits{};
    std::vector<int> counts(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t pattern = first; pattern < last; ++pattern) {
        int ups = 0;
        for (int i = 0; i < links_count; ++i) {
            bits[i] = ((pattern >> i) & 1U) != 0;
            ups += bits[i] ? 1 : 0;
        }
        Rational const weight = up_pow[ups] * down_pow[links_count - ups];
        if (weight == 0)
            continue;

        std::span<bool const> links(bits.data(), static_cast<std::size_t>(links_count));
        ChainStats const s = chain_stats(links);
        acc.clust_num[s.clusters] += weight;
        acc.biggest[s.biggest] += weight;
        acc.idle[s.idle] += weight;

        cluster_size_counts(links, counts);
        for (int r = 1; r <= n; ++r) {
            if (counts[r] != 0)
                acc.clust_size[r] += weight * counts[r] / s.clusters;
        }
    }
    return acc;
}

ExactPmf to_pmf(std::vector<Rational> const& bins, int lo, int n, Rational const& p)
{
    ExactPmf pmf;
    pmf.support_min = lo;
    pmf.source = PmfSource::oracle;
    pmf.meta = "n=" + std::to_string(n) + ";p=" + p.get_str();
    pmf.probs.assign(bins.begin() + lo, bins.end());
    return pmf;
}

}  // namespace

OraclePmfs enumerate_pmfs(int n, Rational const& p, unsigned shards)
{
    if (n < 2 || n > kMaxOracleVehicles)
        throw std::invalid_argument("oracle enumeration supports 2 <= n <= "
                                    + std::to_string(kMaxOracleVehicles) + ", got "
                                    + std::to_string(n));
    if (!(p >= 0 && p <= 1))
        throw std::invalid_argument("link probability must be in [0, 1]");

    int const links_count = n - 1;
    std::vector<Rational> up_pow(static_cast<std::size_t>(n)), down_pow(static_cast<std::size_t>(n));
    up_pow[0] = down_pow[0] = 1;
    Rational const q = 1 - p;
    for (int i = 1; i < n; ++i) {
        up_pow[i] = up_pow[i - 1] * p;
        down_pow[i] = down_pow[i - 1] * q;
    }

    std::uint64_t const total = std::uint64_t{1} << links_count;
    std::uint64_t const blocks = std::clamp<std::uint64_t>(shards, 1, total);
    std::vector<std::future<Accumulator>> parts;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::uint64_t const first = total * b / blocks;
        std::uint64_t const last = total * (b + 1) / blocks;
        auto policy = blocks == 1 ? std::launch::deferred : std::launch::async;
        parts.push_back(std::async(policy, enumerate_block, n, std::cref(up_pow),
                                   std::cref(down_pow), first, last));
    }

    Accumulator acc(n);
    for (auto& part : parts)
        acc.merge(part.get());

    return {to_pmf(acc.clust_num, 1, n, p), to_pmf(acc.clust_size, 1, n, p),
            to_pmf(acc.biggest, 1, n, p), to_pmf(acc.idle, 0, n, p)};
}

}  // namespace vanetstat
