// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>

#include "vanetstat/chain.hpp"
#include "vanetstat/format.hpp"
#include "vanetstat/rational.hpp"
#include "vanetstat/rng.hpp"

namespace vanetstat {

std::string_view to_string(LinkDraw draw)
{
    return draw == LinkDraw::outage_prob ? "outage_prob" : "snr_sample";
}

LinkDraw parse_link_draw(std::string_view text)
{
    if (text == "outage_prob")
        return LinkDraw::outage_prob;
    if (text == "snr_sample")
        return LinkDraw::snr_sample;
    throw std::invalid_argument("link draw must be outage_prob or snr_sample, got '"
                                + std::string(text) + "'");
}

void Scenario::validate() const
{
    if (n < 2)
        throw std::invalid_argument("scenario needs n >= 2");
    if (trials < 1)
        throw std::invalid_argument("scenario needs at least one trial");
    if (auto const* fixed = std::get_if<FixedLink>(&link)) {
        if (!(fixed->p >= 0 && fixed->p <= 1))
            throw std::invalid_argument("fixed link probability must be in [0, 1]");
    } else {
        std::get<PhysicalLink>(link).channel.validate();
    }
}

EmpiricalStatistic const& EmpiricalResult::get(Statistic stat) const
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

// Histograms indexed by the raw statistic value 0..n.
struct Histograms
{
    std::array<std::vector<std::uint64_t>, 4> bins;

    explicit Histograms(int n)
    {
        for (auto& b : bins)
            b.assign(static_cast<std::size_t>(n) + 1, 0);
    }

    void merge(Histograms const& other)
    {
        for (std::size_t s = 0; s < bins.size(); ++s)
            for (std::size_t i = 0; i < bins[s].size(); ++i)
                bins[s][i] += other.bins[s][i];
    }
};

class LinkSampler
{
  public:
    explicit LinkSampler(LinkModel const& model) : model_(model)
    {
        if (auto const* phys = std::get_if<PhysicalLink>(&model_))
            derived_ = derive_channel(phys->channel);
    }

    bool operator()(CounterStream& stream) const
    {
        if (auto const* fixed = std::get_if<FixedLink>(&model_))
            return stream.uniform_open() < fixed->p;

        auto const& phys = std::get<PhysicalLink>(model_);
        double const d = phys.spacing.sample(stream);
        if (phys.draw == LinkDraw::outage_prob)
            return stream.uniform_open() < link_connect_prob(derived_, phys.channel, d);
        double const snr = -mean_snr(derived_, phys.channel, d) * std::log(stream.uniform_open());
        return snr > phys.channel.snr_threshold;
    }

  private:
    LinkModel const& model_;
    DerivedChannel derived_;
};

Histograms run_block(Scenario const& sc, std::uint64_t first, std::uint64_t last)
{
    Histograms h(sc.n);
    LinkSampler const sample_link(sc.link);
    std::unique_ptr<bool[]> links(new bool[static_cast<std::size_t>(sc.n) - 1]);
    std::vector<int> sizes(static_cast<std::size_t>(sc.n) + 1);
    std::span<bool const> view(links.get(), static_cast<std::size_t>(sc.n) - 1);

    for (std::uint64_t t = first; t < last; ++t) {
        CounterStream stream(sc.seed, t);
        for (int i = 0; i < sc.n - 1; ++i)
            links[i] = sample_link(stream);

        ChainStats const s = chain_stats(view);
        ++h.bins[0][s.clusters];
        ++h.bins[2][s.biggest];
        ++h.bins[3][s.idle];

        // Uniformly chosen cluster: walk the size counts to the chosen index.
        cluster_size_counts(view, sizes);
        auto pick = static_cast<int>(stream.uniform_open() * s.clusters);
        pick = std::min(pick, s.clusters - 1);
        for (int r = 1; r <= sc.n; ++r) {
            if (pick < sizes[r]) {
                ++h.bins[1][r];
                break;
            }
            pick -= sizes[r];
        }
    }
    return h;
}

EmpiricalStatistic summarize(std::vector<std::uint64_t> const& raw, int lo,
                             std::uint64_t trials, std::string const& meta)
{
    EmpiricalStatistic out;
    out.counts.assign(raw.begin() + lo, raw.end());
    out.pmf.support_min = lo;
    out.pmf.source = PmfSource::empirical;
    out.pmf.meta = meta;
    // Integer moment sums keep the result independent of shard layout.
    Integer s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < out.counts.size(); ++i) {
        Integer const v = static_cast<unsigned long>(static_cast<std::size_t>(lo) + i);
        Integer const c = static_cast<unsigned long>(out.counts[i]);
        s1 += v * c;
        s2 += v * v * c;
        out.pmf.probs.push_back(static_cast<double>(out.counts[i]) / static_cast<double>(trials));
    }
    Integer const t = static_cast<unsigned long>(trials);
    Rational mean(s1, t);
    mean.canonicalize();
    out.mean = to_double(mean);
    if (trials > 1) {
        Rational var(Integer(t * s2 - s1 * s1), Integer(t * (t - 1)));
        var.canonicalize();
        out.variance = to_double(var);
    }
    return out;
}

}  // namespace

EmpiricalResult run(Scenario const& scenario, RunOptions const& options)
{
    scenario.validate();

    unsigned threads = options.threads != 0 ? options.threads
                                            : std::max(1u, std::thread::hardware_concurrency());
    // Tiny runs are not worth a thread each.
    threads = static_cast<unsigned>(
        std::clamp<std::uint64_t>(scenario.trials / 4096, 1, threads));

    std::vector<std::future<Histograms>> parts;
    for (unsigned b = 0; b < threads; ++b) {
        std::uint64_t const first = scenario.trials * b / threads;
        std::uint64_t const last = scenario.trials * (b + 1) / threads;
        auto policy = threads == 1 ? std::launch::deferred : std::launch::async;
        parts.push_back(std::async(policy, run_block, std::cref(scenario), first, last));
    }
    Histograms total(scenario.n);
    for (auto& part : parts)
        total.merge(part.get());

    std::string const meta = "n=" + std::to_string(scenario.n)
                             + ";trials=" + std::to_string(scenario.trials)
                             + ";seed=" + std::to_string(scenario.seed);
    EmpiricalResult result;
    result.trials = scenario.trials;
    result.seed = scenario.seed;
    result.clust_num = summarize(total.bins[0], 1, scenario.trials, meta);
    result.clust_size = summarize(total.bins[1], 1, scenario.trials, meta);
    result.biggest_clust = summarize(total.bins[2], 1, scenario.trials, meta);
    result.idle_cars = summarize(total.bins[3], 0, scenario.trials, meta);
    return result;
}

}  // namespace vanetstat
