// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vanetstat {

std::string_view to_string(Statistic stat)
{
    switch (stat) {
    case Statistic::clust_num: return "clust_num";
    case Statistic::clust_size: return "clust_size";
    case Statistic::biggest_clust: return "biggest_clust";
    case Statistic::idle_cars: return "idle_cars";
    }
    return "?";
}

int support_min(Statistic stat)
{
    return stat == Statistic::idle_cars ? 0 : 1;
}

std::string_view to_string(PmfSource source)
{
    switch (source) {
    case PmfSource::analytic: return "analytic";
    case PmfSource::oracle: return "oracle";
    case PmfSource::empirical: return "empirical";
    }
    return "?";
}

Pmf to_double(ExactPmf const& pmf)
{
    Pmf out;
    out.support_min = pmf.support_min;
    out.source = pmf.source;
    out.meta = pmf.meta;
    out.probs.reserve(pmf.probs.size());
    for (Rational const& v : pmf.probs)
        out.probs.push_back(v.get_d());
    return out;
}

Moments to_double(ExactMoments const& m)
{
    return {m.mean.get_d(), m.variance.get_d()};
}

ExactMoments moments_of(ExactPmf const& pmf)
{
    Rational m1 = 0;
    Rational m2 = 0;
    for (int r = pmf.support_min; r <= pmf.support_max(); ++r) {
        Rational const& pr = pmf.at(r);
        m1 += pr * r;
        m2 += pr * r * r;
    }
    return {m1, Rational(m2 - m1 * m1)};
}

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum
{
  public:
    void add(double x)
    {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

}  // namespace

Moments moments_of(Pmf const& pmf)
{
    CompensatedSum m1;
    for (int r = pmf.support_min; r <= pmf.support_max(); ++r)
        m1.add(pmf.at(r) * r);
    double const mean = m1.value();
    // Central second moment avoids the E[X^2] - E[X]^2 cancellation.
    CompensatedSum m2;
    for (int r = pmf.support_min; r <= pmf.support_max(); ++r) {
        double const d = r - mean;
        m2.add(pmf.at(r) * d * d);
    }
    double variance = m2.value();
    if (variance < 0 && variance >= -1e-12)
        variance = 0;
    return {mean, variance};
}

double total_variation(Pmf const& a, Pmf const& b)
{
    int const lo = std::min(a.support_min, b.support_min);
    int const hi = std::max(a.support_max(), b.support_max());
    CompensatedSum l1;
    for (int r = lo; r <= hi; ++r)
        l1.add(std::abs(a.at(r) - b.at(r)));
    return 0.5 * l1.value();
}

}  // namespace vanetstat
