// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "support/brute_force.hpp"
#include "vanetstat/analytic.hpp"

using namespace vanetstat;

namespace {

Rational Q(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

void check_equal(ExactPmf const& pmf, std::map<int, Rational> const& ref, int n)
{
    for (int r = pmf.support_min; r <= n; ++r) {
        CAPTURE(r);
        auto const it = ref.find(r);
        CHECK(pmf.at(r) == (it == ref.end() ? Rational(0) : it->second));
    }
    CHECK(pmf.support_max() == n);
}

}  // namespace

TEST_CASE("frozen exact PMFs for n = 6, p = 1/3")
{
    Rational const p = Q(1, 3);
    auto const cn = clust_num_pmf(6, p);
    CHECK(cn.probs == std::vector<Rational>{Q(1, 243), Q(10, 243), Q(40, 243), Q(80, 243),
                                            Q(80, 243), Q(32, 243)});
    auto const cs = clust_size_pmf(6, p);
    CHECK(cs.probs == std::vector<Rational>{Q(2, 3), Q(2, 9), Q(2, 27), Q(2, 81), Q(2, 243),
                                            Q(1, 243)});
    auto const bc = biggest_clust_pmf(6, p);
    CHECK(bc.probs == std::vector<Rational>{Q(32, 243), Q(44, 81), Q(58, 243), Q(16, 243),
                                            Q(4, 243), Q(1, 243)});
    auto const ic = idle_cars_pmf(6, p);
    CHECK(ic.support_min == 0);
    CHECK(ic.probs == std::vector<Rational>{Q(11, 243), Q(28, 243), Q(20, 81), Q(32, 243),
                                            Q(80, 243), 0, Q(32, 243)});

    CHECK(clust_num_moments(6, p).mean == Q(13, 3));
    CHECK(clust_num_moments(6, p).variance == Q(10, 9));
    CHECK(clust_size_moments(6, p).mean == Q(364, 243));
    CHECK(clust_size_moments(6, p).variance == Q(42950, 59049));
    CHECK(biggest_clust_moments_exact(6, p).mean == Q(560, 243));
    CHECK(biggest_clust_moments_exact(6, p).variance == Q(44582, 59049));
    CHECK(idle_cars_moments(6, p).mean == Q(28, 9));
    CHECK(idle_cars_moments(6, p).variance == Q(212, 81));
}

TEST_CASE("analytic PMFs equal naive enumeration on random rational p")
{
    testing::PropertyRng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int const n = rng.uniform_int(2, 10);
        Rational const p = rng.rational_probability();
        CAPTURE(n);
        CAPTURE(p.get_str());
        auto const ref = testing::naive_pmfs(n, p);
        check_equal(clust_num_pmf(n, p), ref.clust_num, n);
        check_equal(clust_size_pmf(n, p), ref.clust_size, n);
        check_equal(clust_size_pmf_via_compositions(n, p), ref.clust_size, n);
        check_equal(biggest_clust_pmf(n, p), ref.biggest_clust, n);
        check_equal(idle_cars_pmf(n, p), ref.idle_cars, n);
    }
}

TEST_CASE("closed-form moments equal PMF moments exactly")
{
    testing::PropertyRng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        int const n = rng.uniform_int(2, 40);
        Rational const p = rng.rational_probability();
        CAPTURE(n);
        CAPTURE(p.get_str());
        auto const a = clust_num_moments(n, p);
        auto const b = moments_of(clust_num_pmf(n, p));
        CHECK(a.mean == b.mean);
        CHECK(a.variance == b.variance);
        auto const c = clust_size_moments(n, p);
        auto const d = moments_of(clust_size_pmf(n, p));
        CHECK(c.mean == d.mean);
        CHECK(c.variance == d.variance);
        auto const e = idle_cars_moments(n, p);
        auto const f = moments_of(idle_cars_pmf(n, p));
        CHECK(e.mean == f.mean);
        CHECK(e.variance == f.variance);
    }
}

TEST_CASE("idle variance for two vehicles is 4p(1-p)")
{
    for (Rational p : {Q(1, 10), Q(1, 2), Q(3, 7)})
        CHECK(idle_cars_moments(2, p).variance == 4 * p * (1 - p));
}

TEST_CASE("connected clusters")
{
    Rational const p = Q(2, 5);
    for (int n = 2; n <= 10; ++n) {
        Rational direct = 0;
        for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
            auto const chain = testing::naive_chain(n, mask);
            int const up = std::popcount(mask);
            Rational w = 1;
            for (int i = 0; i < up; ++i)
                w *= p;
            for (int i = 0; i < n - 1 - up; ++i)
                w *= 1 - p;
            int big = 0;
            for (int s : chain.sizes)
                big += s >= 2;
            direct += w * big;
        }
        CHECK(connected_clust_num_mean(n, p) == direct);
    }
}

TEST_CASE("longest-run identities")
{
    for (int n = 2; n <= 40; ++n) {
        for (Rational p : {Q(1, 10), Q(1, 2), Q(9, 10), Q(2, 3)}) {
            CHECK(longest_run_cdf_g(n, p, n - 1) == 1 - ipow(p, static_cast<unsigned long>(n - 1)));
            CHECK(longest_run_cdf_g(n, p, 1) == ipow(1 - p, static_cast<unsigned long>(n - 1)));
            Rational last = 0;
            for (int k = 1; k <= n - 1; ++k) {
                Rational const g = longest_run_cdf_g(n, p, k);
                CHECK(g >= last);
                last = g;
                CHECK(longest_run_cdf_g_recursive(n, to_double(p), k)
                      == doctest::Approx(to_double(g)).epsilon(1e-13));
            }
            CHECK(biggest_clust_pmf(n, p).total() == 1);
        }
    }
    CHECK(longest_run_cdf_g(4, Q(1, 2), 1) == Q(1, 8));
    CHECK_THROWS_AS(longest_run_cdf_g(5, Q(1, 2), 0), std::out_of_range);
    CHECK_THROWS_AS(longest_run_cdf_g(5, Q(1, 2), 5), std::out_of_range);
}

TEST_CASE("floating-point paths track the exact ones")
{
    for (int n : {2, 3, 7, 30, 64}) {
        for (Rational p : {Q(1, 100), Q(3, 10), Q(1, 2), Q(9, 10), Q(99, 100)}) {
            double const pd = to_double(p);
            // Differences of g near 1 carry absolute, not relative, accuracy.
            auto compare = [](Pmf const& d, ExactPmf const& e, double abs_floor) {
                REQUIRE(d.probs.size() == e.probs.size());
                for (std::size_t i = 0; i < d.probs.size(); ++i) {
                    double const want = to_double(e.probs[i]);
                    CHECK(std::abs(d.probs[i] - want) <= 1e-12 * want + abs_floor);
                }
            };
            CAPTURE(n);
            CAPTURE(pd);
            compare(clust_num_pmf(n, pd), clust_num_pmf(n, p), 0);
            compare(clust_size_pmf(n, pd), clust_size_pmf(n, p), 0);
            compare(idle_cars_pmf(n, pd), idle_cars_pmf(n, p), 0);
            compare(biggest_clust_pmf(n, pd), biggest_clust_pmf(n, p), 1e-13);
            CHECK(idle_cars_moments(n, pd).variance
                  == doctest::Approx(to_double(idle_cars_moments(n, p).variance)).epsilon(1e-12));
        }
    }
}

TEST_CASE("large chains stay normalised in floating point")
{
    for (int n : {1000, 20000}) {
        for (double p : {0.3, 0.9, 0.999}) {
            CAPTURE(n);
            CAPTURE(p);
            for (Pmf const& pmf : {clust_num_pmf(n, p), clust_size_pmf(n, p),
                                   biggest_clust_pmf(n, p), idle_cars_pmf(n, p)}) {
                CHECK(pmf.total() == doctest::Approx(1.0).epsilon(1e-9));
                for (double v : pmf.probs)
                    CHECK(v >= 0);
            }
            auto const m = idle_cars_moments(n, p);
            auto const pm = moments_of(idle_cars_pmf(n, p));
            CHECK(pm.mean == doctest::Approx(m.mean).epsilon(1e-9));
        }
    }
}

TEST_CASE("degenerate link probabilities")
{
    int const n = 7;
    CHECK(clust_num_pmf(n, Rational(0)).at(n) == 1);
    CHECK(clust_num_pmf(n, Rational(1)).at(1) == 1);
    CHECK(biggest_clust_pmf(n, Rational(0)).at(1) == 1);
    CHECK(biggest_clust_pmf(n, Rational(1)).at(n) == 1);
    CHECK(biggest_clust_pmf(n, 0.0).at(1) == 1);
    CHECK(biggest_clust_pmf(n, 1.0).at(n) == 1);
    CHECK(idle_cars_pmf(n, Rational(0)).at(n) == 1);
    CHECK(idle_cars_pmf(n, Rational(1)).at(0) == 1);
    CHECK(idle_cars_pmf(n, 0.0).at(n) == 1);
    CHECK(idle_cars_pmf(n, 1.0).at(0) == 1);
    CHECK(clust_size_moments(n, Rational(1)).mean == n);
    CHECK(clust_size_moments(n, Rational(1)).variance == 0);
    CHECK(clust_size_pmf(n, Rational(0)).at(1) == 1);
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(clust_num_pmf(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(clust_num_pmf(5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(idle_cars_pmf(5, Rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(biggest_clust_pmf(kMaxVehicles + 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(biggest_clust_moments_asymptotic(2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(biggest_clust_moments_asymptotic(100, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(clust_size_pmf(5, std::nan("")), std::invalid_argument);
}

TEST_CASE("asymptotic biggest-cluster moments")
{
    // log_{1/p}((n-1)q) + gamma/ln(1/p) + 1/2 and pi^2/ln^2(1/p) + 1/12, evaluated by hand.
    auto const m = biggest_clust_moments_asymptotic(1000, 0.5);
    double const l = std::log(2.0);
    CHECK(m.mean == doctest::Approx(std::log(999 * 0.5) / l + 0.5772156649015329 / l + 0.5));
    CHECK(m.variance == doctest::Approx(9.869604401089358 / (l * l) + 1.0 / 12));
    for (double p : {0.3, 0.5, 0.7}) {
        auto const exact = biggest_clust_moments_exact(1000, p);
        CHECK(std::abs(exact.mean - biggest_clust_moments_asymptotic(1000, p).mean) < 0.05);
    }
}

TEST_CASE("small worked examples")
{
    Rational const half = Q(1, 2);
    CHECK(clust_num_pmf(4, half).probs == std::vector<Rational>{Q(1, 8), Q(3, 8), Q(3, 8), Q(1, 8)});
    CHECK(clust_num_moments(4, half).mean == Q(5, 2));
    CHECK(idle_cars_moments(3, half).mean == Q(5, 4));
    CHECK(idle_cars_moments(3, half).variance == Q(19, 16));
    CHECK(idle_cars_moments(5, Rational(1)).mean == 0);
    CHECK(idle_cars_moments(5, Rational(1)).variance == 0);
    CHECK(clust_num_moments(5, Rational(1)).mean == 1);
    CHECK(clust_num_moments(5, Rational(1)).variance == 0);
    CHECK(biggest_clust_moments_exact(5, Rational(0)).mean == 1);
    CHECK(biggest_clust_moments_exact(5, Rational(0)).variance == 0);
    CHECK(biggest_clust_moments_asymptotic(1000, 0.5).variance == doctest::Approx(20.62).epsilon(1e-3));
    // Mean cluster size (1 - p^n)/(1 - p).
    CHECK(clust_size_moments(6, Q(1, 3)).mean == (1 - ipow(Q(1, 3), 6)) / (1 - Q(1, 3)));
}
