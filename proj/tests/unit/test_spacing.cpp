// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "support/brute_force.hpp"
#include "vanetstat/quadrature.hpp"
#include "vanetstat/spacing.hpp"

using namespace vanetstat;

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Reference CDFs written out independently of the library.
struct Case
{
    SpacingModel model;
    std::function<double(double)> cdf;
    double mean;
};

std::vector<Case> cases()
{
    double const m = 30, sd = 20;
    double const z0 = normal_cdf(-m / sd);
    double const phi0 = std::exp(-0.5 * (m / sd) * (m / sd)) / std::sqrt(2 * std::numbers::pi);
    return {
        {SpacingModel::exponential(0.01), [](double x) { return 1 - std::exp(-0.01 * x); }, 100},
        {SpacingModel::gamma(3, 20),
         [](double x) {
             double const y = x / 20;
             return 1 - std::exp(-y) * (1 + y + y * y / 2);
         },
         60},
        {SpacingModel::lognormal(4, 0.5),
         [](double x) { return normal_cdf((std::log(x) - 4) / 0.5); }, std::exp(4 + 0.125)},
        {SpacingModel::truncated_normal(m, sd),
         [=](double x) { return (normal_cdf((x - m) / sd) - z0) / (1 - z0); },
         m + sd * phi0 / (1 - z0)},
    };
}

}  // namespace

TEST_CASE("densities integrate to one and match their CDFs")
{
    for (auto const& c : cases()) {
        CAPTURE(c.model.to_string());
        auto const total =
            integrate_half_line([&](double x) { return c.model.pdf(x); }, c.model.mean(),
                                {1e-10, 4000});
        CHECK(total.value == doctest::Approx(1.0).epsilon(1e-6));
        for (double x : {1.0, 25.0, 60.0, 150.0}) {
            CHECK(c.model.cdf(x) == doctest::Approx(c.cdf(x)).epsilon(1e-9));
            CHECK(integrate([&](double t) { return c.model.pdf(t); }, 1e-12, x, {1e-11, 4000}).value
                  == doctest::Approx(c.cdf(x)).epsilon(1e-7));
        }
        CHECK(c.model.cdf(0) == 0);
        CHECK(c.model.cdf(-5) == 0);
        CHECK(c.model.mean() == doctest::Approx(c.mean).epsilon(1e-10));
        CHECK_THROWS_AS(c.model.pdf(0), std::domain_error);
    }
}

TEST_CASE("seeded samples pass a Kolmogorov-Smirnov test")
{
    std::uint64_t stream_id = 0;
    for (auto const& c : cases()) {
        CAPTURE(c.model.to_string());
        CounterStream stream(2026, stream_id++);
        std::vector<double> xs(20000);
        for (auto& x : xs) {
            x = c.model.sample(stream);
            REQUIRE(x > 0);
        }
        // Critical value at the 1% level.
        CHECK(testing::ks_statistic(xs, c.cdf) < 1.63 / std::sqrt(20000.0));
    }
}

TEST_CASE("sample means over one million draws within 0.5%")
{
    for (auto const& c : cases()) {
        CAPTURE(c.model.to_string());
        CounterStream stream(77, 3);
        double sum = 0;
        for (int i = 0; i < 1000000; ++i)
            sum += c.model.sample(stream);
        CHECK(sum / 1e6 == doctest::Approx(c.mean).epsilon(0.005));
    }
}

TEST_CASE("point mass")
{
    auto const pm = SpacingModel::point_mass(50);
    CHECK(pm.is_point_mass());
    CHECK(pm.mean() == 50);
    CHECK(pm.cdf(49.9) == 0);
    CHECK(pm.cdf(50) == 1);
    CounterStream s(1, 1);
    CHECK(pm.sample(s) == 50);
    CHECK_THROWS_AS(pm.pdf(50), std::domain_error);
}

TEST_CASE("parse and config round trips")
{
    for (char const* text : {"exp:0.01", "gamma:2,50", "lognormal:4,0.5", "normal:30,20", "point:75"}) {
        auto const m = SpacingModel::parse(text);
        CHECK(m.to_string() == text);
        CHECK(SpacingModel::from_config(m.to_config()).to_string() == text);
    }
    CHECK(SpacingModel::parse("exponential:0.05").to_string() == "exp:0.05");
}

TEST_CASE("invalid spacing parameters")
{
    CHECK_THROWS_AS(SpacingModel::exponential(0), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::exponential(-1), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::gamma(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::gamma(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::lognormal(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::truncated_normal(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::truncated_normal(-100, 10), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::point_mass(0), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::exponential(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::parse("exp"), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::parse("gamma:1"), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::parse("weibull:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::parse("exp:abc"), std::invalid_argument);
    CHECK_THROWS_AS(SpacingModel::from_config({{"spacing.family", "gamma"}, {"spacing.shape", "2"}}),
                    std::invalid_argument);
}
