// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/spacing.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "vanetstat/format.hpp"

namespace vanetstat {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool positive_finite(double x)
{
    return x > 0 && std::isfinite(x);
}

double std_normal_cdf(double z)
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double std_normal_pdf(double z)
{
    return std::exp(-0.5 * z * z) / std::sqrt(2 * std::numbers::pi);
}

// Mass of the untruncated normal on (0, inf).
double positive_mass(spacing::TruncatedNormal const& f)
{
    return std_normal_cdf(f.mean / f.stddev);
}

double parse_number(std::string const& text, std::string_view what)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw std::invalid_argument("bad number for " + std::string(what) + ": '" + text + "'");
    return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view what)
{
    std::vector<double> out;
    std::string item;
    std::istringstream is{std::string(text)};
    while (std::getline(is, item, ','))
        out.push_back(parse_number(item, what));
    return out;
}

std::string const& require(std::map<std::string, std::string> const& kv,
                           std::string const& key)
{
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("missing config key '" + key + "'");
    return it->second;
}

}  // namespace

SpacingModel::SpacingModel(Family family) : family_(family)
{
    std::visit(
        overloaded{
            [](spacing::Exponential const& f) {
                if (!positive_finite(f.rate))
                    throw std::invalid_argument("exponential spacing needs rate > 0");
            },
            [](spacing::Gamma const& f) {
                if (!positive_finite(f.shape) || !positive_finite(f.scale))
                    throw std::invalid_argument("gamma spacing needs shape > 0 and scale > 0");
            },
            [](spacing::LogNormal const& f) {
                if (!std::isfinite(f.mu) || !positive_finite(f.sigma))
                    throw std::invalid_argument("lognormal spacing needs finite mu and sigma > 0");
            },
            [](spacing::TruncatedNormal const& f) {
                if (!std::isfinite(f.mean) || !positive_finite(f.stddev))
                    throw std::invalid_argument("normal spacing needs finite mean and sd > 0");
                // Rejection sampling from the parent normal must stay practical.
                if (positive_mass(f) < 1e-3)
                    throw std::invalid_argument(
                        "normal spacing puts almost no mass on positive distances");
            },
            [](spacing::PointMass const& f) {
                if (!positive_finite(f.d0))
                    throw std::invalid_argument("point-mass spacing needs d0 > 0");
            },
        },
        family_);
}

SpacingModel SpacingModel::parse(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("spacing must look like family:params, got '"
                                    + std::string(text) + "'");
    std::string_view name = text.substr(0, colon);
    std::vector<double> args = parse_list(text.substr(colon + 1), "spacing");

    auto expect = [&](std::size_t count) {
        if (args.size() != count)
            throw std::invalid_argument("spacing family '" + std::string(name) + "' takes "
                                        + std::to_string(count) + " parameter(s)");
    };
    if (name == "exp" || name == "exponential") {
        expect(1);
        return exponential(args[0]);
    }
    if (name == "gamma") {
        expect(2);
        return gamma(args[0], args[1]);
    }
    if (name == "lognormal") {
        expect(2);
        return lognormal(args[0], args[1]);
    }
    if (name == "normal" || name == "truncated_normal") {
        expect(2);
        return truncated_normal(args[0], args[1]);
    }
    if (name == "point" || name == "point_mass") {
        expect(1);
        return point_mass(args[0]);
    }
    throw std::invalid_argument("unknown spacing family '" + std::string(name) + "'");
}

SpacingModel SpacingModel::from_config(std::map<std::string, std::string> const& kv)
{
    std::string const& family = require(kv, "spacing.family");
    auto num = [&](std::string const& key) { return parse_number(require(kv, key), key); };
    if (family == "exponential" || family == "exp")
        return exponential(num("spacing.rho"));
    if (family == "gamma")
        return gamma(num("spacing.shape"), num("spacing.scale"));
    if (family == "lognormal")
        return lognormal(num("spacing.mu"), num("spacing.sigma"));
    if (family == "truncated_normal" || family == "normal")
        return truncated_normal(num("spacing.mean"), num("spacing.sd"));
    if (family == "point_mass" || family == "point")
        return point_mass(num("spacing.d0"));
    throw std::invalid_argument("unknown spacing.family '" + family + "'");
}

double SpacingModel::pdf(double x) const
{
    if (!(x > 0))
        throw std::domain_error("spacing pdf is defined for x > 0 only");
    return std::visit(
        overloaded{
            [x](spacing::Exponential const& f) { return f.rate * std::exp(-f.rate * x); },
            [x](spacing::Gamma const& f) {
                return std::exp((f.shape - 1) * std::log(x) - x / f.scale
                                - std::lgamma(f.shape) - f.shape * std::log(f.scale));
            },
            [x](spacing::LogNormal const& f) {
                double const z = (std::log(x) - f.mu) / f.sigma;
                return std_normal_pdf(z) / (x * f.sigma);
            },
            [x](spacing::TruncatedNormal const& f) {
                double const z = (x - f.mean) / f.stddev;
                return std_normal_pdf(z) / (f.stddev * positive_mass(f));
            },
            [](spacing::PointMass const&) -> double {
                throw std::domain_error("point-mass spacing has no density");
            },
        },
        family_);
}

double SpacingModel::cdf(double x) const
{
    if (!(x > 0))
        return 0.0;
    return std::visit(
        overloaded{
            [x](spacing::Exponential const& f) { return -std::expm1(-f.rate * x); },
            [x](spacing::Gamma const& f) { return boost::math::gamma_p(f.shape, x / f.scale); },
            [x](spacing::LogNormal const& f) {
                return std_normal_cdf((std::log(x) - f.mu) / f.sigma);
            },
            [x](spacing::TruncatedNormal const& f) {
                double const lower = std_normal_cdf(-f.mean / f.stddev);
                double const upper = std_normal_cdf((x - f.mean) / f.stddev);
                return (upper - lower) / positive_mass(f);
            },
            [x](spacing::PointMass const& f) { return x >= f.d0 ? 1.0 : 0.0; },
        },
        family_);
}

double SpacingModel::mean() const
{
    return std::visit(
        overloaded{
            [](spacing::Exponential const& f) { return 1.0 / f.rate; },
            [](spacing::Gamma const& f) { return f.shape * f.scale; },
            [](spacing::LogNormal const& f) { return std::exp(f.mu + 0.5 * f.sigma * f.sigma); },
            [](spacing::TruncatedNormal const& f) {
                double const alpha = -f.mean / f.stddev;
                return f.mean + f.stddev * std_normal_pdf(alpha) / positive_mass(f);
            },
            [](spacing::PointMass const& f) { return f.d0; },
        },
        family_);
}

double SpacingModel::sample(CounterStream& stream) const
{
    return std::visit(
        overloaded{
            [&](spacing::Exponential const& f) { return -std::log(stream.uniform_open()) / f.rate; },
            [&](spacing::Gamma const& f) {
                std::gamma_distribution<double> dist(f.shape, f.scale);
                double d = 0;
                while (!(d > 0))
                    d = dist(stream);
                return d;
            },
            [&](spacing::LogNormal const& f) {
                std::lognormal_distribution<double> dist(f.mu, f.sigma);
                double d = 0;
                while (!(d > 0))
                    d = dist(stream);
                return d;
            },
            [&](spacing::TruncatedNormal const& f) {
                std::normal_distribution<double> dist(f.mean, f.stddev);
                double d = 0;
                while (!(d > 0))
                    d = dist(stream);
                return d;
            },
            [](spacing::PointMass const& f) { return f.d0; },
        },
        family_);
}

std::string SpacingModel::to_string() const
{
    return std::visit(
        overloaded{
            [](spacing::Exponential const& f) { return "exp:" + format_double(f.rate); },
            [](spacing::Gamma const& f) {
                return "gamma:" + format_double(f.shape) + "," + format_double(f.scale);
            },
            [](spacing::LogNormal const& f) {
                return "lognormal:" + format_double(f.mu) + "," + format_double(f.sigma);
            },
            [](spacing::TruncatedNormal const& f) {
                return "normal:" + format_double(f.mean) + "," + format_double(f.stddev);
            },
            [](spacing::PointMass const& f) { return "point:" + format_double(f.d0); },
        },
        family_);
}

std::map<std::string, std::string> SpacingModel::to_config() const
{
    return std::visit(
        overloaded{
            [](spacing::Exponential const& f) -> std::map<std::string, std::string> {
                return {{"spacing.family", "exponential"}, {"spacing.rho", format_double(f.rate)}};
            },
            [](spacing::Gamma const& f) -> std::map<std::string, std::string> {
                return {{"spacing.family", "gamma"},
                        {"spacing.shape", format_double(f.shape)},
                        {"spacing.scale", format_double(f.scale)}};
            },
            [](spacing::LogNormal const& f) -> std::map<std::string, std::string> {
                return {{"spacing.family", "lognormal"},
                        {"spacing.mu", format_double(f.mu)},
                        {"spacing.sigma", format_double(f.sigma)}};
            },
            [](spacing::TruncatedNormal const& f) -> std::map<std::string, std::string> {
                return {{"spacing.family", "truncated_normal"},
                        {"spacing.mean", format_double(f.mean)},
                        {"spacing.sd", format_double(f.stddev)}};
            },
            [](spacing::PointMass const& f) -> std::map<std::string, std::string> {
                return {{"spacing.family", "point_mass"}, {"spacing.d0", format_double(f.d0)}};
            },
        },
        family_);
}

}  // namespace vanetstat
