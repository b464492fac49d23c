// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/report.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

#include "vanetstat/format.hpp"

namespace vanetstat {

namespace {

std::string cell(std::optional<double> const& v)
{
    return v ? format_double(*v) : std::string();
}

nlohmann::json json_cell(std::optional<double> const& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void Report::add_meta(std::string key, std::string value)
{
    meta_.emplace_back(std::move(key), std::move(value));
}

void Report::add_pmf(Statistic stat, Pmf const& pmf)
{
    for (int r = pmf.support_min; r <= pmf.support_max(); ++r) {
        auto it = std::find_if(rows_.begin(), rows_.end(), [&](PmfRow const& row) {
            return row.statistic == stat && row.r == r;
        });
        if (it == rows_.end()) {
            rows_.push_back(PmfRow{stat, r, {}, {}, {}});
            it = rows_.end() - 1;
        }
        double const v = pmf.at(r);
        switch (pmf.source) {
        case PmfSource::analytic: it->analytic = v; break;
        case PmfSource::empirical: it->empirical = v; break;
        case PmfSource::oracle: it->oracle = v; break;
        }
    }
    std::stable_sort(rows_.begin(), rows_.end(), [](PmfRow const& a, PmfRow const& b) {
        if (a.statistic != b.statistic)
            return static_cast<int>(a.statistic) < static_cast<int>(b.statistic);
        return a.r < b.r;
    });
}

void Report::add_summary(std::string statistic, std::string quantity, std::string source,
                         double value)
{
    summary_.push_back({std::move(statistic), std::move(quantity), std::move(source), value});
}

void Report::write_header(std::ostream& os) const
{
    os << "# vanetstat " << kToolVersion << '\n';
    for (auto const& [key, value] : meta_)
        os << "# " << key << ": " << value << '\n';
}

void Report::write_pmf_csv(std::ostream& os) const
{
    write_header(os);
    os << "statistic,r,prob_analytic,prob_empirical,prob_oracle\n";
    for (auto const& row : rows_) {
        os << to_string(row.statistic) << ',' << row.r << ',' << cell(row.analytic) << ','
           << cell(row.empirical) << ',' << cell(row.oracle) << '\n';
    }
}

void Report::write_moments_csv(std::ostream& os) const
{
    write_header(os);
    os << "statistic,quantity,source,value\n";
    for (auto const& row : summary_) {
        os << row.statistic << ',' << row.quantity << ',' << row.source << ','
           << format_double(row.value) << '\n';
    }
}

void Report::write_json(std::ostream& os) const
{
    nlohmann::ordered_json doc;
    doc["tool"] = "vanetstat";
    doc["version"] = kToolVersion;
    auto& meta = doc["meta"] = nlohmann::ordered_json::object();
    for (auto const& [key, value] : meta_)
        meta[key] = value;
    auto& pmf = doc["pmf"] = nlohmann::ordered_json::array();
    for (auto const& row : rows_) {
        pmf.push_back({{"statistic", to_string(row.statistic)},
                       {"r", row.r},
                       {"prob_analytic", json_cell(row.analytic)},
                       {"prob_empirical", json_cell(row.empirical)},
                       {"prob_oracle", json_cell(row.oracle)}});
    }
    auto& moments = doc["moments"] = nlohmann::ordered_json::array();
    for (auto const& row : summary_) {
        moments.push_back({{"statistic", row.statistic},
                           {"quantity", row.quantity},
                           {"source", row.source},
                           {"value", row.value}});
    }
    os << doc.dump(2) << '\n';
}

std::filesystem::path moments_path_for(std::filesystem::path const& pmf_path)
{
    std::filesystem::path out = pmf_path;
    std::string ext = out.extension().string();
    out.replace_extension();
    out += ".moments" + (ext.empty() ? std::string(".csv") : ext);
    return out;
}

}  // namespace vanetstat
